#include "fitforge/parse.hpp"

#include <algorithm>
#include <cctype>

namespace fitforge {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Cursor {
public:
  Cursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw SyntaxError(std::string("expected ") + what, pos_);
  }
  std::size_t pos() const { return pos_; }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected integer", pos_);
    return Integer(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_start(text_[pos_]))
      throw SyntaxError("expected identifier", pos_);
    ++pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

// term := atom ('*' atom)*, atom := coef | var ('^' exp)?
Poly parse_term(Cursor& cur, const VarSet& vars) {
  Rational coef = 1;
  Monomial mono;
  bool first = true;
  for (;;) {
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = cur.integer();
      if (cur.accept('/')) {
        Integer den = cur.integer();
        if (den == 0) throw SyntaxError("zero denominator", cur.pos());
        coef *= Rational(num, den);
      } else {
        coef *= Rational(num);
      }
    } else if (ident_start(c)) {
      std::size_t at = cur.pos();
      std::string name = cur.identifier();
      auto v = vars.find(name);
      if (!v) throw unknown_variable(name);
      int e = 1;
      if (cur.accept('^')) {
        Integer exp = cur.integer();
        if (exp <= 0) throw SyntaxError("exponent must be positive", at);
        e = static_cast<int>(exp);
      }
      mono.set_exponent(*v, mono.exponent(*v) + e);
    } else {
      if (first) throw SyntaxError("expected term", cur.pos());
      throw SyntaxError("expected coefficient or variable", cur.pos());
    }
    first = false;
    if (!cur.accept('*')) break;
  }
  return Poly(mono, coef);
}

Poly parse_poly_at(Cursor& cur, const VarSet& vars) {
  Poly result;
  bool negate = false;
  if (cur.accept('-'))
    negate = true;
  else
    cur.accept('+');
  for (;;) {
    Poly term = parse_term(cur, vars);
    result += negate ? -term : term;
    if (cur.accept('-'))
      negate = true;
    else if (cur.accept('+'))
      negate = false;
    else
      break;
  }
  return result;
}

}  // namespace

Poly parse_poly(const std::string& text, const VarSet& vars) {
  Cursor cur(text);
  Poly p = parse_poly_at(cur, vars);
  if (!cur.done()) throw SyntaxError("trailing input", cur.pos());
  return p;
}

std::vector<Poly> parse_ideal_text(const std::string& text, const VarSet& vars) {
  Cursor cur(text);
  cur.expect('(', "'('");
  std::vector<Poly> gens;
  if (!cur.accept(')')) {
    for (;;) {
      gens.push_back(parse_poly_at(cur, vars));
      if (cur.accept(')')) break;
      cur.expect(',', "',' or ')'");
    }
  }
  if (!cur.done()) throw SyntaxError("trailing input", cur.pos());
  return gens;
}

std::vector<std::vector<Poly>> parse_matrix_text(const std::string& text,
                                                 const VarSet& vars) {
  Cursor cur(text);
  cur.expect('[', "'['");
  std::vector<std::vector<Poly>> rows;
  if (!cur.accept(']')) {
    for (;;) {
      cur.expect('[', "'['");
      std::vector<Poly> row;
      if (!cur.accept(']')) {
        for (;;) {
          row.push_back(parse_poly_at(cur, vars));
          if (cur.accept(']')) break;
          cur.expect(',', "',' or ']'");
        }
      }
      rows.push_back(std::move(row));
      if (cur.accept(']')) break;
      cur.expect(',', "',' or ']'");
    }
  }
  if (!cur.done()) throw SyntaxError("trailing input", cur.pos());
  if (rows.empty()) throw SyntaxError("empty matrix", 0);
  for (auto& r : rows)
    if (r.size() != rows.front().size()) throw SyntaxError("ragged matrix rows", 0);
  return rows;
}

std::vector<std::string> collect_identifiers(const std::string& text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      std::size_t start = i++;
      while (i < text.size() && ident_char(text[i])) ++i;
      std::string name = text.substr(start, i - start);
      if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace fitforge
