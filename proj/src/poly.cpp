#include "fitforge/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fitforge {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    auto [it, fresh] = index_.emplace(names_[i], i);
    if (!fresh) throw Error("duplicate-variable", "duplicate variable '" + names_[i] + "'");
  }
}

VarSet VarSet::from_csv(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) names.push_back(cur);
  return VarSet(names);
}

std::optional<int> VarSet::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Monomial Monomial::variable(int v, int e) {
  Monomial m;
  if (e != 0) m.exps_[v] = e;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent(int v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

void Monomial::set_exponent(int v, int e) {
  if (e == 0)
    exps_.erase(v);
  else
    exps_[v] = e;
}

bool Monomial::divides(const Monomial& other) const {
  for (auto& [v, e] : exps_)
    if (other.exponent(v) < e) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (auto& [v, e] : other.exps_) r.set_exponent(v, r.exponent(v) + e);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (auto& [v, e] : other.exps_) r.set_exponent(v, r.exponent(v) - e);
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (auto& [v, e] : a.exps_) {
    int m = std::min(e, b.exponent(v));
    if (m > 0) r.exps_[v] = m;
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (auto& [v, e] : b.exps_) r.set_exponent(v, std::max(r.exponent(v), e));
  return r;
}

bool Monomial::operator<(const Monomial& other) const {
  int da = degree(), db = other.degree();
  if (da != db) return da < db;
  // Same degree: lexicographic with earlier variables larger.
  auto ia = exps_.begin();
  auto ib = other.exps_.begin();
  while (ia != exps_.end() && ib != other.exps_.end()) {
    if (ia->first != ib->first)
      return ia->first > ib->first;  // other has the earlier variable
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia, ++ib;
  }
  return false;  // equal (degrees matched so both ended)
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_[Monomial{}] = c;
}

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_[m] = c;
}

Poly Poly::variable(int v) { return Poly(Monomial::variable(v)); }

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_value() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw zero_polynomial();
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw zero_polynomial();
  return terms_.rbegin()->second;
}

int Poly::degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r;
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.terms_[m] = k * c;
  return r;
}

Poly Poly::pow(int e) const {
  Poly r{Rational(1)};
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Poly Poly::substitute(const std::map<int, Poly>& map) const {
  Poly result;
  for (auto& [m, c] : terms_) {
    Poly term{c};
    for (auto& [v, e] : m.exponents()) {
      auto it = map.find(v);
      if (it == map.end())
        term = term * Poly(Monomial::variable(v, e));
      else
        term = term * it->second.pow(e);
    }
    result += term;
  }
  return result;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) throw zero_polynomial();
  auto it = terms_.begin();
  Monomial content = it->first;
  for (++it; it != terms_.end(); ++it) content = Monomial::gcd(content, it->first);
  return content;
}

Poly Poly::divide_by_monomial(const Monomial& m) const {
  Poly r;
  for (auto& [mm, c] : terms_) {
    if (!m.divides(mm)) throw Error("non-divisible", "monomial does not divide every term");
    r.terms_[mm / m] = c;
  }
  return r;
}

std::optional<Poly> Poly::try_divide(const Poly& d) const {
  if (d.is_zero()) throw zero_polynomial();
  Poly rem = *this;
  Poly quot;
  const Monomial& dlm = d.leading_monomial();
  const Rational& dlc = d.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& lm = rem.leading_monomial();
    if (!dlm.divides(lm)) return std::nullopt;
    Poly t(lm / dlm, rem.leading_coefficient() / dlc);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::vector<int> Poly::support() const {
  std::set<int> vars;
  for (auto& [m, c] : terms_)
    for (auto& [v, e] : m.exponents()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

std::optional<int> Poly::single_variable() const {
  auto vars = support();
  if (vars.empty()) return -1;
  if (vars.size() == 1) return vars.front();
  return std::nullopt;
}

Poly univariate_divmod(const Poly& a, const Poly& b, int v, Poly* quotient) {
  if (b.is_zero()) throw zero_polynomial();
  Poly rem = a, quot;
  int db = b.degree();
  const Rational& blc = b.leading_coefficient();
  while (!rem.is_zero() && rem.degree() >= db) {
    Poly t(Monomial::variable(v, rem.degree() - db), rem.leading_coefficient() / blc);
    quot += t;
    rem -= t * b;
  }
  if (quotient) *quotient = quot;
  return rem;
}

Poly univariate_gcd(const Poly& a, const Poly& b, int v) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = univariate_divmod(x, y, v, nullptr);
    x = y;
    y = r;
  }
  if (!x.is_zero()) x = x * (Rational(1) / x.leading_coefficient());  // monic
  return x;
}

std::string render_monomial(const Monomial& m, const VarSet& vars) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, e] : m.exponents()) {
    if (!first) os << "*";
    first = false;
    os << vars.name(v);
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

namespace {

std::string render_rational(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

std::string render_poly(const Poly& p, const VarSet& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest term first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << render_rational(abs);
    } else {
      if (abs != 1) os << render_rational(abs) << "*";
      os << render_monomial(m, vars);
    }
  }
  return os.str();
}

}  // namespace fitforge
