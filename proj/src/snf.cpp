#include "fitforge/snf.hpp"

#include <functional>

namespace fitforge {

namespace {

struct EuclidOps {
  // Non-negative size measure; smaller pivots are preferred.
  std::function<long(const Poly&)> norm;
  // a = q*b + r with norm(r) < norm(b); returns r, writes q.
  std::function<Poly(const Poly&, const Poly&, Poly*)> divmod;
  // Canonical associate (positive / monic) and the unit u with canon = a / u.
  std::function<Poly(const Poly&, Rational*)> canonical;
};

bool all_integer_constants(const Presentation& A) {
  for (auto& e : A.entries) {
    if (!e.is_constant()) return false;
    if (denominator(e.constant_value()) != 1) return false;
  }
  return true;
}

EuclidOps integer_ops() {
  EuclidOps ops;
  ops.norm = [](const Poly& p) {
    Integer n = numerator(p.constant_value());
    if (n < 0) n = -n;
    return static_cast<long>(n);  // matrices in scope are tiny
  };
  ops.divmod = [](const Poly& a, const Poly& b, Poly* q) {
    Integer an = numerator(a.constant_value()), bn = numerator(b.constant_value());
    Integer quo = an / bn;  // truncated
    Integer rem = an - quo * bn;
    if (q) *q = Poly{Rational(quo)};
    return Poly{Rational(rem)};
  };
  ops.canonical = [](const Poly& a, Rational* unit) {
    Rational v = a.constant_value();
    *unit = v < 0 ? Rational(-1) : Rational(1);
    return Poly{v < 0 ? Rational(-v) : v};
  };
  return ops;
}

EuclidOps poly_ops(int v) {
  EuclidOps ops;
  ops.norm = [](const Poly& p) { return static_cast<long>(p.degree() + 1); };
  ops.divmod = [v](const Poly& a, const Poly& b, Poly* q) {
    return univariate_divmod(a, b, v, q);
  };
  ops.canonical = [](const Poly& a, Rational* unit) {
    *unit = a.leading_coefficient();
    return a * (Rational(1) / *unit);
  };
  return ops;
}

Presentation identity(int n, const VarSet& vars) {
  Presentation I(n, n, vars);
  for (int i = 0; i < n; ++i) I.at(i, i) = Poly{Rational(1)};
  return I;
}

Presentation multiply(const Presentation& a, const Presentation& b) {
  Presentation c(a.rows, b.cols, a.vars);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      Poly s;
      for (int k = 0; k < a.cols; ++k) s += a.at(i, k) * b.at(k, j);
      c.at(i, j) = s;
    }
  return c;
}

// Maintains A = L * M * R through every elementary operation.
class SmithWorker {
public:
  SmithWorker(const Presentation& A, EuclidOps ops)
      : m_(A), l_(identity(A.rows, A.vars)), r_(identity(A.cols, A.vars)), ops_(std::move(ops)) {}

  void run() {
    int n = std::min(m_.rows, m_.cols);
    for (int t = 0; t < n; ++t)
      if (!step(t)) break;
  }

  Presentation& matrix() { return m_; }
  Presentation& left() { return l_; }
  Presentation& right() { return r_; }

private:
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m_.cols; ++c) std::swap(m_.at(i, c), m_.at(j, c));
    for (int rr = 0; rr < l_.rows; ++rr) std::swap(l_.at(rr, i), l_.at(rr, j));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int rr = 0; rr < m_.rows; ++rr) std::swap(m_.at(rr, i), m_.at(rr, j));
    for (int c = 0; c < r_.cols; ++c) std::swap(r_.at(i, c), r_.at(j, c));
  }
  // row_j += f * row_i
  void add_row(int j, int i, const Poly& f) {
    for (int c = 0; c < m_.cols; ++c) m_.at(j, c) += f * m_.at(i, c);
    for (int rr = 0; rr < l_.rows; ++rr) l_.at(rr, i) -= f * l_.at(rr, j);
  }
  // col_j += f * col_i
  void add_col(int j, int i, const Poly& f) {
    for (int rr = 0; rr < m_.rows; ++rr) m_.at(rr, j) += f * m_.at(rr, i);
    for (int c = 0; c < r_.cols; ++c) r_.at(i, c) -= f * r_.at(j, c);
  }
  void scale_col(int i, const Rational& u) {
    for (int rr = 0; rr < m_.rows; ++rr) m_.at(rr, i) = m_.at(rr, i) * u;
    Rational inv = Rational(1) / u;
    for (int c = 0; c < r_.cols; ++c) r_.at(i, c) = r_.at(i, c) * inv;
  }

  bool exact_divides(const Poly& d, const Poly& a) {
    if (a.is_zero()) return true;
    return ops_.divmod(a, d, nullptr).is_zero();
  }

  bool find_pivot(int t) {
    long best = -1;
    int bi = -1, bj = -1;
    for (int i = t; i < m_.rows; ++i)
      for (int j = t; j < m_.cols; ++j)
        if (!m_.at(i, j).is_zero()) {
          long n = ops_.norm(m_.at(i, j));
          if (best < 0 || n < best) best = n, bi = i, bj = j;
        }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  bool step(int t) {
    if (!find_pivot(t)) return false;
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m_.rows; ++i) {
        if (m_.at(i, t).is_zero()) continue;
        Poly q;
        Poly rem = ops_.divmod(m_.at(i, t), m_.at(t, t), &q);
        add_row(i, t, -q);
        if (!rem.is_zero()) {
          swap_rows(t, i);  // smaller pivot
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (int j = t + 1; j < m_.cols; ++j) {
        if (m_.at(t, j).is_zero()) continue;
        Poly q;
        Poly rem = ops_.divmod(m_.at(t, j), m_.at(t, t), &q);
        add_col(j, t, -q);
        if (!rem.is_zero()) {
          swap_cols(t, j);
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      // Pivot must divide the rest of the block for d_t | d_{t+1}.
      bool divides_all = true;
      for (int i = t + 1; i < m_.rows && divides_all; ++i)
        for (int j = t + 1; j < m_.cols && divides_all; ++j)
          if (!exact_divides(m_.at(t, t), m_.at(i, j))) {
            add_row(t, i, Poly{Rational(1)});
            divides_all = false;
          }
      if (divides_all) break;
    }
    Rational unit;
    Poly canon = ops_.canonical(m_.at(t, t), &unit);
    if (!(unit == Rational(1))) scale_col(t, Rational(1) / unit);
    (void)canon;
    return true;
  }

  Presentation m_, l_, r_;
  EuclidOps ops_;
};

}  // namespace

SmithResult smith_normal_form(const Presentation& A) {
  EuclidOps ops;
  if (all_integer_constants(A)) {
    ops = integer_ops();
  } else {
    int var = -1;
    for (auto& e : A.entries) {
      auto sv = e.single_variable();
      if (!sv) throw mixed_variable_entries();
      if (*sv != -1) {
        if (var != -1 && var != *sv) throw mixed_variable_entries();
        var = *sv;
      }
    }
    ops = poly_ops(var);
  }

  SmithWorker worker(A, ops);
  worker.run();

  SmithResult result;
  int n = std::min(A.rows, A.cols);
  Presentation d(A.rows, A.cols, A.vars);
  for (int t = 0; t < n; ++t) {
    result.diag.push_back(worker.matrix().at(t, t));
    d.at(t, t) = result.diag.back();
  }
  result.left = worker.left();
  result.right = worker.right();
  if (!(multiply(multiply(result.left, d), result.right).entries == A.entries))
    throw Error("snf-verify-failed", "A != L*D*R after Smith reduction");
  return result;
}

}  // namespace fitforge
