#include "fitforge/ideal.hpp"

#include <algorithm>

namespace fitforge {

namespace {

// Sort grlex-descending and drop any monomial divisible by another.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> keep;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) keep.push_back(gens[i]);
  }
  std::sort(keep.begin(), keep.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
  return keep;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(std::vector<Monomial> gens) {
  MonomialIdeal I;
  I.gens_ = minimalize(std::move(gens));
  return I;
}

MonomialIdeal MonomialIdeal::unit() { return principal(Monomial{}); }

MonomialIdeal MonomialIdeal::principal(const Monomial& m) {
  MonomialIdeal I;
  I.gens_ = {m};
  return I;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (auto& m : a.min_gens())
    for (auto& n : b.min_gens()) gens.push_back(m * n);
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, int e) {
  MonomialIdeal r = MonomialIdeal::unit();
  for (int i = 0; i < e; ++i) r = ideal_product(r, a);
  return r;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.min_gens();
  gens.insert(gens.end(), b.min_gens().begin(), b.min_gens().end());
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (auto& m : a.min_gens())
    for (auto& n : b.min_gens()) gens.push_back(Monomial::lcm(m, n));
  return MonomialIdeal::from_generators(std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I) {
  if (I.is_zero()) throw zero_ideal("colon by the zero ideal");
  bool first = true;
  MonomialIdeal result;
  for (auto& m : I.min_gens()) {
    // (J : m) is generated by n / gcd(n, m).
    std::vector<Monomial> gens;
    for (auto& n : J.min_gens()) gens.push_back(n / Monomial::gcd(n, m));
    MonomialIdeal q = MonomialIdeal::from_generators(std::move(gens));
    result = first ? q : ideal_intersect(result, q);
    first = false;
  }
  return result;
}

std::optional<Monomial> is_principal(const MonomialIdeal& I) {
  if (I.is_zero()) return std::nullopt;
  Monomial g = I.min_gens().front();
  for (auto& m : I.min_gens()) g = Monomial::gcd(g, m);
  for (auto& m : I.min_gens())
    if (m.divides(g)) return m;  // then I = (gcd) = (m)
  return std::nullopt;
}

bool fractional_equiv(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.is_zero() || J.is_zero()) throw zero_ideal("fractional_equiv");
  auto normalize = [](const MonomialIdeal& K) {
    Monomial g = K.min_gens().front();
    for (auto& m : K.min_gens()) g = Monomial::gcd(g, m);
    std::vector<Monomial> gens;
    for (auto& m : K.min_gens()) gens.push_back(m / g);
    return MonomialIdeal::from_generators(std::move(gens));
  };
  return normalize(I) == normalize(J);
}

std::optional<MoodyWitness> moody_dominates(const MonomialIdeal& I,
                                            const MonomialIdeal& J, int alpha_max) {
  if (I.is_zero() || J.is_zero()) throw zero_ideal("moody_dominates");
  for (int alpha = 1; alpha <= alpha_max; ++alpha) {
    MonomialIdeal ja = ideal_power(J, alpha);
    MonomialIdeal k = colon(ja, I);
    if (ideal_product(I, k) == ja) return MoodyWitness{alpha, k};
  }
  return std::nullopt;
}

IdealGens::IdealGens(std::vector<Poly> gens) {
  std::vector<Poly> nonzero;
  for (auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  monomial_ = true;
  for (auto& g : nonzero)
    if (!g.is_term()) monomial_ = false;
  if (monomial_ && !nonzero.empty()) {
    // Canonical minimal monomial form, coefficient 1.
    std::vector<Monomial> monos;
    for (auto& g : nonzero) monos.push_back(g.leading_monomial());
    for (auto& m : minimalize(std::move(monos))) gens_.emplace_back(m, 1);
  } else {
    gens_ = std::move(nonzero);
  }
}

IdealGens IdealGens::unit() { return IdealGens({Poly{Rational(1)}}); }

IdealGens IdealGens::from_monomial(const MonomialIdeal& I) {
  std::vector<Poly> gens;
  for (auto& m : I.min_gens()) gens.emplace_back(m, 1);
  return IdealGens(std::move(gens));
}

MonomialIdeal IdealGens::as_monomial() const {
  if (!monomial_) throw Error("not-monomial", "ideal is not monomial");
  std::vector<Monomial> gens;
  for (auto& g : gens_) gens.push_back(g.leading_monomial());
  return MonomialIdeal::from_generators(std::move(gens));
}

bool IdealGens::univariate(int* v) const {
  int var = -1;
  for (auto& g : gens_) {
    auto sv = g.single_variable();
    if (!sv) return false;
    if (*sv != -1) {
      if (var != -1 && var != *sv) return false;
      var = *sv;
    }
  }
  if (v) *v = var;
  return true;
}

bool IdealGens::is_unit() const {
  if (is_zero()) return false;
  for (auto& g : gens_)
    if (g.is_constant()) return true;  // non-zero by construction
  if (monomial_) return as_monomial().is_unit();
  int v;
  if (univariate(&v)) {
    Poly g;
    for (auto& p : gens_) g = univariate_gcd(g, p, v);
    return g.is_constant();
  }
  throw unit_detection_unsupported("generators are neither monomial nor univariate");
}

std::optional<Poly> IdealGens::principal_generator() const {
  if (is_zero()) return Poly{};
  if (gens_.size() == 1) return gens_.front();
  if (monomial_) {
    auto p = fitforge::is_principal(as_monomial());
    if (p) return Poly(*p, 1);
    return std::nullopt;
  }
  int v;
  if (univariate(&v)) {
    // A univariate ideal over a field is always principal.
    Poly g;
    for (auto& p : gens_) g = univariate_gcd(g, p, v);
    return g;
  }
  for (auto& g : gens_)
    if (g.is_constant()) return Poly{Rational(1)};
  throw unit_detection_unsupported("principality undecidable without Groebner bases");
}

std::string render_ideal(const MonomialIdeal& I, const VarSet& vars) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (auto& m : I.min_gens()) {
    if (!first) out += ", ";
    first = false;
    out += render_monomial(m, vars);
  }
  return out + ")";
}

std::string render_ideal(const IdealGens& I, const VarSet& vars) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (auto& g : I.generators()) {
    if (!first) out += ", ";
    first = false;
    out += render_poly(g, vars);
  }
  return out + ")";
}

}  // namespace fitforge
