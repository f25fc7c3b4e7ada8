#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fitforge/poly.hpp"

namespace fitforge {

// Monomial ideal carried by its unique minimal generating set, sorted
// grlex-descending. No generator divides another.
class MonomialIdeal {
public:
  MonomialIdeal() = default;  // zero ideal
  static MonomialIdeal from_generators(std::vector<Monomial> gens);
  static MonomialIdeal unit();
  static MonomialIdeal principal(const Monomial& m);

  const std::vector<Monomial>& min_gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  // Monomial membership: some generator divides m.
  bool contains(const Monomial& m) const;
  // Ideal containment: every generator of other lies in *this.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal&) const = default;

private:
  std::vector<Monomial> gens_;
};

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, int e);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// (J : I); I must be non-zero.
MonomialIdeal colon(const MonomialIdeal& J, const MonomialIdeal& I);

// Generating monomial when the ideal is principal (gcd of the minimal
// generators is a multiple of some generator).
std::optional<Monomial> is_principal(const MonomialIdeal& I);

// Equality up to multiplication by a monomial: divide out the gcd of each
// generator set and compare. Both ideals must be non-zero.
bool fractional_equiv(const MonomialIdeal& I, const MonomialIdeal& J);

struct MoodyWitness {
  int alpha;
  MonomialIdeal k;
};

// Searches for a monomial fractional-ideal witness K with I*K = J^alpha.
// K is restricted to the colon-ideal candidate (J^alpha : I), the largest
// monomial candidate; absence of a witness up to alpha_max does not rule out
// a non-monomial one.
std::optional<MoodyWitness> moody_dominates(const MonomialIdeal& I,
                                            const MonomialIdeal& J,
                                            int alpha_max = 6);

// Finitely generated ideal by an explicit generator list. Monomial ideals get
// the complete algebra above; general ideals only carry their generators.
class IdealGens {
public:
  IdealGens() = default;  // zero ideal
  explicit IdealGens(std::vector<Poly> gens);
  static IdealGens unit();
  static IdealGens from_monomial(const MonomialIdeal& I);

  const std::vector<Poly>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool monomial_flag() const { return monomial_; }

  // Requires monomial_flag(); coefficients are dropped.
  MonomialIdeal as_monomial() const;

  // True when all generators involve at most one common variable; that
  // variable is written to *v (or -1 if constants only).
  bool univariate(int* v) const;

  // Unit-ideal test per the supported cases: a non-zero constant generator,
  // a monomial ideal, or a univariate ideal (gcd of generators constant).
  // Throws unit-detection-unsupported otherwise.
  bool is_unit() const;

  // Principal-ideal test with generator. Zero and unit ideals count as
  // principal. Throws unit-detection-unsupported in the undecidable case.
  std::optional<Poly> principal_generator() const;

  bool operator==(const IdealGens&) const = default;

private:
  std::vector<Poly> gens_;
  bool monomial_ = true;
};

std::string render_ideal(const MonomialIdeal& I, const VarSet& vars);
std::string render_ideal(const IdealGens& I, const VarSet& vars);

}  // namespace fitforge
