#pragma once

#include <map>
#include <vector>

#include "fitforge/ideal.hpp"
#include "fitforge/poly.hpp"

namespace fitforge {

// A q x p polynomial matrix presenting the cokernel module M = coker(R^p -> R^q).
struct Presentation {
  int rows = 0;  // q, number of generators of M
  int cols = 0;  // p, number of relations
  std::vector<Poly> entries;  // row-major, rows*cols
  VarSet vars;

  Presentation() = default;
  Presentation(int q, int p, VarSet vs)
      : rows(q), cols(p), entries(static_cast<std::size_t>(q) * p), vars(std::move(vs)) {}
  static Presentation from_rows(const std::vector<std::vector<Poly>>& data, VarSet vs);

  Poly& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
  const Poly& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

// Ideal of (q-i) x (q-i) minors. (1) when q-i <= 0; (0) when the matrix has
// no minors of that size.
IdealGens fitting_ideal(const Presentation& A, int i);

// All k x k minors, exact cofactor expansion with memoization over
// row/column subsets.
std::vector<Poly> minors(const Presentation& A, int k);

struct FittingChain {
  std::vector<IdealGens> ideals;  // F_0 .. F_q
  int generic_rank = 0;           // least i with F_i != 0
  int maximal_rank = 0;           // least i with F_i = (1)
};

FittingChain rank_profile(const Presentation& A);

Presentation base_change(const Presentation& A, const std::map<int, Poly>& map);

struct NormIdeal {
  IdealGens ideal;
  std::vector<int> columns;  // chosen column subset, lexicographically first
};

// The norm of coker(A), represented by the (q-r) x (q-r) minor
// ideal of the first column subset with a non-zero minor ideal (r the
// generic rank). Any valid choice is fractional-ideal equivalent.
NormIdeal norm_ideal(const Presentation& A);

}  // namespace fitforge
