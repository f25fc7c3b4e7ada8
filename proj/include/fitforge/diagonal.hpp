#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fitforge/fitting.hpp"

namespace fitforge {

// Diagonal reduction Diag(f_1, ..., f_k) with f_i | f_{i+1}, entries monic.
// free_rank counts zero rows of the diagonal form (free summands of the
// cokernel); kernel_rank counts zero columns.
struct DiagonalForm {
  std::vector<Poly> entries;
  int free_rank = 0;
  int kernel_rank = 0;
  std::vector<std::string> provenance;  // row/column operations applied
};

// The block on which reduction got stuck: no entry divides all others.
struct Obstruction {
  Presentation block;
};

using DiagonalizeResult = std::variant<DiagonalForm, Obstruction>;

// Reduce by repeatedly pivoting on an entry dividing every entry of the
// current block. Failure is a value, signaling that a localization or
// blow-up is required.
DiagonalizeResult diagonalize_local(const Presentation& A);

struct DiagonalModuleCheck {
  bool diagonal;
  int failing_index = -1;  // least i with F_i not principal, when !diagonal
};

// True iff every Fitting ideal of A is principal.
DiagonalModuleCheck is_diagonal_module(const Presentation& A);

// Cartier divisors D_i from ratios of successive diagonal entries.
// D_n = (f_1) and D_i = (f_{n-i+1} / f_{n-i}) for 1 <= i < n; the graded
// piece at i is free of rank i on V(D_i), empty when D_i = (1).
struct Filtration {
  struct Piece {
    int index;          // i, which is also the rank of the graded piece
    Monomial divisor;   // generator of D_i
    bool empty;         // D_i = (1)
  };
  std::vector<Piece> pieces;  // D_1 .. D_n
};

// Requires monomial entries. The multiplicative relations
// F_k = prod_{i>k} D_i^{i-k} are asserted before returning.
Filtration filtration(const DiagonalForm& d);

struct ConeComponents {
  int main_rank;  // generic rank r, supported on the whole space
  struct Torsion {
    int variable;  // support V(variable)
    int rank;      // max{ i : variable | gen(D_i) }, plus r
  };
  std::vector<Torsion> torsion;
};

// Components of the abelian cone of a diagonal module with generic rank r;
// supports are coordinate hyperplanes of variables dividing some D_i.
ConeComponents cone_components(const DiagonalForm& d, int generic_rank);

}  // namespace fitforge
