#pragma once

#include <vector>

#include "fitforge/fitting.hpp"

namespace fitforge {

// Smith normal form of a matrix whose entries are either all univariate in one
// variable or all integer constants. A = L * D * R with L, R invertible and
// the diagonal entries d_1 | d_2 | ... (trailing zeros allowed). The identity
// A = L*D*R is verified before returning.
struct SmithResult {
  std::vector<Poly> diag;  // min(rows, cols) entries, divisibility-sorted
  Presentation left;       // q x q
  Presentation right;      // p x p
};

SmithResult smith_normal_form(const Presentation& A);

}  // namespace fitforge
