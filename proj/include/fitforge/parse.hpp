#pragma once

#include <string>
#include <vector>

#include "fitforge/poly.hpp"

namespace fitforge {

// Polynomial text grammar: signed terms joined by + and -; a term is
// `coef`, `coef*mono` or `mono`; coef is an integer or `a/b`; mono is `v^e`
// factors joined by `*`. Identifiers: [A-Za-z][A-Za-z0-9_']*.
Poly parse_poly(const std::string& text, const VarSet& vars);

// Ideal text form: comma-separated generators inside parentheses.
std::vector<Poly> parse_ideal_text(const std::string& text, const VarSet& vars);

// Matrix text form: rows in brackets, e.g. [[y, z, 0], [-x, 0, z]].
std::vector<std::vector<Poly>> parse_matrix_text(const std::string& text,
                                                 const VarSet& vars);

// Identifiers occurring in a polynomial/ideal/matrix text, in order of first
// appearance. Used to build a VarSet when none is given.
std::vector<std::string> collect_identifiers(const std::string& text);

}  // namespace fitforge
