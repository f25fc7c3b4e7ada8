#include "fitforge/diagonal.hpp"

#include "fitforge/snf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fitforge {

namespace {

struct Block {
  std::vector<std::vector<Poly>> m;  // rows x cols
  int rows() const { return static_cast<int>(m.size()); }
  int cols() const { return m.empty() ? 0 : static_cast<int>(m.front().size()); }
};

bool all_zero(const Block& b) {
  for (auto& row : b.m)
    for (auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

}  // namespace

DiagonalizeResult diagonalize_local(const Presentation& A) {
  Block block;
  block.m.resize(A.rows);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) block.m[r].push_back(A.at(r, c));

  DiagonalForm form;
  while (block.rows() > 0 && block.cols() > 0 && !all_zero(block)) {
    // Find a non-zero entry dividing every other entry.
    int pr = -1, pc = -1;
    for (int i = 0; i < block.rows() && pr < 0; ++i)
      for (int j = 0; j < block.cols() && pr < 0; ++j) {
        const Poly& cand = block.m[i][j];
        if (cand.is_zero()) continue;
        bool divides_all = true;
        for (int r = 0; r < block.rows() && divides_all; ++r)
          for (int c = 0; c < block.cols() && divides_all; ++c)
            if (!block.m[r][c].is_zero() && !block.m[r][c].try_divide(cand))
              divides_all = false;
        if (divides_all) pr = i, pc = j;
      }
    if (pr < 0) {
      Presentation rest(block.rows(), block.cols(), A.vars);
      for (int r = 0; r < block.rows(); ++r)
        for (int c = 0; c < block.cols(); ++c) rest.at(r, c) = block.m[r][c];
      // No entry divides all others. Over a principal ideal domain a pivot
      // can still be produced by Euclidean row operations, so finish the
      // univariate (or constant) case through Smith normal form.
      try {
        SmithResult s = smith_normal_form(rest);
        int nonzero = 0;
        for (auto& e : s.diag)
          if (!e.is_zero()) {
            form.entries.push_back(e * (Rational(1) / e.leading_coefficient()));
            ++nonzero;
          }
        form.provenance.push_back("euclidean reduction of the residual block");
        form.free_rank = block.rows() - nonzero;
        form.kernel_rank = block.cols() - nonzero;
        return form;
      } catch (const Error&) {
        return Obstruction{std::move(rest)};
      }
    }
    if (pr != 0) {
      std::swap(block.m[pr], block.m[0]);
      form.provenance.push_back("swap rows " + std::to_string(pr) + ",0");
    }
    if (pc != 0) {
      for (auto& row : block.m) std::swap(row[pc], row[0]);
      form.provenance.push_back("swap cols " + std::to_string(pc) + ",0");
    }
    const Poly pivot = block.m[0][0];
    for (int r = 1; r < block.rows(); ++r) {
      if (block.m[r][0].is_zero()) continue;
      Poly f = *block.m[r][0].try_divide(pivot);
      for (int c = 0; c < block.cols(); ++c) block.m[r][c] -= f * block.m[0][c];
      form.provenance.push_back("row " + std::to_string(r) + " -= quotient*row 0");
    }
    for (int c = 1; c < block.cols(); ++c) {
      if (block.m[0][c].is_zero()) continue;
      Poly f = *block.m[0][c].try_divide(pivot);
      for (int r = 0; r < block.rows(); ++r) block.m[r][c] -= f * block.m[r][0];
      form.provenance.push_back("col " + std::to_string(c) + " -= quotient*col 0");
    }
    form.entries.push_back(pivot * (Rational(1) / pivot.leading_coefficient()));
    block.m.erase(block.m.begin());
    for (auto& row : block.m) row.erase(row.begin());
  }
  form.free_rank = block.rows();
  form.kernel_rank = block.cols();
  return form;
}

DiagonalModuleCheck is_diagonal_module(const Presentation& A) {
  for (int i = 0; i <= A.rows; ++i) {
    IdealGens f = fitting_ideal(A, i);
    if (!f.principal_generator()) return {false, i};
  }
  return {true, -1};
}

Filtration filtration(const DiagonalForm& d) {
  int n = static_cast<int>(d.entries.size());
  if (n == 0) throw Error("empty-diagonal", "filtration needs at least one entry");
  std::vector<Monomial> monos;
  for (auto& f : d.entries) {
    if (!f.is_term()) throw Error("non-monomial-entry", "filtration needs monomial entries");
    monos.push_back(f.leading_monomial());
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!monos[i].divides(monos[i + 1]))
      throw Error("divisibility-violation", "diagonal entries must form a divisibility chain");

  Filtration result;
  result.pieces.resize(n);
  for (int i = 1; i <= n; ++i) {
    Monomial gen = (i == n) ? monos[0] : monos[n - i] / monos[n - i - 1];
    result.pieces[i - 1] = {i, gen, gen.is_one()};
  }

  // F_k = prod_{i>k} D_i^{i-k}, as exponent arithmetic on monomials.
  for (int k = 0; k < n; ++k) {
    Monomial fk;
    for (int i = 0; i < n - k; ++i) fk = fk * monos[i];
    Monomial prod;
    for (int i = k + 1; i <= n; ++i) {
      const Monomial& di = result.pieces[i - 1].divisor;
      for (int e = 0; e < i - k; ++e) prod = prod * di;
    }
    if (!(fk == prod))
      throw Error("filtration-relation-failed", "F_k != prod D_i^{i-k} at k=" + std::to_string(k));
  }
  return result;
}

ConeComponents cone_components(const DiagonalForm& d, int generic_rank) {
  ConeComponents result;
  result.main_rank = generic_rank;
  if (d.entries.empty()) return result;
  Filtration filt = filtration(d);
  std::map<int, int> rank_by_var;
  for (auto& piece : filt.pieces)
    for (auto& [v, e] : piece.divisor.exponents())
      rank_by_var[v] = std::max(rank_by_var[v], piece.index);
  for (auto& [v, r] : rank_by_var)
    result.torsion.push_back({v, generic_rank + r});
  return result;
}

}  // namespace fitforge
