#include "fitforge/fitting.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace fitforge {

Presentation Presentation::from_rows(const std::vector<std::vector<Poly>>& data, VarSet vs) {
  int q = static_cast<int>(data.size());
  int p = q ? static_cast<int>(data.front().size()) : 0;
  Presentation A(q, p, std::move(vs));
  for (int r = 0; r < q; ++r) {
    if (static_cast<int>(data[r].size()) != p)
      throw Error("ragged-matrix", "rows of unequal length");
    for (int c = 0; c < p; ++c) A.at(r, c) = data[r][c];
  }
  return A;
}

namespace {

// Determinant of the submatrix picked by row/column index lists, by cofactor
// expansion along the first listed row. Memoized on the (rows, cols) bitmask
// pair; matrices in scope are small.
class MinorTable {
public:
  explicit MinorTable(const Presentation& A) : a_(A) {}

  Poly det(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty()) return Poly{Rational(1)};
    std::uint64_t key = mask(rows) | (static_cast<std::uint64_t>(mask(cols)) << 32);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Poly result;
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    int sign = 1;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Poly& e = a_.at(rows.front(), cols[j]);
      if (!e.is_zero()) {
        std::vector<int> subcols;
        for (std::size_t k = 0; k < cols.size(); ++k)
          if (k != j) subcols.push_back(cols[k]);
        Poly term = e * det(subrows, subcols);
        result += sign > 0 ? term : -term;
      }
      sign = -sign;
    }
    cache_.emplace(key, result);
    return result;
  }

private:
  static std::uint32_t mask(const std::vector<int>& idx) {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    return m;
  }
  const Presentation& a_;
  std::map<std::uint64_t, Poly> cache_;
};

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Poly> minors(const Presentation& A, int k) {
  std::vector<Poly> out;
  if (k > A.rows || k > A.cols) return out;
  MinorTable table(A);
  subsets(A.rows, k, [&](const std::vector<int>& rows) {
    subsets(A.cols, k, [&](const std::vector<int>& cols) {
      Poly d = table.det(rows, cols);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

IdealGens fitting_ideal(const Presentation& A, int i) {
  if (i < -1) throw Error("bad-index", "Fitting index must be >= -1");
  if (i == -1) return IdealGens{};
  int k = A.rows - i;
  if (k <= 0) return IdealGens::unit();
  return IdealGens(minors(A, k));
}

FittingChain rank_profile(const Presentation& A) {
  FittingChain chain;
  chain.generic_rank = -1;
  chain.maximal_rank = -1;
  for (int i = 0; i <= A.rows; ++i) {
    IdealGens f = fitting_ideal(A, i);
    if (chain.generic_rank < 0 && !f.is_zero()) chain.generic_rank = i;
    if (chain.maximal_rank < 0) {
      bool unit;
      try {
        unit = f.is_unit();
      } catch (const Error&) {
        unit = false;  // undecidable counts as non-unit; F_q = (1) closes the chain
      }
      if (unit) chain.maximal_rank = i;
    }
    chain.ideals.push_back(std::move(f));
  }
  // F_q = (1) by convention, so both are always found.
  return chain;
}

Presentation base_change(const Presentation& A, const std::map<int, Poly>& map) {
  Presentation B = A;
  for (auto& e : B.entries) e = e.substitute(map);
  return B;
}

NormIdeal norm_ideal(const Presentation& A) {
  // Generic rank without unit detection: least i with F_i != 0.
  int r = 0;
  while (r <= A.rows && fitting_ideal(A, r).is_zero()) ++r;
  int k = A.rows - r;
  if (k == 0) return NormIdeal{IdealGens::unit(), {}};
  if (A.cols < k)
    throw Error("no-valid-columns", "presentation has fewer relations than corank");
  NormIdeal result;
  bool found = false;
  subsets(A.cols, k, [&](const std::vector<int>& cols) {
    if (found) return;
    Presentation sub(A.rows, k, A.vars);
    for (int row = 0; row < A.rows; ++row)
      for (int c = 0; c < k; ++c) sub.at(row, c) = A.at(row, cols[c]);
    IdealGens ideal(minors(sub, k));
    if (!ideal.is_zero()) {
      result = NormIdeal{std::move(ideal), cols};
      found = true;
    }
  });
  if (!found) throw Error("no-valid-columns", "no column subset with non-zero minor ideal");
  return result;
}

}  // namespace fitforge
