#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fitforge/diagonal.hpp"
#include "fitforge/snf.hpp"
#include "test_util.hpp"

using namespace fitforge;
using testutil::Rng;

namespace {

Presentation diag_presentation(const std::vector<Poly>& entries, const VarSet& vars) {
  int n = static_cast<int>(entries.size());
  Presentation A(n, n, vars);
  for (int i = 0; i < n; ++i) A.at(i, i) = entries[i];
  return A;
}

}  // namespace

TEST_CASE("golden filtration of Diag(x, x, xy, xyz)") {
  VarSet vars = testutil::xyz();
  DiagonalForm d;
  for (auto text : {"x", "x", "x*y", "x*y*z"}) d.entries.push_back(testutil::P(text, vars));
  Filtration f = filtration(d);
  REQUIRE(f.pieces.size() == 4);
  auto piece = [&](int i) { return f.pieces[i - 1]; };
  CHECK(render_monomial(piece(4).divisor, vars) == "x");
  CHECK(piece(3).empty);
  CHECK(render_monomial(piece(2).divisor, vars) == "y");
  CHECK(render_monomial(piece(1).divisor, vars) == "z");

  // The product relation reproduces the Fitting chain of the diagonal matrix.
  Presentation A = diag_presentation(d.entries, vars);
  CHECK(fitting_ideal(A, 0) == testutil::I("(x^4*y^2*z)", vars));
  CHECK(fitting_ideal(A, 1) == testutil::I("(x^3*y)", vars));
  CHECK(fitting_ideal(A, 2) == testutil::I("(x^2)", vars));
  CHECK(fitting_ideal(A, 3) == testutil::I("(x)", vars));
}

TEST_CASE("golden cone components of Diag(x, x, xy, xyz)") {
  VarSet vars = testutil::xyz();
  DiagonalForm d;
  for (auto text : {"x", "x", "x*y", "x*y*z"}) d.entries.push_back(testutil::P(text, vars));
  ConeComponents cone = cone_components(d, 0);
  CHECK(cone.main_rank == 0);
  REQUIRE(cone.torsion.size() == 3);
  std::map<std::string, int> ranks;
  for (auto& t : cone.torsion) ranks[vars.name(t.variable)] = t.rank;
  CHECK(ranks["x"] == 4);
  CHECK(ranks["y"] == 2);
  CHECK(ranks["z"] == 1);
}

TEST_CASE("restriction oracle confirms the component ranks") {
  // Rank over V(v): set v = 0 and count diagonal entries that vanish; those
  // rows become free over the support.
  VarSet vars = testutil::xyz();
  DiagonalForm d;
  for (auto text : {"x", "x", "x*y", "x*y*z"}) d.entries.push_back(testutil::P(text, vars));
  ConeComponents cone = cone_components(d, 0);
  for (auto& t : cone.torsion) {
    std::map<int, Poly> kill{{t.variable, Poly{}}};
    int vanishing = 0;
    for (auto& e : d.entries)
      if (e.substitute(kill).is_zero()) ++vanishing;
    CHECK(t.rank == cone.main_rank + vanishing);
  }
}

TEST_CASE("diagonalize succeeds exactly when every Fitting ideal is principal") {
  Rng rng(5150);
  VarSet vars = VarSet::from_csv("t");
  for (int trial = 0; trial < 200; ++trial) {
    int q = rng.uniform(1, 3), p = rng.uniform(1, 3);
    Presentation A(q, p, vars);
    for (int r = 0; r < q; ++r)
      for (int c = 0; c < p; ++c)
        A.at(r, c) = rng.uniform(0, 3) == 0 ? Poly{} : rng.univariate(0, 2, 2);

    DiagonalModuleCheck check = is_diagonal_module(A);
    CHECK(check.diagonal);  // univariate ideals are always principal
    auto result = diagonalize_local(A);

    // Cross-check the reduction against Smith normal form: a univariate
    // matrix always reduces, with the same invariant factors.
    SmithResult s = smith_normal_form(A);
    REQUIRE(std::holds_alternative<DiagonalForm>(result));
    auto& form = std::get<DiagonalForm>(result);
    std::vector<Poly> expected;
    for (auto& e : s.diag)
      if (!e.is_zero()) expected.push_back(e * (Rational(1) / e.leading_coefficient()));
    CHECK(form.entries == expected);
  }
}

TEST_CASE("multivariate obstruction is reported as a value") {
  VarSet vars = testutil::xyz();
  Presentation A = testutil::M("[[x,0],[0,y]]", vars);
  auto result = diagonalize_local(A);
  REQUIRE(std::holds_alternative<Obstruction>(result));
  CHECK(std::get<Obstruction>(result).block.rows == 2);
  CHECK_FALSE(is_diagonal_module(A).diagonal);
  CHECK(is_diagonal_module(A).failing_index == 1);  // F_1 = (x, y)
}

TEST_CASE("divisibility chain and exponent relation on random chains") {
  Rng rng(31337);
  VarSet vars = testutil::xyz();
  for (int trial = 0; trial < 100; ++trial) {
    // Build a divisibility chain by multiplying up random monomials.
    int n = rng.uniform(1, 6);
    DiagonalForm d;
    Monomial acc = rng.monomial(3, 1);
    for (int i = 0; i < n; ++i) {
      d.entries.push_back(Poly(acc));
      acc = acc * rng.monomial(3, 1);
    }
    Filtration f = filtration(d);  // throws if F_k != prod D_i^{i-k}
    REQUIRE(static_cast<int>(f.pieces.size()) == n);
    // D_n recovers the smallest entry; the pieces multiply back to the top.
    Monomial top;
    for (auto& piece : f.pieces) top = top * piece.divisor;
    CHECK(Poly(top) == d.entries.back());
  }
}

TEST_CASE("non-chain entries are rejected") {
  VarSet vars = testutil::xyz();
  DiagonalForm d;
  d.entries = {testutil::P("x", vars), testutil::P("y", vars)};
  CHECK_THROWS_AS(filtration(d), Error);
  DiagonalForm e;
  e.entries = {testutil::P("x + y", vars)};
  CHECK_THROWS_AS(filtration(e), Error);
}
