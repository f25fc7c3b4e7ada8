#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace fitforge;
using testutil::Rng;

TEST_CASE("ring laws on random polynomials") {
  Rng rng(20240901);
  for (int trial = 0; trial < 500; ++trial) {
    Poly a = rng.poly(3, 4, 4);
    Poly b = rng.poly(3, 4, 4);
    Poly c = rng.poly(3, 4, 4);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Poly{} == a);
    CHECK(a * Poly(Rational(1)) == a);
    CHECK(a - a == Poly{});
    CHECK(a * Poly{} == Poly{});
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = rng.poly(3, 3, 3);
    Poly b = rng.poly(3, 3, 3);
    std::map<int, Poly> sub;
    for (int v = 0; v < 3; ++v)
      if (rng.uniform(0, 1)) sub[v] = rng.poly(3, 2, 2);
    CHECK((a + b).substitute(sub) == a.substitute(sub) + b.substitute(sub));
    CHECK((a * b).substitute(sub) == a.substitute(sub) * b.substitute(sub));
  }
}

TEST_CASE("parse/render round trip") {
  VarSet vars = testutil::xyz();
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    Poly p = rng.poly(3, 5, 5);
    std::string text = render_poly(p, vars);
    CHECK(parse_poly(text, vars) == p);
  }
  CHECK(render_poly(testutil::P("y + x", vars), vars) == "x + y");
  CHECK(render_poly(testutil::P("-1/2*x^2*y + 3", vars), vars) == "-1/2*x^2*y + 3");
  CHECK(render_poly(Poly{}, vars) == "0");
}

TEST_CASE("parser rejects malformed input") {
  VarSet vars = testutil::xyz();
  CHECK_THROWS_AS(parse_poly("x +", vars), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x^", vars), SyntaxError);
  CHECK_THROWS_AS(parse_poly("", vars), SyntaxError);
  CHECK_THROWS_AS(parse_poly("x*", vars), SyntaxError);
  CHECK_THROWS_AS(parse_poly("w", vars), Error);  // unknown variable
}

TEST_CASE("monomial content divides every term and is maximal") {
  Rng rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    Poly p = rng.poly(3, 4, 4);
    if (p.is_zero()) continue;
    Monomial content = p.monomial_content();
    for (auto& [m, coef] : p.terms()) CHECK(content.divides(m));
    Poly residual = p.divide_by_monomial(content);
    CHECK(residual.monomial_content() == Monomial{});
    CHECK(Poly(content) * residual == p);
  }
}

TEST_CASE("exact division inverts multiplication") {
  Rng rng(55);
  int hits = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Poly a = rng.poly(2, 3, 3);
    Poly b = rng.poly(2, 3, 3);
    if (b.is_zero()) continue;
    Poly prod = a * b;
    auto q = prod.try_divide(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    // A polynomial that is not a multiple must be rejected.
    Poly off = prod + Poly(Rational(1));
    if (!off.try_divide(b).has_value()) ++hits;
  }
  CHECK(hits > 0);
}

TEST_CASE("grlex order: higher degree first, then lexicographic") {
  Monomial x = Monomial::variable(0), y = Monomial::variable(1);
  CHECK(y < x);            // same degree, lex on first variable
  CHECK(x < x * x);        // degree dominates
  CHECK(x * y < x * x);
  VarSet vars = testutil::xyz();
  CHECK(render_poly(testutil::P("y^2 + x^2 + x*y + x + 1", vars), vars) ==
        "x^2 + x*y + y^2 + x + 1");
}

TEST_CASE("univariate division and gcd") {
  VarSet vars = testutil::xyz();
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = rng.univariate(0, 5, 4);
    Poly b = rng.univariate(0, 5, 4);
    if (b.is_zero()) continue;
    Poly q;
    Poly r = univariate_divmod(a, b, 0, &q);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
    if (!a.is_zero()) {
      Poly g = univariate_gcd(a, b, 0);
      CHECK(a.try_divide(g).has_value());
      CHECK(b.try_divide(g).has_value());
      CHECK(g.leading_coefficient() == 1);
    }
  }
}
