#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "mbb/charsuite.hpp"
#include "mbb/mbba.hpp"
#include "mbb/random.hpp"
#include "oracles.hpp"

using namespace mbb;
using fx::MT;
using fx::P;
using fx::V;

TEST_CASE("prebasis from the example vectors") {
  auto g = fx::example_prebasis();
  CHECK(g.size() == 7);
  CHECK(g.om().size() == 6);
  // G1 = x^2 e1 - y e1 + e2: c_{2,1} = 1 (y e1), c_{6,1} = -1 (e2)
  CHECK(g.coeff(1, 0) == 1);
  CHECK(g.coeff(5, 0) == -1);
  CHECK(g.coeff(0, 0) == 0);
  CHECK(g.coeff(2, 5) == -3);
  for (std::size_t j = 0; j < 7; ++j)
    CHECK(g.vector(j) == fx::example_prebasis_vectors()[j]);
  CHECK(Prebasis(g.om(), g.columns()) == g);
}

TEST_CASE("prebasis vectors are accepted in any order and normalized") {
  auto vs = fx::example_prebasis_vectors();
  std::reverse(vs.begin(), vs.end());
  vs[0] *= Rat(-2);
  CHECK(Prebasis::from_vectors(fx::example_om(), vs) == fx::example_prebasis());
}

TEST_CASE("malformed prebases are rejected") {
  auto om = fx::example_om();
  auto vs = fx::example_prebasis_vectors();
  auto missing = vs;
  missing.pop_back();
  CHECK_THROWS_AS(Prebasis::from_vectors(om, missing), MathError);
  auto twice = vs;
  twice[0] = V("x^2*e1 + x*y*e1");
  CHECK_THROWS_AS(Prebasis::from_vectors(om, twice), MathError);
  auto outside = vs;
  outside[0] = V("x^2*e1 + x^5*e1");
  CHECK_THROWS_AS(Prebasis::from_vectors(om, outside), MathError);
  CHECK_THROWS_AS(Prebasis(om, {}), std::invalid_argument);
}

TEST_CASE("golden division") {
  auto g = fx::example_prebasis();
  VecP v = fx::division_input();
  auto r = divide(g, v);
  std::vector<Poly> expected{P("x"), P("2"), Poly(2), P("y"), Poly(2), Poly(2), Poly(2)};
  CHECK(r.quotients == expected);
  VecP nr = remainder_vector(g.om(), r.coords);
  CHECK(nr == V("y*e1 - x*e2 + 2*e2"));
  CHECK(normal_remainder(g, v) == nr);
  CHECK(oracle::recombine(g, r.quotients, nr) == v);

  Rng rng(31);
  for (int s = 0; s < 50; ++s) {
    auto rs = divide(g, v, &rng);
    CHECK(rs.quotients == expected);
    CHECK(rs.coords == r.coords);
  }
}

TEST_CASE("rewrite steps") {
  auto g = fx::example_prebasis();
  // x^3 e1 = x * (x^2 e1): replaced by x (y e1 - e2)
  VecP w = rewrite_step(g, V("x^3*e1"), MT("x^3*e1"), 0);
  CHECK(w == V("x*y*e1 - x*e2"));
  CHECK(rewrite_step(g, V("5*y*e2 + e1"), MT("y*e2"), 6) ==
        V("5*x*e1 + 5*y*e1 + 6*e1 + 5*e2"));
}

TEST_CASE("division on random prebases") {
  Rng rng(32);
  for (int c = 0; c < 200; ++c) {
    auto om = random_order_module(rng, 2, 2, 7, true);
    if (om.border_size() == 0)
      continue;
    auto g = random_prebasis(rng, om, 0.4);
    VecP v = random_vector(rng, 2, 2, 4, 5);
    if (v.is_zero())
      continue;
    auto r = divide(g, v);
    VecP nr = remainder_vector(om, r.coords);
    CHECK(oracle::recombine(g, r.quotients, nr) == v);
    unsigned ind = om.index(v);
    for (const auto &p : r.quotients)
      if (!p.is_zero())
        CHECK(p.degree() <= static_cast<int>(ind) - 1);
    for (const auto &[m, a] : nr.terms())
      CHECK(om.contains(m));
    auto rs = divide(g, v, &rng);
    CHECK(rs.quotients == r.quotients);
    CHECK(rs.coords == r.coords);
  }
}

TEST_CASE("normal forms for certified bases") {
  auto [om, g] = module_border_basis(fx::mbba_generators(), TermOrder());
  auto bb = certify_border_basis(g);
  REQUIRE(bb.has_value());
  CHECK_FALSE(certify_border_basis(fx::example_prebasis()).has_value());
  for (const auto &gen : fx::mbba_generators())
    CHECK(normal_form(*bb, gen).is_zero());
  Rng rng(33);
  for (int c = 0; c < 100; ++c) {
    VecP a = random_vector(rng, 2, 2, 3, 4), b = random_vector(rng, 2, 2, 3, 4);
    CHECK(normal_form(*bb, a + b) == normal_form(*bb, a) + normal_form(*bb, b));
    // v - NF(v) lies in U, so multiplying commutes with NF
    Poly p = random_poly(rng, 2, 2, 2);
    CHECK(normal_form(*bb, p * a) == normal_form(*bb, p * normal_form(*bb, a)));
  }
}
