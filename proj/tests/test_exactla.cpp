#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "mbb/exactla.hpp"
#include "mbb/groebner.hpp"
#include "mbb/random.hpp"
#include "oracles.hpp"

using namespace mbb;
using fx::MTs;
using fx::V;

static RatMatrix random_matrix(Rng &rng, std::size_t r, std::size_t c) {
  RatMatrix m(r, c);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng))
        m(i, j) = random_rat(rng, 3, 2);
  return m;
}

TEST_CASE("rref of a fixed matrix") {
  RatMatrix m{{0, 2, 4, 2}, {1, 1, 1, 1}, {1, 2, 3, 2}};
  auto r = rref(m);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1});
  CHECK(r.matrix == RatMatrix{{1, 0, -1, 0}, {0, 1, 2, 1}, {0, 0, 0, 0}});
}

TEST_CASE("rref against minors") {
  Rng rng(21);
  for (int c = 0; c < 200; ++c) {
    std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    RatMatrix m = random_matrix(rng, rows, cols);
    auto r = rref(m);
    CHECK(r.rank() == oracle::rank_by_minors(m));
    // idempotent, pivots increasing with unit pivot columns
    CHECK(rref(r.matrix).matrix == r.matrix);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      if (k > 0)
        CHECK(r.pivots[k - 1] < r.pivots[k]);
      for (std::size_t i = 0; i < rows; ++i)
        CHECK(r.matrix(i, r.pivots[k]) == (i == k ? 1 : 0));
      for (std::size_t j = 0; j < r.pivots[k]; ++j)
        CHECK(r.matrix(k, j) == 0);
    }
    // same row space: stacking does not raise the rank
    RatMatrix both(2 * rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        both(i, j) = m(i, j);
        both(rows + i, j) = r.matrix(i, j);
      }
    CHECK(oracle::rank_by_minors(both) == r.rank());
  }
}

TEST_CASE("matrix arithmetic") {
  RatMatrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
  CHECK(a * b == RatMatrix{{2, 1}, {4, 3}});
  CHECK(a * RatMatrix::identity(2) == a);
  CHECK(a + b == RatMatrix{{1, 3}, {4, 4}});
  CHECK(Rat(2) * b == RatMatrix{{0, 2}, {2, 0}});
  CHECK(a * std::vector<Rat>{1, 1} == std::vector<Rat>{3, 7});
}

TEST_CASE("coordinates round trip") {
  auto u = MTs({"x*e1", "e1", "e2"});
  VecP v = V("2*x*e1 - 1/3*e2");
  auto c = coordinates(v, u);
  CHECK(c == std::vector<Rat>{2, 0, make_rat(-1, 3)});
  CHECK(from_coordinates(c, u, 2, 2) == v);
  CHECK_THROWS(coordinates(V("y*e1"), u));
}

TEST_CASE("span basis") {
  Rng rng(22);
  TermOrder o;
  for (int c = 0; c < 150; ++c) {
    std::vector<VecP> vs;
    std::size_t n = 1 + rng() % 4;
    for (std::size_t i = 0; i < n; ++i)
      vs.push_back(random_vector(rng, 2, 2, 1, 3));
    auto u = module_terms_up_to(2, 2, 1, o);
    auto b = span_basis(vs, u);
    CHECK(b.size() == oracle::rank_of(vs));
    for (const auto &v : vs)
      CHECK(oracle::in_span(b, v));
    for (const auto &w : b)
      CHECK(oracle::in_span(vs, w));
  }
}

TEST_CASE("intersection with a coordinate space") {
  Rng rng(23);
  TermOrder o;
  auto all = module_terms_up_to(2, 2, 1, o);
  for (int c = 0; c < 150; ++c) {
    std::vector<VecP> vs;
    std::size_t n = 1 + rng() % 5;
    for (std::size_t i = 0; i < n; ++i)
      vs.push_back(random_vector(rng, 2, 2, 1, 4));
    std::vector<ModuleTerm> keep;
    for (const auto &m : all)
      if (rng() % 2)
        keep.push_back(m);
    auto w = intersect_with_coordinate_space(vs, keep, o);
    std::set<ModuleTerm> ks(keep.begin(), keep.end());
    std::vector<VecP> units;
    for (const auto &m : keep)
      units.push_back(VecP::monomial(2, m, Rat(1)));
    for (const auto &x : w) {
      for (const auto &[m, a] : x.terms())
        CHECK(ks.count(m));
      CHECK(oracle::in_span(vs, x));
    }
    // dim(V ∩ K) = dim V + dim K - dim(V + K)
    auto sum = vs;
    sum.insert(sum.end(), units.begin(), units.end());
    std::size_t expected = oracle::rank_of(vs) + keep.size() - oracle::rank_of(sum);
    CHECK(oracle::rank_of(w) == w.size());
    CHECK(w.size() == expected);
  }
}

TEST_CASE("module terms up to a degree are σ-descending") {
  TermOrder o;
  auto l = module_terms_up_to(2, 2, 2, o);
  CHECK(l.size() == 12);
  for (std::size_t i = 1; i < l.size(); ++i)
    CHECK(o.greater(l[i - 1], l[i]));
}

TEST_CASE("order module of a stable span") {
  TermOrder o;
  // span of U_{<=1} for U = <x e1 - e2, y e1, x e2, y e2>
  auto gens = fx::Vs({"x*e1 - e2", "y*e1", "x*e2", "y*e2"});
  auto om = compute_order_module(1, gens, 2, 2, o);
  CHECK(om.terms() == MTs({"e1", "e2"}));
  CHECK_THROWS_AS(compute_order_module(1, gens, 2, 2, TermOrder(BaseOrder::Lex)),
                  MathError);
  CHECK_THROWS_AS(compute_order_module(1, fx::Vs({"e1"}), 2, 2, o), MathError);
}

TEST_CASE("order modules of truncated submodules are divisor-closed") {
  Rng rng(24);
  TermOrder o;
  for (int c = 0; c < 60; ++c) {
    auto gens = random_finite_codim_generators(rng, 2, 2);
    auto gb = groebner_basis(gens, o);
    unsigned d = 1 + static_cast<unsigned>(rng() % 3);
    std::vector<VecP> span;
    for (const auto &g : gb)
      for (const auto &t : terms_up_to_degree(2, d))
        if (static_cast<int>(t.degree()) + g.degree() <= static_cast<int>(d))
          span.push_back(t * g);
    OrderModule om;
    REQUIRE_NOTHROW(om = compute_order_module(d, span, 2, 2, o));
    auto full = macaulay_complement(gb, o, 2, 2);
    for (const auto &m : module_terms_up_to(2, 2, d, o))
      CHECK(om.contains(m) == full.contains(m));
  }
}
