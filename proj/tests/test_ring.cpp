#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "mbb/random.hpp"

using namespace mbb;
using fx::MT;
using fx::T;
using fx::V;

TEST_CASE("term multiplication and division") {
  CHECK(T("x") * T("y") == T("x*y"));
  CHECK(T("x^2") * T("x") == T("x^3"));
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    Term t = random_term(rng, 2, 5);
    CHECK(Term(2) * t == t);
  }
  CHECK(divides(T("x"), T("x*y")));
  CHECK(quot(T("x*y"), T("x")) == T("y"));
  CHECK_FALSE(divides(T("x^2"), T("x*y")));
  CHECK_THROWS_AS(quot(T("x*y"), T("x^2")), std::invalid_argument);
  CHECK_THROWS_AS(T("x") * Term(3), std::invalid_argument);
  // lcm(b_i, b_j) / b_i for b_i = x^2, b_j = xy
  CHECK(quot(lcm(T("x^2"), T("x*y")), T("x^2")) == T("y"));
}

TEST_CASE("rationals are canonical") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    long a = static_cast<long>(rng() % 2001) - 1000;
    long b = static_cast<long>(rng() % 999) + 1;
    Rat q = make_rat(a, b * (i % 2 ? 1 : -1));
    CHECK(q.get_den() > 0);
    CHECK(gcd(q.get_num(), q.get_den()) == 1);
    CHECK(q * (b * (i % 2 ? 1 : -1)) == a);
  }
  CHECK(make_rat(0, 7).get_den() == 1);
  CHECK_THROWS(make_rat(1, 0));
}

TEST_CASE("σPos comparisons") {
  TermOrder o;
  CHECK(o.greater(MT("e1"), MT("e2")));
  CHECK(o.greater(MT("x*e2"), MT("y*e1")));
  CHECK(o.compare(MT("x*e1"), MT("x*e1")) == std::strong_ordering::equal);
  TermOrder lex(BaseOrder::Lex);
  CHECK(lex.greater(MT("x*e1"), MT("y^5*e1")));
  TermOrder deglex(BaseOrder::DegLex);
  CHECK(deglex.greater(MT("x^2*e1"), MT("x*y*e1")));
  // degrevlex vs deglex differ on x*z^2 vs y^3 in three variables
  std::vector<std::string> xyz{"x", "y", "z"};
  Term a = parse_poly("x*z^2", xyz).terms().begin()->first;
  Term b = parse_poly("y^3", xyz).terms().begin()->first;
  CHECK(o.compare(a, b) == std::strong_ordering::less);
  CHECK(deglex.compare(a, b) == std::strong_ordering::greater);
}

TEST_CASE("σPos is a multiplicative total order") {
  Rng rng(3);
  for (BaseOrder base : {BaseOrder::DegRevLex, BaseOrder::DegLex, BaseOrder::Lex}) {
    TermOrder o(base);
    for (int i = 0; i < 300; ++i) {
      ModuleTerm a{random_term(rng, 3, 4), rng() % 2};
      ModuleTerm b{random_term(rng, 3, 4), rng() % 2};
      ModuleTerm c{random_term(rng, 3, 4), rng() % 2};
      auto ab = o.compare(a, b), ba = o.compare(b, a);
      CHECK((ab == 0) == (a == b));
      CHECK((ab > 0) == (ba < 0));
      if (o.greater(a, b) && o.greater(b, c))
        CHECK(o.greater(a, c));
      Term t = random_term(rng, 3, 3);
      if (o.greater(a, b))
        CHECK(o.greater(t * a, t * b));
    }
  }
}

TEST_CASE("leading terms") {
  TermOrder o;
  auto lt = leading_term(o, V("x^3*e1 + x*y*e1 + x^3*y*e2"));
  CHECK(lt.first == MT("x^3*y*e2"));
  CHECK(lt.second == 1);
  auto single = leading_term(o, V("-5/2*x*y*e2"));
  CHECK(single.first == MT("x*y*e2"));
  CHECK(single.second == make_rat(-5, 2));
  CHECK(leading_term(o, V("x^2*e1 - y*e1 + e2")).first == MT("x^2*e1"));
  CHECK_THROWS(leading_term(o, VecP(2, 2)));

  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    VecP v = random_vector(rng, 2, 2, 3, 4);
    if (v.is_zero())
      continue;
    Term t = random_term(rng, 2, 3);
    auto a = leading_term(o, t * v);
    auto b = leading_term(o, v);
    CHECK(a.first == t * b.first);
    CHECK(a.second == b.second);
  }
}

TEST_CASE("vector arithmetic") {
  VecP v = V("x*e1 - 3*y^2*e2 + e2");
  CHECK((v + (-v)).is_zero());
  CHECK(Term::variable(2, 0) * VecP::unit(2, 2, 0) == V("x*e1"));
  CHECK(Poly(T("y"), Rat(1)) * V("x^3*e2 - e1") == V("x^3*y*e2 - y*e1"));
  CHECK_THROWS_AS(V("e1") + VecP(2, 3), std::invalid_argument);

  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    Poly p = random_poly(rng, 2, 2, 3), q = random_poly(rng, 2, 2, 3);
    VecP a = random_vector(rng, 2, 2, 2, 3), b = random_vector(rng, 2, 2, 2, 3);
    CHECK(p * (a + b) == p * a + p * b);
    CHECK((p * q) * a == p * (q * a));
    CHECK((p + q) * a == p * a + q * a);
  }
}

TEST_CASE("term enumeration") {
  CHECK(terms_of_degree(2, 3).size() == 4);
  CHECK(terms_up_to_degree(3, 2).size() == 10);
  CHECK(terms_of_degree(0, 0).size() == 1);
  CHECK(terms_of_degree(0, 1).empty());
}
