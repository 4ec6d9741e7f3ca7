#include "mbb/random.hpp"

#include <algorithm>
#include <set>

namespace mbb {

static int uniform(Rng &rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Rat random_rat(Rng &rng, int num_bound, int den_bound) {
  return make_rat(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound));
}

Term random_term(Rng &rng, std::size_t nvars, unsigned max_degree) {
  unsigned d = static_cast<unsigned>(uniform(rng, 0, static_cast<int>(max_degree)));
  std::vector<unsigned> e(nvars, 0);
  for (unsigned k = 0; k < d && nvars > 0; ++k)
    ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(nvars) - 1))];
  return Term(std::move(e));
}

Poly random_poly(Rng &rng, std::size_t nvars, unsigned max_degree,
                 std::size_t max_terms) {
  Poly p(nvars);
  std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_terms)));
  for (std::size_t i = 0; i < n; ++i)
    p.add_term(random_term(rng, nvars, max_degree), random_rat(rng));
  return p;
}

VecP random_vector(Rng &rng, std::size_t nvars, std::size_t rank,
                   unsigned max_degree, std::size_t max_terms) {
  VecP v(nvars, rank);
  std::size_t n = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(max_terms)));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rank) - 1));
    v.add_term({random_term(rng, nvars, max_degree), k}, random_rat(rng));
  }
  return v;
}

OrderModule random_order_module(Rng &rng, std::size_t nvars, std::size_t rank,
                                std::size_t max_size, bool allow_empty,
                                const TermOrder &o) {
  std::vector<OrderIdeal> ideals(rank);
  std::size_t size = 0;
  if (!allow_empty)
    for (auto &oi : ideals) {
      oi.insert(Term(nvars));
      ++size;
    }
  std::size_t target = static_cast<std::size_t>(
      uniform(rng, static_cast<int>(size), static_cast<int>(std::max(size, max_size))));
  while (size < target) {
    // add a random corner of a random component: keeps divisor closure
    std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(rank) - 1));
    std::vector<Term> corners;
    for (const auto &b : ideal_border(nvars, ideals[k], 1)) {
      bool corner = true;
      for (std::size_t i = 0; i < nvars && corner; ++i)
        if (b[i] > 0 && !ideals[k].count(quot(b, Term::variable(nvars, i))))
          corner = false;
      if (corner)
        corners.push_back(b);
    }
    ideals[k].insert(corners[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(corners.size()) - 1))]);
    ++size;
  }
  return OrderModule::validate(nvars, std::move(ideals), o);
}

Prebasis random_prebasis(Rng &rng, const OrderModule &om, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::vector<Rat>> cols(om.border_size(),
                                     std::vector<Rat>(om.size()));
  for (auto &c : cols)
    for (auto &x : c)
      if (coin(rng))
        x = random_rat(rng, 3, 2);
  return Prebasis(om, std::move(cols));
}

std::vector<VecP> random_finite_codim_generators(Rng &rng, std::size_t nvars,
                                                 std::size_t rank,
                                                 unsigned max_degree) {
  std::vector<VecP> gens;
  const unsigned d = std::max(1u, max_degree);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < nvars; ++i) {
      std::vector<unsigned> e(nvars, 0);
      e[i] = d;
      VecP v = VecP::monomial(rank, {Term(e), k}, Rat(1));
      // tail of lower degree keeps x_i^d e_k as the leading term
      if (d > 0)
        v += random_vector(rng, nvars, rank, d - 1, 3);
      gens.push_back(std::move(v));
    }
  std::size_t extra = static_cast<std::size_t>(uniform(rng, 0, 3));
  for (std::size_t i = 0; i < extra; ++i) {
    VecP v = random_vector(rng, nvars, rank, d, 4);
    if (!v.is_zero())
      gens.push_back(std::move(v));
  }
  return gens;
}

} // namespace mbb
