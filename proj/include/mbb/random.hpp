#pragma once

#include <random>
#include <vector>

#include "mbb/prebasis.hpp"

namespace mbb {

using Rng = std::mt19937_64;

/// Small rationals a/b with |a| <= num_bound, 1 <= b <= den_bound.
Rat random_rat(Rng &rng, int num_bound = 5, int den_bound = 3);
Term random_term(Rng &rng, std::size_t nvars, unsigned max_degree);
Poly random_poly(Rng &rng, std::size_t nvars, unsigned max_degree,
                 std::size_t max_terms);
VecP random_vector(Rng &rng, std::size_t nvars, std::size_t rank,
                   unsigned max_degree, std::size_t max_terms);

/// Grows a random order module of at most max_size terms; components may be
/// left empty when allow_empty is set.
OrderModule random_order_module(Rng &rng, std::size_t nvars, std::size_t rank,
                                std::size_t max_size, bool allow_empty = true,
                                const TermOrder &o = TermOrder());

/// Sparse random coefficient matrix (density in [0,1]).
Prebasis random_prebasis(Rng &rng, const OrderModule &om, double density = 0.3);

/// Generators of a random submodule of finite codimension: per component a
/// monic x_i^2 e_k plus tail for every variable, plus a few random vectors.
std::vector<VecP> random_finite_codim_generators(Rng &rng, std::size_t nvars,
                                                 std::size_t rank,
                                                 unsigned max_degree = 2);

} // namespace mbb
