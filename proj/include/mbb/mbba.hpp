#pragma once

#include <utility>
#include <vector>

#include "mbb/prebasis.hpp"

namespace mbb {

constexpr unsigned default_max_degree = 32;

/// The module border basis of <gens> together with its order module.
/// Throws MathError when d would exceed max_degree (the codimension is then
/// possibly infinite).
std::pair<OrderModule, Prebasis>
module_border_basis(const std::vector<VecP> &gens, const TermOrder &o,
                    unsigned max_degree = default_max_degree);

/// Same, with the ring dimensions given explicitly so that an empty
/// generator list in rank 0 is accepted.
std::pair<OrderModule, Prebasis>
module_border_basis(std::size_t nvars, std::size_t rank,
                    const std::vector<VecP> &gens, const TermOrder &o,
                    unsigned max_degree = default_max_degree);

} // namespace mbb
