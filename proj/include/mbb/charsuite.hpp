#pragma once

#include <optional>
#include <vector>

#include "mbb/exactla.hpp"
#include "mbb/prebasis.hpp"

namespace mbb {

struct MultMatrices {
  std::vector<RatMatrix> mats; // one μ×μ matrix per variable
};

MultMatrices mult_matrices(const Prebasis &g);

struct CommutingResult {
  bool commuting = true;
  // first non-commuting pair s < u (0-based) when !commuting
  std::size_t s = 0, u = 0;
};

CommutingResult commuting_check(const MultMatrices &mm);

/// Coordinates of p ∘ v where v has the given coordinates w.r.t. M.
/// Throws MathError when the matrices do not commute.
std::vector<Rat> module_action(const MultMatrices &mm, const Poly &p,
                               const std::vector<Rat> &coords);

/// lcm/b_i * G_i - lcm/b_j * G_j; both border terms must share a component.
VecP sv_vector(const Prebasis &g, std::size_t i, std::size_t j);

/// m_i b_i e = m_j b_j e with i < j. Next-door: one of m_i, m_j is 1 and
/// the other a variable; across-the-street: both are (distinct) variables.
struct NeighborPair {
  enum class Kind { NextDoor, AcrossStreet };
  std::size_t i = 0, j = 0;
  Kind kind = Kind::NextDoor;
  Term mi, mj;

  friend bool operator==(const NeighborPair &, const NeighborPair &) = default;
};

/// All neighbor pairs i < j, ordered by (i, j).
std::vector<NeighborPair> neighbors(const OrderModule &om);

enum class PairMode { AllPairs, NeighborsOnly };

struct BuchbergerResult {
  bool ok = true;
  std::size_t i = 0, j = 0; // first failing pair (0-based)
  VecP nr;
};

BuchbergerResult buchberger_check(const Prebasis &g, PairMode mode);

/// Sum of the support monomials of maximal M-index; throws on v = 0.
VecP border_form(const OrderModule &om, const VecP &v);

/// Lifting of the neighbor syzygy of the pair built from the division of
/// its SV-vector. Throws MathError when NR of the SV-vector is nonzero.
std::vector<Poly> lift_neighbor_syzygy(const Prebasis &g,
                                       const NeighborPair &pair);

/// The neighbor syzygy itself (x_s ε_i - ε_j or x_s ε_i - x_u ε_j).
std::vector<Poly> neighbor_syzygy(const Prebasis &g, const NeighborPair &pair);

} // namespace mbb
