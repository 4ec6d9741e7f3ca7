#pragma once

#include <optional>
#include <random>
#include <vector>

#include "mbb/ordstruct.hpp"
#include "mbb/ring.hpp"

namespace mbb {

/// G_j = b_j e_{β_j} - Σ_i c_ij t_i e_{α_i}, j = 1..ν.
class Prebasis {
public:
  Prebasis() = default;
  /// columns[j][i] = c_ij; needs ν columns of length μ.
  Prebasis(OrderModule om, std::vector<std::vector<Rat>> columns);

  /// Accepts the G_j in any order. Each vector must contain exactly one
  /// border term (scaled to 1), the rest of its support in M, and every
  /// border term must be covered exactly once.
  static Prebasis from_vectors(OrderModule om, const std::vector<VecP> &gs);

  const OrderModule &om() const { return om_; }
  std::size_t size() const { return gs_.size(); }
  const VecP &vector(std::size_t j) const { return gs_[j]; }
  const std::vector<VecP> &vectors() const { return gs_; }
  const std::vector<Rat> &column(std::size_t j) const { return cols_[j]; }
  const std::vector<std::vector<Rat>> &columns() const { return cols_; }
  const Rat &coeff(std::size_t i, std::size_t j) const { return cols_[j][i]; }

  friend bool operator==(const Prebasis &a, const Prebasis &b) {
    return a.om_ == b.om_ && a.cols_ == b.cols_;
  }

private:
  OrderModule om_;
  std::vector<std::vector<Rat>> cols_;
  std::vector<VecP> gs_;
};

struct DivisionResult {
  std::vector<Poly> quotients;  // ν entries
  std::vector<Rat> coords;      // μ entries
};

/// Border division. Among the support terms of maximal index the σ-largest
/// is processed, unless rng is given, in which case a random one is.
DivisionResult divide(const Prebasis &g, const VecP &v,
                      std::mt19937_64 *rng = nullptr);

VecP remainder_vector(const OrderModule &om, const std::vector<Rat> &coords);
VecP normal_remainder(const Prebasis &g, const VecP &v);

/// v - c t' G_j where c is the coefficient of t in v and t = t' b_j e_{β_j}.
VecP rewrite_step(const Prebasis &g, const VecP &v, const ModuleTerm &t,
                  std::size_t j);

class BorderBasis;
std::optional<BorderBasis> certify_border_basis(const Prebasis &g);

/// A prebasis that passed the Buchberger criterion; only certify_border_basis
/// constructs one.
class BorderBasis {
public:
  const Prebasis &prebasis() const { return g_; }

private:
  explicit BorderBasis(Prebasis g) : g_(std::move(g)) {}
  friend std::optional<BorderBasis> certify_border_basis(const Prebasis &g);
  Prebasis g_;
};

VecP normal_form(const BorderBasis &g, const VecP &v);

} // namespace mbb
