#pragma once

#include <optional>
#include <vector>

#include "mbb/charsuite.hpp"
#include "mbb/mbba.hpp"

namespace mbb {

/// Residue classes modulo S = <sgens>, represented by normal forms
/// against the reduced Gröbner basis of S.
class QuotientContext {
public:
  QuotientContext() = default;
  QuotientContext(std::size_t nvars, std::size_t rank, std::vector<VecP> sgens,
                  const TermOrder &o);

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const TermOrder &order() const { return order_; }
  const std::vector<VecP> &generators() const { return sgens_; }
  const std::vector<VecP> &gb() const { return gb_; }

  VecP canonical(const VecP &v) const;
  VecP canonical(const ModuleTerm &m) const;
  bool same_class(const VecP &a, const VecP &b) const;

private:
  std::size_t nvars_ = 0, rank_ = 0;
  TermOrder order_;
  std::vector<VecP> sgens_;
  std::vector<VecP> gb_;
};

/// G^S_j = b_j e_{β_j} - Σ_i c_ij t_i e_{α_i} + S, stored through the chosen
/// representatives t_i e_{α_i} of M^S and b_j e_{β_j} of ∂M^S.
struct QuotPrebasis {
  QuotientContext ctx;
  std::vector<ModuleTerm> m_reps;
  std::vector<ModuleTerm> border_reps;
  std::vector<std::vector<Rat>> columns; // columns[j][i] = c_ij

  /// From representatives of M^S and vectors G^S_j given by a
  /// representative each: the unique support term outside m_reps is b_j.
  static QuotPrebasis from_vectors(QuotientContext ctx,
                                   std::vector<ModuleTerm> m_reps,
                                   const std::vector<VecP> &gs);

  std::size_t size() const { return border_reps.size(); }
  /// b_j e_{β_j} - Σ c_ij t_i e_{α_i} in P^r.
  VecP representative(std::size_t j) const;
  /// Normal form of the representative modulo S.
  VecP canonical(std::size_t j) const;
};

struct QuotientResult {
  QuotPrebasis qp;
  OrderModule om; // characterizing order module
  Prebasis g;     // characterizing prebasis (a module border basis)
};

/// Module border basis of <uGens> + <sGens>, pushed down to P^r / S.
QuotientResult quotient_border_basis(const std::vector<VecP> &ugens,
                                     const std::vector<VecP> &sgens,
                                     const TermOrder &o,
                                     unsigned max_degree = default_max_degree);

/// The prebasis characterizing qp over the order module spanned by the
/// representatives. Throws MathError when the representatives are not an
/// order module or when two of them collide modulo S.
Prebasis build_characterizing_prebasis(const QuotPrebasis &qp);

struct QuotientCheck {
  enum class Failure { None, Buchberger, Membership };
  bool ok = true;
  Failure failure = Failure::None;
  BuchbergerResult buchberger;       // for Failure::Buchberger
  std::size_t generator = 0;         // S-generator for Failure::Membership
  VecP remainder;                    // its normal remainder
  Prebasis characterizing;
};

QuotientCheck check_quotient_basis(const QuotPrebasis &qp);

} // namespace mbb
