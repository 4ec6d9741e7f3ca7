#pragma once

#include <string>
#include <vector>

#include "mbb/quotient.hpp"

namespace mbb {

/// J = <f_1..f_r> identified with P^r / S for S = Syz(f_1..f_r).
struct SubidealContext {
  std::vector<Poly> f;
  std::vector<VecP> syz;
  TermOrder order;

  std::size_t nvars() const { return f.empty() ? 0 : f[0].nvars(); }
  std::size_t rank() const { return f.size(); }
};

SubidealContext make_subideal_context(const std::vector<Poly> &f,
                                      const TermOrder &o);

/// Σ_k component_k(formal) * f_k.
Poly expand_in_P(const SubidealContext &ctx, const VecP &formal);

struct SubidealResult {
  SubidealContext ctx;
  std::vector<VecP> intersection; // B_w = Σ_v q_vw e_v
  QuotientResult quotient;
  std::vector<ModuleTerm> of;     // O_F as t e_k standing for t f_k
  std::vector<VecP> formal;       // G as combinations of the f_k
  std::vector<Poly> expanded;     // G in P
};

/// Throws MathError when I is not zero-dimensional or the cap is reached.
SubidealResult subideal_border_basis(const std::vector<Poly> &h,
                                     const std::vector<Poly> &f,
                                     const TermOrder &o,
                                     unsigned max_degree = default_max_degree);

struct SubidealCheck {
  enum class Failure { None, Quotient, NotInIdeal, IntersectionNotCovered };
  bool ok = true;
  Failure failure = Failure::None;
  QuotientCheck quotient;
  std::size_t index = 0; // offending element of G, or of the I ∩ J generators
  VecP remainder;        // for IntersectionNotCovered
  Poly residue;          // for NotInIdeal: normal form modulo I
};

/// Verifies G (given formally over O_F) as a subideal border basis of I.
SubidealCheck check_subideal_basis(const SubidealContext &ctx,
                                   const std::vector<ModuleTerm> &of,
                                   const std::vector<VecP> &formal,
                                   const std::vector<Poly> &h);

} // namespace mbb
