#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mbb/ring.hpp"

namespace mbb {

using OrderIdeal = std::set<Term>;

/// Index of t w.r.t. a (possibly empty) order ideal: 0 inside O, otherwise
/// the smallest i with t in the i-th border.
unsigned ideal_index(std::size_t nvars, const OrderIdeal &o, const Term &t);
/// The k-th border of an order ideal (k >= 1), as a set.
std::set<Term> ideal_border(std::size_t nvars, const OrderIdeal &o, unsigned k);

/// O_1 e_1 u ... u O_r e_r with the canonical enumerations of M and dM.
///
/// Enumeration: by component, and within one component σ-descending. This
/// reproduces the t_i / b_j subscripts used in the worked examples.
class OrderModule {
public:
  OrderModule() = default;

  /// Throws MathError("not divisor-closed ...") naming a missing divisor.
  static OrderModule validate(std::size_t nvars,
                              std::vector<OrderIdeal> ideals,
                              const TermOrder &order = TermOrder());
  /// Groups module terms by component and validates.
  static OrderModule from_terms(std::size_t nvars, std::size_t rank,
                                const std::vector<ModuleTerm> &terms,
                                const TermOrder &order = TermOrder());

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return ideals_.size(); }
  const TermOrder &order() const { return order_; }
  const std::vector<OrderIdeal> &ideals() const { return ideals_; }

  std::size_t size() const { return terms_.size(); }
  std::size_t border_size() const { return border_.size(); }
  const std::vector<ModuleTerm> &terms() const { return terms_; }
  const std::vector<ModuleTerm> &border() const { return border_; }
  const ModuleTerm &term(std::size_t i) const { return terms_[i]; }
  const ModuleTerm &border_term(std::size_t j) const { return border_[j]; }

  bool contains(const ModuleTerm &m) const;
  std::optional<std::size_t> position(const ModuleTerm &m) const;
  std::optional<std::size_t> border_position(const ModuleTerm &m) const;

  unsigned index(const ModuleTerm &m) const;
  /// Max index over the support; throws on v = 0.
  unsigned index(const VecP &v) const;

  /// ∂^k M for k >= 1, in canonical order.
  std::vector<ModuleTerm> border(unsigned k) const;
  /// ∂^0 M u ... u ∂^k M.
  std::vector<ModuleTerm> border_closure(unsigned k) const;

  /// t e_k = t' * b_j e_{β_j} with deg t' = ind - 1 and j minimal.
  /// Returns (t', j). Throws for t e_k in M.
  std::pair<Term, std::size_t> factor_through_border(const ModuleTerm &m) const;

  /// Minimal generators of the monomial module spanned by the complement.
  std::vector<ModuleTerm> corners() const;

  unsigned max_degree() const;

  friend bool operator==(const OrderModule &a, const OrderModule &b) {
    return a.nvars_ == b.nvars_ && a.ideals_ == b.ideals_;
  }

private:
  std::vector<ModuleTerm> sort_canonical(std::vector<ModuleTerm> v) const;

  std::size_t nvars_ = 0;
  TermOrder order_;
  std::vector<OrderIdeal> ideals_;
  std::vector<ModuleTerm> terms_;
  std::vector<ModuleTerm> border_;
  std::map<ModuleTerm, std::size_t> term_pos_;
  std::map<ModuleTerm, std::size_t> border_pos_;
};

} // namespace mbb
