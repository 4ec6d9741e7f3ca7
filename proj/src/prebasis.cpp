#include "mbb/prebasis.hpp"

#include <algorithm>

namespace mbb {

Prebasis::Prebasis(OrderModule om, std::vector<std::vector<Rat>> columns)
    : om_(std::move(om)), cols_(std::move(columns)) {
  if (cols_.size() != om_.border_size())
    throw std::invalid_argument("prebasis needs one column per border term");
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j].size() != om_.size())
      throw std::invalid_argument("prebasis column has wrong length");
    VecP g = VecP::monomial(om_.rank(), om_.border_term(j), Rat(1));
    for (std::size_t i = 0; i < om_.size(); ++i)
      g.add_term(om_.term(i), -cols_[j][i]);
    gs_.push_back(std::move(g));
  }
}

Prebasis Prebasis::from_vectors(OrderModule om, const std::vector<VecP> &gs) {
  const std::size_t nu = om.border_size();
  std::vector<std::vector<Rat>> cols(nu);
  std::vector<bool> seen(nu, false);
  for (std::size_t g = 0; g < gs.size(); ++g) {
    const VecP &v = gs[g];
    if (v.rank() != om.rank() || v.nvars() != om.nvars())
      throw std::invalid_argument("prebasis vector rank mismatch");
    std::optional<std::size_t> border;
    Rat lead;
    for (const auto &[m, c] : v.terms()) {
      if (om.contains(m))
        continue;
      auto j = om.border_position(m);
      if (!j || border)
        throw MathError("prebasis vector " + std::to_string(g + 1) +
                        " must have exactly one border term and all other "
                        "terms in the order module");
      border = j;
      lead = c;
    }
    if (!border)
      throw MathError("prebasis vector " + std::to_string(g + 1) +
                      " has no border term");
    if (seen[*border])
      throw MathError("border term covered twice (vector " +
                      std::to_string(g + 1) + ")");
    seen[*border] = true;
    std::vector<Rat> col(om.size());
    for (std::size_t i = 0; i < om.size(); ++i)
      col[i] = -v.coeff(om.term(i)) / lead;
    cols[*border] = std::move(col);
  }
  for (std::size_t j = 0; j < nu; ++j)
    if (!seen[j])
      throw MathError("border term " + std::to_string(j + 1) +
                      " has no prebasis vector");
  return Prebasis(std::move(om), std::move(cols));
}

DivisionResult divide(const Prebasis &g, const VecP &v, std::mt19937_64 *rng) {
  const OrderModule &om = g.om();
  if (v.rank() != om.rank() || v.nvars() != om.nvars())
    throw std::invalid_argument("vector rank mismatch");
  const TermOrder &o = om.order();
  DivisionResult res;
  res.quotients.assign(g.size(), Poly(om.nvars()));
  res.coords.assign(om.size(), Rat(0));

  VecP w = v;
  std::vector<ModuleTerm> cand;
  while (!w.is_zero()) {
    unsigned top = 0;
    cand.clear();
    for (const auto &[m, c] : w.terms()) {
      unsigned i = om.index(m);
      if (i > top) {
        top = i;
        cand.clear();
      }
      if (i == top)
        cand.push_back(m);
    }
    if (top == 0)
      break;
    ModuleTerm pick;
    if (rng) {
      std::uniform_int_distribution<std::size_t> d(0, cand.size() - 1);
      pick = cand[d(*rng)];
    } else {
      pick = *std::max_element(cand.begin(), cand.end(),
                               [&](const ModuleTerm &a, const ModuleTerm &b) {
                                 return o.greater(b, a);
                               });
    }
    auto [tp, j] = om.factor_through_border(pick);
    Rat c = w.coeff(pick);
    res.quotients[j].add_term(tp, c);
    w.add_scaled(-c, tp, g.vector(j));
  }
  for (const auto &[m, c] : w.terms())
    res.coords[*om.position(m)] = c;
  return res;
}

VecP remainder_vector(const OrderModule &om, const std::vector<Rat> &coords) {
  VecP r(om.nvars(), om.rank());
  for (std::size_t i = 0; i < om.size(); ++i)
    r.add_term(om.term(i), coords[i]);
  return r;
}

VecP normal_remainder(const Prebasis &g, const VecP &v) {
  return remainder_vector(g.om(), divide(g, v).coords);
}

VecP rewrite_step(const Prebasis &g, const VecP &v, const ModuleTerm &t,
                  std::size_t j) {
  if (j >= g.size())
    throw std::invalid_argument("rewrite_step: border index out of range");
  Rat c = v.coeff(t);
  if (c == 0)
    throw std::invalid_argument("rewrite_step: term not in the support");
  const ModuleTerm &b = g.om().border_term(j);
  if (b.comp != t.comp || !divides(b.term, t.term))
    throw std::invalid_argument(
        "rewrite_step: term is not a multiple of the border term");
  VecP w = v;
  w.add_scaled(-c, quot(t.term, b.term), g.vector(j));
  return w;
}

VecP normal_form(const BorderBasis &g, const VecP &v) {
  return normal_remainder(g.prebasis(), v);
}

} // namespace mbb
