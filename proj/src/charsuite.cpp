#include "mbb/charsuite.hpp"

namespace mbb {

MultMatrices mult_matrices(const Prebasis &g) {
  const OrderModule &om = g.om();
  const std::size_t mu = om.size();
  MultMatrices mm;
  for (std::size_t s = 0; s < om.nvars(); ++s) {
    RatMatrix x(mu, mu);
    Term xs = Term::variable(om.nvars(), s);
    for (std::size_t l = 0; l < mu; ++l) {
      ModuleTerm t = xs * om.term(l);
      if (auto i = om.position(t)) {
        x(*i, l) = 1;
        continue;
      }
      auto j = om.border_position(t);
      if (!j)
        throw std::logic_error("x_s * M leaves M u ∂M");
      for (std::size_t i = 0; i < mu; ++i)
        x(i, l) = g.coeff(i, *j);
    }
    mm.mats.push_back(std::move(x));
  }
  return mm;
}

CommutingResult commuting_check(const MultMatrices &mm) {
  for (std::size_t s = 0; s < mm.mats.size(); ++s)
    for (std::size_t u = s + 1; u < mm.mats.size(); ++u)
      if (mm.mats[s] * mm.mats[u] != mm.mats[u] * mm.mats[s])
        return {false, s, u};
  return {};
}

std::vector<Rat> module_action(const MultMatrices &mm, const Poly &p,
                               const std::vector<Rat> &coords) {
  if (!commuting_check(mm).commuting)
    throw MathError("module action needs commuting multiplication matrices");
  if (p.nvars() != mm.mats.size())
    throw std::invalid_argument("polynomial dimension mismatch");
  std::vector<Rat> out(coords.size());
  for (const auto &[t, c] : p.terms()) {
    std::vector<Rat> w = coords;
    for (std::size_t s = 0; s < t.nvars(); ++s)
      for (unsigned e = 0; e < t[s]; ++e)
        w = mm.mats[s] * w;
    for (std::size_t i = 0; i < w.size(); ++i)
      out[i] += c * w[i];
  }
  return out;
}

VecP sv_vector(const Prebasis &g, std::size_t i, std::size_t j) {
  const ModuleTerm &bi = g.om().border_term(i);
  const ModuleTerm &bj = g.om().border_term(j);
  if (bi.comp != bj.comp)
    throw std::invalid_argument("SV-vector of border terms in different "
                                "components");
  Term l = lcm(bi.term, bj.term);
  return quot(l, bi.term) * g.vector(i) - quot(l, bj.term) * g.vector(j);
}

static bool is_variable(const Term &t) { return t.degree() == 1; }

std::vector<NeighborPair> neighbors(const OrderModule &om) {
  std::vector<NeighborPair> out;
  const auto &b = om.border();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (b[i].comp != b[j].comp)
        continue;
      Term l = lcm(b[i].term, b[j].term);
      Term mi = quot(l, b[i].term), mj = quot(l, b[j].term);
      if (mi.degree() + mj.degree() == 1)
        out.push_back({i, j, NeighborPair::Kind::NextDoor, mi, mj});
      else if (is_variable(mi) && is_variable(mj))
        out.push_back({i, j, NeighborPair::Kind::AcrossStreet, mi, mj});
    }
  return out;
}

BuchbergerResult buchberger_check(const Prebasis &g, PairMode mode) {
  auto test = [&](std::size_t i, std::size_t j) -> std::optional<VecP> {
    VecP nr = normal_remainder(g, sv_vector(g, i, j));
    if (nr.is_zero())
      return std::nullopt;
    return nr;
  };
  if (mode == PairMode::NeighborsOnly) {
    for (const auto &p : neighbors(g.om()))
      if (auto nr = test(p.i, p.j))
        return {false, p.i, p.j, *nr};
    return {};
  }
  const auto &b = g.om().border();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      if (b[i].comp == b[j].comp)
        if (auto nr = test(i, j))
          return {false, i, j, *nr};
  return {};
}

std::optional<BorderBasis> certify_border_basis(const Prebasis &g) {
  if (!buchberger_check(g, PairMode::NeighborsOnly).ok)
    return std::nullopt;
  return BorderBasis(g);
}

VecP border_form(const OrderModule &om, const VecP &v) {
  unsigned top = om.index(v);
  VecP out(v.nvars(), v.rank());
  for (const auto &[m, c] : v.terms())
    if (om.index(m) == top)
      out.add_term(m, c);
  return out;
}

std::vector<Poly> neighbor_syzygy(const Prebasis &g, const NeighborPair &pair) {
  std::vector<Poly> syz(g.size(), Poly(g.om().nvars()));
  syz[pair.i].add_term(pair.mi, Rat(1));
  syz[pair.j].add_term(pair.mj, Rat(-1));
  return syz;
}

std::vector<Poly> lift_neighbor_syzygy(const Prebasis &g,
                                       const NeighborPair &pair) {
  VecP sv = sv_vector(g, pair.i, pair.j);
  auto div = divide(g, sv);
  for (const auto &c : div.coords)
    if (c != 0)
      throw MathError("no lifting: the SV-vector has a nonzero normal "
                      "remainder");
  auto lift = neighbor_syzygy(g, pair);
  for (std::size_t k = 0; k < lift.size(); ++k)
    lift[k] -= div.quotients[k];
  return lift;
}

} // namespace mbb
