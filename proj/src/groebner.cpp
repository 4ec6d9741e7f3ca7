#include "mbb/groebner.hpp"

#include <algorithm>
#include <set>

namespace mbb {

namespace {

struct Elem {
  VecP v;
  ModuleTerm lt;
};

ModuleTerm lead(const TermOrder &o, const VecP &v) {
  return leading_term(o, v).first;
}

bool mdivides(const ModuleTerm &a, const ModuleTerm &b) {
  return a.comp == b.comp && divides(a.term, b.term);
}

void make_monic(const TermOrder &o, VecP &v) {
  Rat c = leading_term(o, v).second;
  if (c != 1)
    v *= Rat(1) / c;
}

// Reduces v modulo the elements; with top_only the loop stops at the first
// irreducible leading term.
VecP reduce(const std::vector<Elem> &basis, VecP v, const TermOrder &o,
            bool top_only) {
  VecP rest(v.nvars(), v.rank());
  while (!v.is_zero()) {
    auto [lt, c] = leading_term(o, v);
    const Elem *hit = nullptr;
    for (const auto &e : basis)
      if (mdivides(e.lt, lt)) {
        hit = &e;
        break;
      }
    if (hit) {
      v.add_scaled(-c / hit->v.coeff(hit->lt), quot(lt.term, hit->lt.term),
                   hit->v);
      continue;
    }
    if (top_only)
      return v;
    rest.add_term(lt, c);
    v.add_term(lt, -c);
  }
  return rest;
}

std::vector<Elem> to_elems(const std::vector<VecP> &vs, const TermOrder &o) {
  std::vector<Elem> out;
  for (const auto &v : vs)
    if (!v.is_zero())
      out.push_back({v, lead(o, v)});
  return out;
}

} // namespace

std::vector<VecP> groebner_basis(const std::vector<VecP> &gens,
                                 const TermOrder &o) {
  std::vector<Elem> g;
  struct Pair {
    std::size_t i, j;
    ModuleTerm lcm;
  };
  std::vector<Pair> pairs;
  auto add = [&](VecP v) {
    make_monic(o, v);
    Elem e{std::move(v), {}};
    e.lt = lead(o, e.v);
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i].lt.comp == e.lt.comp)
        pairs.push_back({i, g.size(), {lcm(g[i].lt.term, e.lt.term), e.lt.comp}});
    g.push_back(std::move(e));
  };
  for (const auto &v : gens) {
    VecP r = reduce(g, v, o, false);
    if (!r.is_zero())
      add(std::move(r));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair &a, const Pair &b) {
                                   return o.greater(b.lcm, a.lcm);
                                 });
    Pair p = *best;
    pairs.erase(best);
    const Elem &a = g[p.i];
    const Elem &b = g[p.j];
    // Buchberger's chain criterion: skip if some other LT divides the lcm
    // and both companion pairs are already gone.
    bool skip = false;
    for (std::size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == p.i || k == p.j || !mdivides(g[k].lt, p.lcm))
        continue;
      auto pending = [&](std::size_t x, std::size_t y) {
        return std::any_of(pairs.begin(), pairs.end(), [&](const Pair &q) {
          return (q.i == x && q.j == y) || (q.i == y && q.j == x);
        });
      };
      if (!pending(p.i, k) && !pending(p.j, k))
        skip = true;
    }
    if (skip)
      continue;
    VecP s = quot(p.lcm.term, a.lt.term) * a.v;
    s.add_scaled(Rat(-1), quot(p.lcm.term, b.lt.term), b.v);
    VecP r = reduce(g, s, o, false);
    if (!r.is_zero())
      add(std::move(r));
  }

  // minimalize
  std::vector<Elem> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !mdivides(g[k].lt, g[i].lt))
        continue;
      // equal leading terms: keep the first
      if (g[k].lt != g[i].lt || k < i)
        redundant = true;
    }
    if (!redundant)
      min.push_back(g[i]);
  }
  // interreduce
  std::vector<VecP> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<Elem> others;
    for (std::size_t k = 0; k < min.size(); ++k)
      if (k != i)
        others.push_back(min[k]);
    VecP tail = min[i].v;
    Rat c = tail.coeff(min[i].lt);
    tail.add_term(min[i].lt, -c);
    VecP r = reduce(others, tail, o, false);
    r.add_term(min[i].lt, c);
    make_monic(o, r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](const VecP &a, const VecP &b) {
    return o.greater(lead(o, a), lead(o, b));
  });
  return out;
}

VecP gb_normal_form(const std::vector<VecP> &gb, const VecP &v,
                    const TermOrder &o) {
  return reduce(to_elems(gb, o), v, o, false);
}

bool gb_member(const std::vector<VecP> &gb, const VecP &v, const TermOrder &o) {
  return reduce(to_elems(gb, o), v, o, true).is_zero();
}

namespace {

// Per component: 0 if e_k is a leading term, otherwise pure power exponents
// (0 = missing).
struct ComponentShape {
  bool whole = false;
  std::vector<unsigned> pure;
};

std::vector<ComponentShape> shapes(const std::vector<VecP> &gb,
                                   const TermOrder &o, std::size_t nvars,
                                   std::size_t rank) {
  std::vector<ComponentShape> sh(rank, {false, std::vector<unsigned>(nvars)});
  for (const auto &v : gb) {
    if (v.is_zero())
      continue;
    ModuleTerm lt = lead(o, v);
    if (lt.term.is_one()) {
      sh[lt.comp].whole = true;
      continue;
    }
    for (std::size_t i = 0; i < nvars; ++i)
      if (lt.term[i] == lt.term.degree()) {
        unsigned &p = sh[lt.comp].pure[i];
        if (p == 0 || lt.term[i] < p)
          p = lt.term[i];
      }
  }
  return sh;
}

} // namespace

bool finite_codimension(const std::vector<VecP> &gb, const TermOrder &o,
                        std::size_t nvars, std::size_t rank) {
  for (const auto &s : shapes(gb, o, nvars, rank))
    if (!s.whole && std::find(s.pure.begin(), s.pure.end(), 0u) != s.pure.end())
      return false;
  return true;
}

OrderModule macaulay_complement(const std::vector<VecP> &gb, const TermOrder &o,
                                std::size_t nvars, std::size_t rank,
                                unsigned bound) {
  auto sh = shapes(gb, o, nvars, rank);
  std::vector<std::vector<ModuleTerm>> lts(rank);
  for (const auto &v : gb)
    if (!v.is_zero()) {
      ModuleTerm lt = lead(o, v);
      lts[lt.comp].push_back(lt);
    }
  std::vector<OrderIdeal> ideals(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    if (sh[k].whole)
      continue;
    unsigned span = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (sh[k].pure[i] == 0)
        throw MathError("complement not finite: no pure power of x" +
                        std::to_string(i + 1) + " in component " +
                        std::to_string(k + 1));
      span += sh[k].pure[i] - 1;
    }
    if (span > bound)
      throw MathError("complement exceeds degree bound " +
                      std::to_string(bound));
    for (const auto &t : terms_up_to_degree(nvars, span)) {
      ModuleTerm m{t, k};
      if (std::none_of(lts[k].begin(), lts[k].end(),
                       [&](const ModuleTerm &l) { return mdivides(l, m); }))
        ideals[k].insert(t);
    }
  }
  return OrderModule::validate(nvars, std::move(ideals), o);
}

std::pair<OrderModule, Prebasis>
naive_border_basis(const std::vector<VecP> &gens, const TermOrder &o,
                   std::size_t nvars, std::size_t rank, unsigned bound) {
  auto gb = groebner_basis(gens, o);
  auto om = macaulay_complement(gb, o, nvars, rank, bound);
  auto elems = to_elems(gb, o);
  std::vector<std::vector<Rat>> cols;
  for (const auto &b : om.border()) {
    VecP nf = reduce(elems, VecP::monomial(rank, b, Rat(1)), o, false);
    std::vector<Rat> col(om.size());
    for (std::size_t i = 0; i < om.size(); ++i)
      col[i] = nf.coeff(om.term(i));
    cols.push_back(std::move(col));
  }
  Prebasis g(om, std::move(cols));
  return {std::move(om), std::move(g)};
}

std::vector<VecP> syzygies(const std::vector<Poly> &f, const TermOrder &o) {
  if (f.empty())
    return {};
  const std::size_t n = f[0].nvars(), r = f.size();
  std::vector<VecP> tagged;
  for (std::size_t i = 0; i < r; ++i) {
    if (f[i].is_zero())
      throw std::invalid_argument("syzygies of a zero polynomial");
    VecP v(n, r + 1);
    for (const auto &[t, c] : f[i].terms())
      v.add_term({t, 0}, c);
    v.add_term({Term(n), i + 1}, Rat(1));
    tagged.push_back(std::move(v));
  }
  TermOrder pos(o.base(), ModuleExtension::PosSigma);
  std::vector<VecP> out;
  for (const auto &g : groebner_basis(tagged, pos)) {
    if (!g.component(0).is_zero())
      continue;
    VecP s(n, r);
    for (const auto &[m, c] : g.terms())
      s.add_term({m.term, m.comp - 1}, c);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<VecP> ideal_intersection(const std::vector<Poly> &h,
                                     const std::vector<Poly> &f,
                                     const TermOrder &o) {
  std::vector<Poly> all = h;
  all.insert(all.end(), f.begin(), f.end());
  std::vector<VecP> out;
  if (f.empty())
    return out;
  for (const auto &z : syzygies(all, o)) {
    VecP q(f[0].nvars(), f.size());
    for (const auto &[m, c] : z.terms())
      if (m.comp >= h.size())
        q.add_term({m.term, m.comp - h.size()}, -c);
    if (!q.is_zero())
      out.push_back(std::move(q));
  }
  return out;
}

VecP as_vector(const Poly &p) { return VecP::from_components(p.nvars(), {p}); }

Poly as_poly(const VecP &v) {
  if (v.rank() != 1)
    throw std::invalid_argument("as_poly needs a rank-1 vector");
  return v.component(0);
}

} // namespace mbb
