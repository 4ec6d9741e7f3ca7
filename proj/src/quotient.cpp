#include "mbb/quotient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mbb/groebner.hpp"
#include "mbb/io.hpp"

namespace mbb {

QuotientContext::QuotientContext(std::size_t nvars, std::size_t rank,
                                 std::vector<VecP> sgens, const TermOrder &o)
    : nvars_(nvars), rank_(rank), order_(o), sgens_(std::move(sgens)) {
  for (const auto &s : sgens_)
    if (s.nvars() != nvars || s.rank() != rank)
      throw std::invalid_argument("syzygy generator rank mismatch");
  gb_ = groebner_basis(sgens_, o);
}

VecP QuotientContext::canonical(const VecP &v) const {
  return gb_normal_form(gb_, v, order_);
}

VecP QuotientContext::canonical(const ModuleTerm &m) const {
  return canonical(VecP::monomial(rank_, m, Rat(1)));
}

bool QuotientContext::same_class(const VecP &a, const VecP &b) const {
  return gb_member(gb_, a - b, order_);
}

QuotPrebasis QuotPrebasis::from_vectors(QuotientContext ctx,
                                        std::vector<ModuleTerm> m_reps,
                                        const std::vector<VecP> &gs) {
  QuotPrebasis qp;
  qp.ctx = std::move(ctx);
  qp.m_reps = std::move(m_reps);
  std::map<ModuleTerm, std::size_t> pos;
  for (std::size_t i = 0; i < qp.m_reps.size(); ++i)
    pos[qp.m_reps[i]] = i;
  for (std::size_t g = 0; g < gs.size(); ++g) {
    std::optional<ModuleTerm> border;
    Rat lead;
    for (const auto &[m, c] : gs[g].terms()) {
      if (pos.count(m))
        continue;
      if (border)
        throw MathError("quotient prebasis vector " + std::to_string(g + 1) +
                        " has more than one term outside the representatives");
      border = m;
      lead = c;
    }
    if (!border)
      throw MathError("quotient prebasis vector " + std::to_string(g + 1) +
                      " has no border term");
    std::vector<Rat> col(qp.m_reps.size());
    for (std::size_t i = 0; i < col.size(); ++i)
      col[i] = -gs[g].coeff(qp.m_reps[i]) / lead;
    qp.border_reps.push_back(*border);
    qp.columns.push_back(std::move(col));
  }
  return qp;
}

VecP QuotPrebasis::representative(std::size_t j) const {
  VecP v = VecP::monomial(ctx.rank(), border_reps.at(j), Rat(1));
  for (std::size_t i = 0; i < m_reps.size(); ++i)
    v.add_term(m_reps[i], -columns[j][i]);
  return v;
}

VecP QuotPrebasis::canonical(std::size_t j) const {
  return ctx.canonical(representative(j));
}

QuotientResult quotient_border_basis(const std::vector<VecP> &ugens,
                                     const std::vector<VecP> &sgens,
                                     const TermOrder &o, unsigned max_degree) {
  std::vector<VecP> all;
  for (const auto &v : ugens)
    if (!v.is_zero())
      all.push_back(v);
  for (const auto &v : sgens)
    if (!v.is_zero())
      all.push_back(v);
  if (all.empty())
    throw MathError("quotient border basis needs a nonzero generator");
  const std::size_t n = all[0].nvars(), r = all[0].rank();
  auto [om, g] = module_border_basis(n, r, all, o, max_degree);

  QuotientResult res{{}, om, g};
  res.qp.ctx = QuotientContext(n, r, sgens, o);
  res.qp.m_reps = om.terms();
  // one border class per distinct residue of ∂M, first border term wins
  std::vector<VecP> seen;
  for (std::size_t j = 0; j < om.border_size(); ++j) {
    VecP c = res.qp.ctx.canonical(om.border_term(j));
    if (std::find(seen.begin(), seen.end(), c) != seen.end())
      continue;
    seen.push_back(c);
    res.qp.border_reps.push_back(om.border_term(j));
    res.qp.columns.push_back(g.column(j));
  }
  return res;
}

Prebasis build_characterizing_prebasis(const QuotPrebasis &qp) {
  const QuotientContext &ctx = qp.ctx;
  Names names = default_names(ctx.nvars());
  const TermOrder &o = ctx.order();
  OrderModule om = OrderModule::from_terms(ctx.nvars(), ctx.rank(), qp.m_reps, o);
  if (om.size() != qp.m_reps.size())
    throw MathError("representatives of M^S are not pairwise distinct");

  std::vector<VecP> mclass;
  for (const auto &t : om.terms())
    mclass.push_back(ctx.canonical(t));
  for (std::size_t a = 0; a < mclass.size(); ++a)
    for (std::size_t b = a + 1; b < mclass.size(); ++b)
      if (mclass[a] == mclass[b])
        throw MathError("no order module characterizing M^S: " +
                        format_module_term(om.term(a), names) + " + S = " +
                        format_module_term(om.term(b), names) + " + S");

  // coefficient columns of qp expressed over the canonical order of om
  std::vector<std::size_t> perm(qp.m_reps.size());
  for (std::size_t i = 0; i < qp.m_reps.size(); ++i)
    perm[i] = *om.position(qp.m_reps[i]);
  std::vector<VecP> bclass;
  for (const auto &b : qp.border_reps)
    bclass.push_back(ctx.canonical(b));

  std::vector<std::vector<Rat>> cols;
  std::vector<bool> used(qp.border_reps.size(), false);
  for (const auto &b : om.border()) {
    VecP c = ctx.canonical(b);
    auto it = std::find(bclass.begin(), bclass.end(), c);
    if (it == bclass.end())
      throw MathError("border term " + format_module_term(b, names) +
                      " + S is not in the border of M^S");
    std::size_t k = static_cast<std::size_t>(it - bclass.begin());
    used[k] = true;
    std::vector<Rat> col(om.size());
    for (std::size_t i = 0; i < qp.m_reps.size(); ++i)
      col[perm[i]] = qp.columns[k][i];
    cols.push_back(std::move(col));
  }
  for (std::size_t k = 0; k < used.size(); ++k)
    if (!used[k])
      throw MathError("border class " +
                      format_module_term(qp.border_reps[k], names) +
                      " + S is not the image of a border term of M");
  return Prebasis(std::move(om), std::move(cols));
}

QuotientCheck check_quotient_basis(const QuotPrebasis &qp) {
  QuotientCheck res;
  res.characterizing = build_characterizing_prebasis(qp);
  const Prebasis &g = res.characterizing;
  auto bb = buchberger_check(g, PairMode::NeighborsOnly);
  if (!bb.ok) {
    res.ok = false;
    res.failure = QuotientCheck::Failure::Buchberger;
    res.buchberger = std::move(bb);
    return res;
  }
  const auto &sg = qp.ctx.generators();
  for (std::size_t s = 0; s < sg.size(); ++s) {
    VecP nr = normal_remainder(g, sg[s]);
    if (!nr.is_zero()) {
      res.ok = false;
      res.failure = QuotientCheck::Failure::Membership;
      res.generator = s;
      res.remainder = std::move(nr);
      return res;
    }
  }
  return res;
}

} // namespace mbb
