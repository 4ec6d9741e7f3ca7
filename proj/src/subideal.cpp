#include "mbb/subideal.hpp"

#include "mbb/groebner.hpp"

namespace mbb {

static void require_nonzero(const std::vector<Poly> &ps, const char *what) {
  if (ps.empty())
    throw MathError(std::string("no ") + what + " generators");
  for (const auto &p : ps)
    if (p.is_zero())
      throw MathError(std::string("zero ") + what + " generator");
}

SubidealContext make_subideal_context(const std::vector<Poly> &f,
                                      const TermOrder &o) {
  require_nonzero(f, "subideal");
  return {f, syzygies(f, o), o};
}

Poly expand_in_P(const SubidealContext &ctx, const VecP &formal) {
  if (formal.rank() != ctx.rank())
    throw std::invalid_argument("formal combination rank mismatch");
  Poly out(ctx.nvars());
  for (const auto &[m, c] : formal.terms())
    out += c * (m.term * ctx.f[m.comp]);
  return out;
}

static std::vector<VecP> ideal_gb(const std::vector<Poly> &h,
                                  const TermOrder &o) {
  std::vector<VecP> hv;
  for (const auto &p : h)
    hv.push_back(as_vector(p));
  return groebner_basis(hv, o);
}

SubidealResult subideal_border_basis(const std::vector<Poly> &h,
                                     const std::vector<Poly> &f,
                                     const TermOrder &o, unsigned max_degree) {
  require_nonzero(h, "ideal");
  SubidealResult res;
  res.ctx = make_subideal_context(f, o);
  if (!finite_codimension(ideal_gb(h, o), o, h[0].nvars(), 1))
    throw MathError("the ideal I is not zero-dimensional");
  res.intersection = ideal_intersection(h, f, o);
  res.quotient =
      quotient_border_basis(res.intersection, res.ctx.syz, o, max_degree);
  const QuotPrebasis &qp = res.quotient.qp;
  res.of = qp.m_reps;
  for (std::size_t j = 0; j < qp.size(); ++j) {
    res.formal.push_back(qp.representative(j));
    res.expanded.push_back(expand_in_P(res.ctx, res.formal.back()));
  }
  return res;
}

SubidealCheck check_subideal_basis(const SubidealContext &ctx,
                                   const std::vector<ModuleTerm> &of,
                                   const std::vector<VecP> &formal,
                                   const std::vector<Poly> &h) {
  require_nonzero(h, "ideal");
  const TermOrder &o = ctx.order;
  SubidealCheck res;
  QuotientContext qctx(ctx.nvars(), ctx.rank(), ctx.syz, o);
  auto qp = QuotPrebasis::from_vectors(qctx, of, formal);
  res.quotient = check_quotient_basis(qp);
  if (!res.quotient.ok) {
    res.ok = false;
    res.failure = SubidealCheck::Failure::Quotient;
    return res;
  }
  auto gbI = ideal_gb(h, o);
  for (std::size_t j = 0; j < formal.size(); ++j) {
    Poly g = expand_in_P(ctx, formal[j]);
    VecP nf = gb_normal_form(gbI, as_vector(g), o);
    if (!nf.is_zero()) {
      res.ok = false;
      res.failure = SubidealCheck::Failure::NotInIdeal;
      res.index = j;
      res.residue = as_poly(nf);
      return res;
    }
  }
  auto tuples = ideal_intersection(h, ctx.f, o);
  for (std::size_t w = 0; w < tuples.size(); ++w) {
    VecP nr = normal_remainder(res.quotient.characterizing, tuples[w]);
    if (!nr.is_zero()) {
      res.ok = false;
      res.failure = SubidealCheck::Failure::IntersectionNotCovered;
      res.index = w;
      res.remainder = std::move(nr);
      return res;
    }
  }
  return res;
}

} // namespace mbb
