#include "mbb/mbba.hpp"

#include <algorithm>
#include <map>

#include "mbb/exactla.hpp"

namespace mbb {

std::pair<OrderModule, Prebasis>
module_border_basis(const std::vector<VecP> &gens, const TermOrder &o,
                    unsigned max_degree) {
  if (gens.empty())
    throw MathError("module border basis needs at least one generator");
  return module_border_basis(gens[0].nvars(), gens[0].rank(), gens, o,
                             max_degree);
}

std::pair<OrderModule, Prebasis>
module_border_basis(std::size_t nvars, std::size_t rank,
                    const std::vector<VecP> &gens, const TermOrder &o,
                    unsigned max_degree) {
  if (!o.degree_compatible())
    throw MathError("the border basis algorithm needs a degree compatible "
                    "term ordering");
  if (rank == 0) {
    auto om = OrderModule::validate(nvars, {}, o);
    return {om, Prebasis(om, {})};
  }
  std::vector<VecP> v;
  unsigned d = 0;
  for (const auto &g : gens) {
    if (g.rank() != rank || g.nvars() != nvars)
      throw std::invalid_argument("generator rank mismatch");
    if (g.is_zero())
      continue;
    v.push_back(g);
    d = std::max(d, static_cast<unsigned>(g.degree()));
  }
  if (v.empty())
    throw MathError("module border basis needs a nonzero generator");
  if (d > max_degree)
    throw MathError("codimension possibly infinite (cap " +
                    std::to_string(max_degree) + " reached)");

  std::vector<Term> vars;
  for (std::size_t s = 0; s < nvars; ++s)
    vars.push_back(Term::variable(nvars, s));

  auto L = module_terms_up_to(nvars, rank, d, o);
  v = span_basis(v, L);
  OrderModule om;
  for (;;) {
    // V := (V + x_1 V + ... + x_n V) ∩ <L> until the dimension is stable
    for (;;) {
      std::vector<VecP> w = v;
      for (const auto &b : v)
        for (const auto &x : vars)
          w.push_back(x * b);
      auto next = intersect_with_coordinate_space(w, L, o);
      bool stable = next.size() == v.size();
      v = span_basis(next, L);
      if (stable)
        break;
    }
    om = compute_order_module(d, v, nvars, rank, o);
    bool inside = std::all_of(om.border().begin(), om.border().end(),
                              [&](const ModuleTerm &b) {
                                return b.term.degree() <= d;
                              });
    if (inside)
      break;
    if (++d > max_degree)
      throw MathError("codimension possibly infinite (cap " +
                      std::to_string(max_degree) + " reached)");
    L = module_terms_up_to(nvars, rank, d, o);
  }

  // v is in RREF over L; the row with pivot b_j gives b_j ≡ Σ c_ij t_i.
  std::map<ModuleTerm, const VecP *> by_pivot;
  for (const auto &row : v)
    by_pivot[leading_term(o, row).first] = &row;
  std::vector<std::vector<Rat>> cols;
  for (const auto &b : om.border()) {
    auto it = by_pivot.find(b);
    if (it == by_pivot.end())
      throw std::logic_error("border term is not a pivot");
    std::vector<Rat> col(om.size());
    for (std::size_t i = 0; i < om.size(); ++i)
      col[i] = -it->second->coeff(om.term(i));
    cols.push_back(std::move(col));
  }
  Prebasis g(om, std::move(cols));
  return {std::move(om), std::move(g)};
}

} // namespace mbb
