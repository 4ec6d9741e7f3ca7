#include "mbb/proptest.hpp"

#include <functional>

#include "mbb/charsuite.hpp"
#include "mbb/groebner.hpp"
#include "mbb/io.hpp"
#include "mbb/mbba.hpp"
#include "mbb/random.hpp"

namespace mbb {

namespace {

using Check = std::function<std::string(Rng &)>; // "" on success

PropertyOutcome run_one(const std::string &name, std::uint64_t seed,
                        std::size_t cases, const Check &check) {
  PropertyOutcome out{name, cases, 0, ""};
  Rng rng(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    std::string msg;
    try {
      msg = check(rng);
    } catch (const std::exception &e) {
      msg = std::string("exception: ") + e.what();
    }
    if (!msg.empty() && out.failures++ == 0)
      out.first_failure = "case " + std::to_string(c) + ": " + msg;
  }
  return out;
}

// A prebasis that is a border basis about half of the time.
Prebasis mixed_prebasis(Rng &rng) {
  if (std::bernoulli_distribution(0.5)(rng)) {
    auto gens = random_finite_codim_generators(rng, 2, 2, 2);
    auto res = module_border_basis(gens, TermOrder());
    if (res.first.size() <= 12 && res.first.border_size() <= 12)
      return res.second;
  }
  auto om = random_order_module(rng, 2, 2, 6, true);
  return random_prebasis(rng, om, 0.3);
}

} // namespace

std::vector<PropertyOutcome> run_properties(std::uint64_t seed,
                                            std::size_t cases) {
  const TermOrder o;
  std::vector<PropertyOutcome> out;

  out.push_back(run_one("division identity and degree bound", seed, cases,
                        [&](Rng &rng) -> std::string {
    auto om = random_order_module(rng, 2, 2, 7, true);
    auto g = random_prebasis(rng, om);
    VecP v = random_vector(rng, 2, 2, 4, 5);
    auto res = divide(g, v);
    VecP sum = remainder_vector(om, res.coords);
    for (std::size_t j = 0; j < g.size(); ++j)
      sum += res.quotients[j] * g.vector(j);
    if (sum != v)
      return "reconstruction failed";
    if (!v.is_zero())
      for (const auto &p : res.quotients)
        if (!p.is_zero() && p.degree() > static_cast<int>(om.index(v)) - 1)
          return "quotient degree exceeds ind(v) - 1";
    auto alt = divide(g, v, &rng);
    if (alt.coords != res.coords || alt.quotients != res.quotients)
      return "result depends on the choice of the term";
    return "";
  }));

  out.push_back(run_one("criteria agreement", seed + 1, cases,
                        [&](Rng &rng) -> std::string {
    Prebasis g = mixed_prebasis(rng);
    bool all = buchberger_check(g, PairMode::AllPairs).ok;
    bool nb = buchberger_check(g, PairMode::NeighborsOnly).ok;
    bool cm = commuting_check(mult_matrices(g)).commuting;
    if (all != nb || nb != cm)
      return "AllPairs/NeighborsOnly/commuting disagree";
    return "";
  }));

  out.push_back(run_one("border basis algorithm equals Groebner path",
                        seed + 2, std::max<std::size_t>(1, cases / 2),
                        [&](Rng &rng) -> std::string {
    auto gens = random_finite_codim_generators(rng, 2, 2, 2);
    auto a = module_border_basis(gens, o);
    auto b = naive_border_basis(gens, o, 2, 2);
    if (!(a.first == b.first) || !(a.second == b.second))
      return "bases differ";
    return "";
  }));

  out.push_back(run_one("parse/print round trip", seed + 3, cases,
                        [&](Rng &rng) -> std::string {
    VecP v = random_vector(rng, 3, 3, 4, 6);
    Names names = default_names(3);
    std::string text = format_vector(v, o, names);
    if (parse_vector(text, names.vars, 3) != v)
      return "round trip failed for " + text;
    return "";
  }));

  out.push_back(run_one("disjoint borders", seed + 4, cases,
                        [&](Rng &rng) -> std::string {
    auto om = random_order_module(rng, 2, 2, 8, true);
    std::set<ModuleTerm> seen;
    for (unsigned k = 0; k <= 3; ++k)
      for (const auto &m : om.border(k)) {
        if (!seen.insert(m).second)
          return "border levels overlap";
        if (om.index(m) != k)
          return "index does not match border level";
      }
    return "";
  }));

  return out;
}

} // namespace mbb
