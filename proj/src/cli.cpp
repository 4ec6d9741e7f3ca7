#include "mbb/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "mbb/charsuite.hpp"
#include "mbb/groebner.hpp"
#include "mbb/io.hpp"
#include "mbb/mbba.hpp"
#include "mbb/proptest.hpp"
#include "mbb/quotient.hpp"
#include "mbb/session.hpp"
#include "mbb/subideal.hpp"

namespace mbb {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Out {
  const Session &s;
  bool json_mode;
  std::ostream &os;

  std::string vec(const VecP &v) const {
    return format_vector(v, s.order, s.names());
  }
  std::string mterm(const ModuleTerm &m) const {
    return format_module_term(m, s.names());
  }
  std::string poly(const Poly &p) const {
    return format_poly(p, s.order, s.vars);
  }
  std::string set(const std::vector<ModuleTerm> &ts,
                  const std::string &suffix = "") const {
    std::string r = "{";
    for (std::size_t i = 0; i < ts.size(); ++i)
      r += (i ? ", " : "") + mterm(ts[i]) + suffix;
    return r + "}";
  }
};

json j_mterm(const ModuleTerm &m) {
  return {{"component", m.comp + 1}, {"exponents", m.term.exponents()}};
}

json j_vec(const VecP &v, const TermOrder &o) {
  json a = json::array();
  for (const auto &[m, c] : v.sorted(o)) {
    json t = j_mterm(m);
    t["coefficient"] = format_rat(c);
    a.push_back(t);
  }
  return a;
}

json j_poly(const Poly &p, const TermOrder &o) {
  json a = json::array();
  for (const auto &[t, c] : p.sorted(o))
    a.push_back({{"exponents", t.exponents()}, {"coefficient", format_rat(c)}});
  return a;
}

json j_terms(const std::vector<ModuleTerm> &ts) {
  json a = json::array();
  for (const auto &m : ts)
    a.push_back(j_mterm(m));
  return a;
}

void require(bool cond, const std::string &msg) {
  if (!cond)
    throw UsageError(msg);
}

Prebasis session_prebasis(const Session &s) {
  require(s.module.has_value(), "this command needs a 'module:' section");
  require(!s.vectors.empty() || s.module->empty(),
          "this command needs a 'vectors:' section");
  auto om = OrderModule::from_terms(s.nvars(), s.rank, *s.module, s.order);
  return Prebasis::from_vectors(std::move(om), s.vectors);
}

void cmd_compute(const Out &o, unsigned cap) {
  require(!o.s.vectors.empty(), "compute needs a 'vectors:' section");
  auto [om, g] = module_border_basis(o.s.nvars(), o.s.rank, o.s.vectors,
                                     o.s.order, cap);
  if (o.json_mode) {
    json b = json::array();
    for (const auto &v : g.vectors())
      b.push_back(j_vec(v, o.s.order));
    o.os << json{{"M", j_terms(om.terms())},
                 {"border", j_terms(om.border())},
                 {"basis", b}}
                .dump(2)
         << "\n";
    return;
  }
  o.os << "M = " << o.set(om.terms()) << "\n";
  o.os << "border = " << o.set(om.border()) << "\n";
  for (std::size_t j = 0; j < g.size(); ++j)
    o.os << "G" << j + 1 << " = " << o.vec(g.vector(j)) << "\n";
}

void cmd_divide(const Out &o, const std::string &vtext) {
  Prebasis g = session_prebasis(o.s);
  VecP v;
  try {
    v = parse_vector(vtext, o.s.vars, o.s.rank);
  } catch (const ParseError &e) {
    throw ParseError(std::string("--vector: ") + e.what(), e.column());
  }
  auto res = divide(g, v);
  VecP nr = remainder_vector(g.om(), res.coords);
  if (o.json_mode) {
    json q = json::array(), c = json::array();
    for (const auto &p : res.quotients)
      q.push_back(j_poly(p, o.s.order));
    for (const auto &x : res.coords)
      c.push_back(format_rat(x));
    o.os << json{{"quotients", q},
                 {"coordinates", c},
                 {"remainder", j_vec(nr, o.s.order)}}
                .dump(2)
         << "\n";
    return;
  }
  for (std::size_t j = 0; j < res.quotients.size(); ++j)
    o.os << "p" << j + 1 << " = " << o.poly(res.quotients[j]) << "\n";
  o.os << "coordinates = (";
  for (std::size_t i = 0; i < res.coords.size(); ++i)
    o.os << (i ? ", " : "") << format_rat(res.coords[i]);
  o.os << ")\n";
  o.os << "NR = " << o.vec(nr) << "\n";
}

void cmd_check(const Out &o) {
  if (!o.s.syzygy.empty()) {
    require(o.s.module.has_value(), "check needs a 'module:' section");
    QuotientContext ctx(o.s.nvars(), o.s.rank, o.s.syzygy, o.s.order);
    auto qp = QuotPrebasis::from_vectors(ctx, *o.s.module, o.s.vectors);
    auto res = check_quotient_basis(qp);
    std::string verdict;
    if (res.ok)
      verdict = "quotient module border basis";
    else if (res.failure == QuotientCheck::Failure::Buchberger)
      verdict = "NOT a quotient module border basis; witness SV(G" +
                std::to_string(res.buchberger.i + 1) + ",G" +
                std::to_string(res.buchberger.j + 1) +
                ") of the characterizing prebasis, NR = " +
                o.vec(res.buchberger.nr);
    else
      verdict = "NOT a quotient module border basis; S-generator " +
                std::to_string(res.generator + 1) + " not in <G>, NR = " +
                o.vec(res.remainder);
    if (o.json_mode) {
      json cg = json::array();
      for (const auto &v : res.characterizing.vectors())
        cg.push_back(j_vec(v, o.s.order));
      o.os << json{{"ok", res.ok}, {"verdict", verdict}, {"characterizing", cg}}
                  .dump(2)
           << "\n";
      return;
    }
    o.os << verdict << "\n";
    for (std::size_t j = 0; j < res.characterizing.size(); ++j)
      o.os << "  G" << j + 1 << " = " << o.vec(res.characterizing.vector(j))
           << "\n";
    return;
  }

  Prebasis g = session_prebasis(o.s);
  auto bb = buchberger_check(g, PairMode::NeighborsOnly);
  auto cc = commuting_check(mult_matrices(g));
  std::string verdict =
      bb.ok ? "border basis"
            : "NOT a border basis; witness SV(G" + std::to_string(bb.i + 1) +
                  ",G" + std::to_string(bb.j + 1) + "), NR = " + o.vec(bb.nr);
  if (o.json_mode) {
    json j{{"ok", bb.ok}, {"verdict", verdict}, {"commuting", cc.commuting}};
    if (!bb.ok)
      j["witness"] = {{"i", bb.i + 1}, {"j", bb.j + 1},
                      {"nr", j_vec(bb.nr, o.s.order)}};
    o.os << j.dump(2) << "\n";
    return;
  }
  o.os << verdict << "\n";
  o.os << "multiplication matrices commute: "
       << (cc.commuting ? "yes" : "no (" + o.s.vars[cc.s] + ", " +
                                      o.s.vars[cc.u] + ")")
       << "\n";
}

void cmd_multmat(const Out &o) {
  Prebasis g = session_prebasis(o.s);
  auto mm = mult_matrices(g);
  auto cc = commuting_check(mm);
  if (o.json_mode) {
    json mats = json::object();
    for (std::size_t s = 0; s < mm.mats.size(); ++s) {
      json rows = json::array();
      for (std::size_t i = 0; i < mm.mats[s].rows(); ++i) {
        json r = json::array();
        for (const auto &x : mm.mats[s].row(i))
          r.push_back(format_rat(x));
        rows.push_back(r);
      }
      mats[o.s.vars[s]] = rows;
    }
    o.os << json{{"matrices", mats}, {"commuting", cc.commuting}}.dump(2)
         << "\n";
    return;
  }
  for (std::size_t s = 0; s < mm.mats.size(); ++s) {
    o.os << "X_" << o.s.vars[s] << " =\n";
    for (std::size_t i = 0; i < mm.mats[s].rows(); ++i) {
      o.os << "  [";
      for (std::size_t l = 0; l < mm.mats[s].cols(); ++l)
        o.os << (l ? " " : "") << format_rat(mm.mats[s](i, l));
      o.os << "]\n";
    }
  }
  o.os << "commuting: "
       << (cc.commuting ? "yes"
                        : "no (" + o.s.vars[cc.s] + ", " + o.s.vars[cc.u] + ")")
       << "\n";
}

void cmd_groebner(const Out &o) {
  require(!o.s.vectors.empty(), "groebner needs a 'vectors:' section");
  auto gb = groebner_basis(o.s.vectors, o.s.order);
  if (o.json_mode) {
    json a = json::array();
    for (const auto &v : gb)
      a.push_back(j_vec(v, o.s.order));
    o.os << json{{"groebner_basis", a}}.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < gb.size(); ++i)
    o.os << "GB" << i + 1 << " = " << o.vec(gb[i]) << "\n";
}

void cmd_quotient(const Out &o, unsigned cap) {
  require(!o.s.vectors.empty(), "quotient needs a 'vectors:' section");
  auto res = quotient_border_basis(o.s.vectors, o.s.syzygy, o.s.order, cap);
  const auto &qp = res.qp;
  if (o.json_mode) {
    json gs = json::array(), ch = json::array();
    for (std::size_t j = 0; j < qp.size(); ++j)
      gs.push_back({{"border", j_mterm(qp.border_reps[j])},
                    {"canonical", j_vec(qp.canonical(j), o.s.order)}});
    for (const auto &v : res.g.vectors())
      ch.push_back(j_vec(v, o.s.order));
    o.os << json{{"M", j_terms(qp.m_reps)},
                 {"basis", gs},
                 {"characterizing", ch}}
                .dump(2)
         << "\n";
    return;
  }
  o.os << "M^S = " << o.set(qp.m_reps, " + S") << "\n";
  for (std::size_t j = 0; j < qp.size(); ++j)
    o.os << "G" << j + 1 << "^S = " << o.vec(qp.canonical(j)) << " + S\n";
  o.os << "characterizing prebasis:\n";
  for (std::size_t j = 0; j < res.g.size(); ++j)
    o.os << "  G" << j + 1 << " = " << o.vec(res.g.vector(j)) << "\n";
}

void cmd_subideal(const Out &o, unsigned cap) {
  require(!o.s.ideal.empty(), "subideal needs an 'ideal:' section");
  require(!o.s.subideal.empty(), "subideal needs a 'subideal:' section");
  auto res = subideal_border_basis(o.s.ideal, o.s.subideal, o.s.order, cap);
  Names fnames{o.s.vars, "f"};
  if (o.json_mode) {
    json g = json::array();
    for (std::size_t j = 0; j < res.formal.size(); ++j)
      g.push_back({{"formal", j_vec(res.formal[j], o.s.order)},
                   {"expanded", j_poly(res.expanded[j], o.s.order)}});
    o.os << json{{"O_F", j_terms(res.of)}, {"basis", g}}.dump(2) << "\n";
    return;
  }
  o.os << "O_F = {";
  for (std::size_t i = 0; i < res.of.size(); ++i)
    o.os << (i ? ", " : "") << format_module_term(res.of[i], fnames);
  o.os << "}\n";
  for (std::size_t j = 0; j < res.formal.size(); ++j) {
    o.os << "g" << j + 1 << " = "
         << format_vector(res.formal[j], o.s.order, fnames) << "\n";
    o.os << "   = " << o.poly(res.expanded[j]) << "\n";
  }
}

int cmd_proptest(std::ostream &os, std::uint64_t seed, std::size_t cases) {
  bool ok = true;
  for (const auto &r : run_properties(seed, cases)) {
    os << (r.failures ? "FAIL " : "PASS ") << r.name << " (" << r.cases
       << " cases";
    if (r.failures)
      os << ", " << r.failures << " failed: " << r.first_failure;
    os << ")\n";
    ok = ok && r.failures == 0;
  }
  return ok ? ExitOk : ExitPropertyFailed;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Module border bases over Q"};
  app.require_subcommand(1);
  unsigned cap = default_max_degree;
  std::string format = "pretty";
  app.add_option("--max-degree", cap, "degree cap for the border basis loop")
      ->capture_default_str();
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"pretty", "json"}))
      ->capture_default_str();

  std::string file, vtext;
  std::uint64_t seed = 1;
  std::size_t cases = 100;
  auto add = [&](const char *name, const char *help) {
    auto *sc = app.add_subcommand(name, help);
    sc->add_option("file", file, "input file")->required();
    return sc;
  };
  auto *compute = add("compute", "module border basis of the 'vectors:'");
  auto *divide_c = add("divide", "border division against a prebasis");
  divide_c->add_option("--vector", vtext, "vector to divide")->required();
  auto *check = add("check", "decide whether a prebasis is a border basis");
  auto *multmat = add("multmat", "formal multiplication matrices");
  auto *groebner = add("groebner", "reduced Groebner basis of the 'vectors:'");
  auto *quotient = add("quotient", "quotient module border basis");
  auto *subideal = add("subideal", "subideal border basis");
  auto *proptest = app.add_subcommand("proptest", "randomized self-checks");
  proptest->add_option("--seed", seed, "random seed")->capture_default_str();
  proptest->add_option("--cases", cases, "cases per property")
      ->capture_default_str();
  app.fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return ExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return ExitUsage;
  }

  try {
    if (proptest->parsed())
      return cmd_proptest(out, seed, cases);
    Session s = load_session(file);
    Out o{s, format == "json", out};
    if (compute->parsed())
      cmd_compute(o, cap);
    else if (divide_c->parsed())
      cmd_divide(o, vtext);
    else if (check->parsed())
      cmd_check(o);
    else if (multmat->parsed())
      cmd_multmat(o);
    else if (groebner->parsed())
      cmd_groebner(o);
    else if (quotient->parsed())
      cmd_quotient(o, cap);
    else if (subideal->parsed())
      cmd_subideal(o, cap);
    return ExitOk;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return ExitUsage;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return ExitParse;
  } catch (const MathError &e) {
    err << "error: " << e.what() << "\n";
    return ExitMath;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return ExitMath;
  } catch (const std::runtime_error &e) {
    err << "error: " << e.what() << "\n";
    return ExitUsage;
  }
}

} // namespace mbb
