#include "mbb/session.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace mbb {

namespace {

std::string trim(const std::string &s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_line(std::size_t line, const std::string &msg,
                            std::size_t col = 1) {
  throw ParseError("line " + std::to_string(line) + ": " + msg, col);
}

std::vector<std::string> split_commas(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty())
      out.push_back(trim(item));
  return out;
}

} // namespace

Session parse_session(const std::string &text) {
  Session s;
  bool have_ring = false;
  enum class Sec { None, Module, Vectors, Syzygy, Ideal, Subideal } sec = Sec::None;
  static const std::regex ring_re(R"(ring\s+Q\s*\[([^\]]*)\])");
  static const std::regex rank_re(R"(rank\s+(\d+))");
  static const std::regex order_re(R"(order\s+(\S+))");
  static const std::regex ident_re(R"([A-Za-z_][A-Za-z0-9_]*)");

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty())
      continue;
    std::smatch m;
    if (line.back() == ':') {
      std::string name = trim(line.substr(0, line.size() - 1));
      if (name == "module")
        sec = Sec::Module;
      else if (name == "vectors")
        sec = Sec::Vectors;
      else if (name == "syzygy")
        sec = Sec::Syzygy;
      else if (name == "ideal")
        sec = Sec::Ideal;
      else if (name == "subideal")
        sec = Sec::Subideal;
      else
        fail_line(lineno, "unknown section '" + name + "'");
      if (!have_ring)
        fail_line(lineno, "section before the 'ring' line");
      if (sec == Sec::Module && !s.module)
        s.module.emplace();
      continue;
    }
    if (sec == Sec::None) {
      if (std::regex_match(line, m, ring_re)) {
        s.vars.clear();
        for (const auto &v : split_commas(m[1].str())) {
          if (!std::regex_match(v, ident_re))
            fail_line(lineno, "bad variable name '" + v + "'");
          if (std::find(s.vars.begin(), s.vars.end(), v) != s.vars.end())
            fail_line(lineno, "duplicate variable '" + v + "'");
          s.vars.push_back(v);
        }
        have_ring = true;
      } else if (std::regex_match(line, m, rank_re)) {
        s.rank = std::stoul(m[1].str());
      } else if (std::regex_match(line, m, order_re)) {
        try {
          s.order = TermOrder::from_name(m[1].str());
        } catch (const std::invalid_argument &e) {
          fail_line(lineno, e.what());
        }
      } else {
        fail_line(lineno, "expected 'ring', 'rank', 'order' or a section");
      }
      continue;
    }
    try {
      switch (sec) {
      case Sec::Module:
        for (const auto &item : split_commas(line))
          s.module->push_back(parse_module_term(item, s.vars, s.rank));
        break;
      case Sec::Vectors:
        s.vectors.push_back(parse_vector(line, s.vars, s.rank));
        break;
      case Sec::Syzygy:
        s.syzygy.push_back(parse_vector(line, s.vars, s.rank));
        break;
      case Sec::Ideal:
        s.ideal.push_back(parse_poly(line, s.vars));
        break;
      case Sec::Subideal:
        s.subideal.push_back(parse_poly(line, s.vars));
        break;
      case Sec::None:
        break;
      }
    } catch (const ParseError &e) {
      fail_line(lineno, e.what(), e.column());
    }
  }
  if (!have_ring)
    throw ParseError("missing 'ring Q[...]' line", 1);
  return s;
}

Session load_session(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_session(ss.str());
}

} // namespace mbb
