#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mbb/io.hpp"
#include "mbb/ring.hpp"

namespace mbb {

/// Contents of an input file:
///
///   ring Q[x,y]
///   rank 2
///   order degrevlex
///   module:            order module terms, comma separated
///   vectors:           one vector per line
///   syzygy:            generators of S, one per line
///   ideal:             generators of I (polynomials)
///   subideal:          the list F (polynomials)
///
/// '#' starts a comment.
struct Session {
  std::vector<std::string> vars;
  std::size_t rank = 1;
  TermOrder order;

  std::optional<std::vector<ModuleTerm>> module;
  std::vector<VecP> vectors;
  std::vector<VecP> syzygy;
  std::vector<Poly> ideal;
  std::vector<Poly> subideal;

  std::size_t nvars() const { return vars.size(); }
  Names names() const { return {vars, "e"}; }
};

/// Throws ParseError with "line N: ..." in the message.
Session parse_session(const std::string &text);
Session load_session(const std::string &path);

} // namespace mbb
