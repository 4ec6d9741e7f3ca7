#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mbb/ring.hpp"

namespace mbb {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &msg, std::size_t column)
      : std::runtime_error(msg + " (column " + std::to_string(column) + ")"),
        column_(column) {}
  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

/// x, y, z for up to three variables, otherwise x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

struct Names {
  std::vector<std::string> vars;
  std::string comp = "e"; // printed as e1, e2, ...
};

Names default_names(std::size_t nvars);

std::string format_rat(const Rat &q);
std::string format_term(const Term &t, const std::vector<std::string> &vars);
std::string format_module_term(const ModuleTerm &m, const Names &names);
std::string format_poly(const Poly &p, const TermOrder &o,
                        const std::vector<std::string> &vars);
std::string format_vector(const VecP &v, const TermOrder &o,
                          const Names &names);

Rat parse_rat(std::string_view src);
Poly parse_poly(std::string_view src, const std::vector<std::string> &vars);
/// Every nonzero monomial needs exactly one e<k> factor with 1 <= k <= rank.
VecP parse_vector(std::string_view src, const std::vector<std::string> &vars,
                  std::size_t rank, const std::string &comp = "e");
ModuleTerm parse_module_term(std::string_view src,
                             const std::vector<std::string> &vars,
                             std::size_t rank);

} // namespace mbb
