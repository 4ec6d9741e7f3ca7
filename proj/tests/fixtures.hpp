#pragma once

// Worked example data shared by the unit tests and the acceptance binary.

#include <string>
#include <vector>

#include "mbb/io.hpp"
#include "mbb/prebasis.hpp"

namespace fx {

using namespace mbb;

inline const std::vector<std::string> &xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

inline VecP V(const std::string &s, std::size_t rank = 2) {
  return parse_vector(s, xy(), rank);
}
inline Poly P(const std::string &s) { return parse_poly(s, xy()); }
inline Term T(const std::string &s) {
  return parse_poly(s, xy()).terms().begin()->first;
}
inline ModuleTerm MT(const std::string &s, std::size_t rank = 2) {
  return parse_module_term(s, xy(), rank);
}
inline std::vector<ModuleTerm> MTs(const std::vector<std::string> &ss,
                                   std::size_t rank = 2) {
  std::vector<ModuleTerm> out;
  for (const auto &s : ss)
    out.push_back(MT(s, rank));
  return out;
}
inline std::vector<VecP> Vs(const std::vector<std::string> &ss,
                            std::size_t rank = 2) {
  std::vector<VecP> out;
  for (const auto &s : ss)
    out.push_back(V(s, rank));
  return out;
}
inline OrderIdeal ideal(const std::vector<std::string> &ss) {
  OrderIdeal o;
  for (const auto &s : ss)
    o.insert(T(s));
  return o;
}

inline std::string show(const VecP &v) {
  return format_vector(v, TermOrder(), default_names(v.nvars()));
}

// O1 = {x, y, 1}, O2 = {x^2, x, 1}
inline OrderModule example_om() {
  return OrderModule::validate(2, {ideal({"x", "y", "1"}),
                                   ideal({"x^2", "x", "1"})});
}

inline std::vector<VecP> example_prebasis_vectors() {
  return Vs({"x^2*e1 - y*e1 + e2", "x*y*e1 - e2", "y^2*e1 - x*e2",
             "x^3*e2 - e1", "x^2*y*e2 - e1 - e2", "x*y*e2 + 3*e1",
             "y*e2 - x*e1 - y*e1 - e1 - e2"});
}

inline Prebasis example_prebasis() {
  return Prebasis::from_vectors(example_om(), example_prebasis_vectors());
}

inline VecP division_input() { return V("x^3*e1 + x*y*e1 + x^3*y*e2"); }

inline std::vector<VecP> mbba_generators() {
  return Vs({"(-2)*e1 + (3*x - 1)*e2", "(3*x + 4)*e1 + 2*e2", "(y - 1)*e2",
             "(y - 1)*e1", "(x + y + 1)*e1 + (-x + y)*e2"});
}

inline std::vector<VecP> mbba_expected() {
  return Vs({"x*e1 + 4/3*e1 + 2/3*e2", "x*e2 - 2/3*e1 - 1/3*e2", "y*e1 - e1",
             "y*e2 - e2"});
}

inline VecP quotient_syzygy() { return V("(x + y + 1)*e1 + (-x + y)*e2"); }

inline std::vector<VecP> quotient_u_generators() {
  auto g = mbba_generators();
  g.pop_back();
  return g;
}

inline std::vector<Poly> subideal_f() { return {P("x - y"), P("x + y + 1")}; }
inline std::vector<Poly> subideal_h() { return {P("x^2 + x*y"), P("y - 1")}; }

} // namespace fx
