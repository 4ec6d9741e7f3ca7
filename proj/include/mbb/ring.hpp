#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mbb {

using Rat = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rat make_rat(const mpz_class &num, const mpz_class &den);

/// Raised when an input violates a mathematical precondition (cap reached,
/// non-divisor-closed set, missing characterizing order module, ...).
class MathError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A power product x_1^a_1 ... x_n^a_n.
class Term {
public:
  Term() = default;
  explicit Term(std::size_t nvars) : exp_(nvars, 0) {}
  explicit Term(std::vector<unsigned> exps);

  static Term variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return exp_.size(); }
  unsigned degree() const { return deg_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  const std::vector<unsigned> &exponents() const { return exp_; }
  bool is_one() const { return deg_ == 0; }

  // Structural comparison for container keys; term orderings live in TermOrder.
  friend auto operator<=>(const Term &, const Term &) = default;
  friend bool operator==(const Term &, const Term &) = default;

private:
  std::vector<unsigned> exp_;
  unsigned deg_ = 0;
};

Term operator*(const Term &a, const Term &b);
bool divides(const Term &a, const Term &b);
/// b / a; requires divides(a, b).
Term quot(const Term &b, const Term &a);
Term lcm(const Term &a, const Term &b);

/// t e_k with a 0-based component index.
struct ModuleTerm {
  Term term;
  std::size_t comp = 0;

  friend auto operator<=>(const ModuleTerm &, const ModuleTerm &) = default;
  friend bool operator==(const ModuleTerm &, const ModuleTerm &) = default;
};

inline ModuleTerm operator*(const Term &t, const ModuleTerm &m) {
  return {t * m.term, m.comp};
}

enum class BaseOrder { DegRevLex, DegLex, Lex };

/// How a term ordering on T^n extends to T^n<e_1..e_r>.
///   SigmaPos: compare terms first, ties broken by e_1 > e_2 > ...
///   PosSigma: compare components first (e_1 largest), then terms.
/// PosSigma is only used internally for syzygy computations.
enum class ModuleExtension { SigmaPos, PosSigma };

class TermOrder {
public:
  constexpr TermOrder() = default;
  constexpr explicit TermOrder(BaseOrder base,
                               ModuleExtension ext = ModuleExtension::SigmaPos)
      : base_(base), ext_(ext) {}

  BaseOrder base() const { return base_; }
  ModuleExtension extension() const { return ext_; }
  bool degree_compatible() const { return base_ != BaseOrder::Lex; }

  std::strong_ordering compare(const Term &a, const Term &b) const;
  std::strong_ordering compare(const ModuleTerm &a, const ModuleTerm &b) const;

  bool greater(const ModuleTerm &a, const ModuleTerm &b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  std::string name() const;
  static TermOrder from_name(const std::string &name);

  friend bool operator==(const TermOrder &, const TermOrder &) = default;

private:
  BaseOrder base_ = BaseOrder::DegRevLex;
  ModuleExtension ext_ = ModuleExtension::SigmaPos;
};

/// Sparse polynomial in K[x_1..x_n]; never stores zero coefficients.
class Poly {
public:
  using Map = std::map<Term, Rat>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(const Term &t, const Rat &c);
  static Poly constant(std::size_t nvars, const Rat &c);
  static Poly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map &terms() const { return terms_; }
  Rat coeff(const Term &t) const;
  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;

  void add_term(const Term &t, const Rat &c);

  Poly &operator+=(const Poly &o);
  Poly &operator-=(const Poly &o);
  Poly &operator*=(const Rat &c);

  friend Poly operator+(Poly a, const Poly &b) { return a += b; }
  friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(Poly a, const Rat &c) { return a *= c; }
  friend Poly operator*(const Rat &c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly &a, const Poly &b);
  friend bool operator==(const Poly &, const Poly &) = default;

  /// Terms sorted descending under the order.
  std::vector<std::pair<Term, Rat>> sorted(const TermOrder &o) const;
  std::pair<Term, Rat> leading(const TermOrder &o) const;

private:
  std::size_t nvars_ = 0;
  Map terms_;
};

Poly operator*(const Term &t, const Poly &p);

/// Element of P^r; sparse over module terms, never stores zeros.
class VecP {
public:
  using Map = std::map<ModuleTerm, Rat>;

  VecP() = default;
  VecP(std::size_t nvars, std::size_t rank) : nvars_(nvars), rank_(rank) {}
  static VecP unit(std::size_t nvars, std::size_t rank, std::size_t comp);
  static VecP monomial(std::size_t rank, const ModuleTerm &m, const Rat &c);
  static VecP from_components(std::size_t nvars,
                              const std::vector<Poly> &components);

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map &terms() const { return terms_; }
  Rat coeff(const ModuleTerm &m) const;
  bool contains(const ModuleTerm &m) const { return terms_.count(m) != 0; }
  int degree() const;
  Poly component(std::size_t k) const;
  std::vector<Poly> components() const;

  void add_term(const ModuleTerm &m, const Rat &c);
  /// this += c * t * v
  void add_scaled(const Rat &c, const Term &t, const VecP &v);

  VecP &operator+=(const VecP &o);
  VecP &operator-=(const VecP &o);
  VecP &operator*=(const Rat &c);

  friend VecP operator+(VecP a, const VecP &b) { return a += b; }
  friend VecP operator-(VecP a, const VecP &b) { return a -= b; }
  friend VecP operator-(VecP a) { return a *= Rat(-1); }
  friend VecP operator*(VecP a, const Rat &c) { return a *= c; }
  friend VecP operator*(const Rat &c, VecP a) { return a *= c; }
  friend bool operator==(const VecP &, const VecP &) = default;

  std::vector<std::pair<ModuleTerm, Rat>> sorted(const TermOrder &o) const;

private:
  void check_compatible(const VecP &o) const;

  std::size_t nvars_ = 0;
  std::size_t rank_ = 0;
  Map terms_;
};

VecP operator*(const Term &t, const VecP &v);
VecP operator*(const Poly &p, const VecP &v);

/// The σ-largest support term with its coefficient; throws on v = 0.
std::pair<ModuleTerm, Rat> leading_term(const TermOrder &o, const VecP &v);

/// All terms of exactly the given degree in n variables.
std::vector<Term> terms_of_degree(std::size_t nvars, unsigned degree);
/// All terms of degree <= bound.
std::vector<Term> terms_up_to_degree(std::size_t nvars, unsigned bound);

} // namespace mbb
