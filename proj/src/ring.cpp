#include "mbb/ring.hpp"

#include <algorithm>
#include <numeric>

namespace mbb {

Rat make_rat(const mpz_class &num, const mpz_class &den) {
  if (den == 0)
    throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Term::Term(std::vector<unsigned> exps) : exp_(std::move(exps)) {
  deg_ = std::accumulate(exp_.begin(), exp_.end(), 0u);
}

Term Term::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars)
    throw std::invalid_argument("variable index out of range");
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  return Term(std::move(e));
}

static void check_dims(const Term &a, const Term &b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("term dimension mismatch");
}

Term operator*(const Term &a, const Term &b) {
  check_dims(a, b);
  std::vector<unsigned> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a[i] + b[i];
  return Term(std::move(e));
}

bool divides(const Term &a, const Term &b) {
  check_dims(a, b);
  if (a.degree() > b.degree())
    return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Term quot(const Term &b, const Term &a) {
  if (!divides(a, b))
    throw std::invalid_argument("quot: divisor does not divide");
  std::vector<unsigned> e(b.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = b[i] - a[i];
  return Term(std::move(e));
}

Term lcm(const Term &a, const Term &b) {
  check_dims(a, b);
  std::vector<unsigned> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a[i], b[i]);
  return Term(std::move(e));
}

// ---- TermOrder -------------------------------------------------------------

std::strong_ordering TermOrder::compare(const Term &a, const Term &b) const {
  check_dims(a, b);
  const std::size_t n = a.nvars();
  if (base_ != BaseOrder::Lex && a.degree() != b.degree())
    return a.degree() <=> b.degree();
  if (base_ == BaseOrder::DegRevLex) {
    // last differing exponent: the smaller one wins
    for (std::size_t i = n; i-- > 0;)
      if (a[i] != b[i])
        return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i])
      return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering TermOrder::compare(const ModuleTerm &a,
                                        const ModuleTerm &b) const {
  if (ext_ == ModuleExtension::PosSigma && a.comp != b.comp)
    return b.comp <=> a.comp;
  auto c = compare(a.term, b.term);
  if (c != 0)
    return c;
  return b.comp <=> a.comp;
}

std::string TermOrder::name() const {
  switch (base_) {
  case BaseOrder::DegRevLex:
    return "degrevlex";
  case BaseOrder::DegLex:
    return "deglex";
  case BaseOrder::Lex:
    return "lex";
  }
  return "?";
}

TermOrder TermOrder::from_name(const std::string &name) {
  if (name == "degrevlex")
    return TermOrder(BaseOrder::DegRevLex);
  if (name == "deglex")
    return TermOrder(BaseOrder::DegLex);
  if (name == "lex")
    return TermOrder(BaseOrder::Lex);
  throw std::invalid_argument("unknown term ordering '" + name + "'");
}

// ---- Poly ------------------------------------------------------------------

Poly::Poly(const Term &t, const Rat &c) : nvars_(t.nvars()) { add_term(t, c); }

Poly Poly::constant(std::size_t nvars, const Rat &c) {
  return Poly(Term(nvars), c);
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  return Poly(Term::variable(nvars, index), Rat(1));
}

Rat Poly::coeff(const Term &t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto &[t, c] : terms_)
    d = std::max(d, static_cast<int>(t.degree()));
  return d;
}

void Poly::add_term(const Term &t, const Rat &c) {
  if (t.nvars() != nvars_)
    throw std::invalid_argument("polynomial dimension mismatch");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Poly &Poly::operator+=(const Poly &o) {
  for (const auto &[t, c] : o.terms_)
    add_term(t, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &o) {
  for (const auto &[t, c] : o.terms_)
    add_term(t, -c);
  return *this;
}

Poly &Poly::operator*=(const Rat &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[t, a] : terms_)
    a *= c;
  return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
  if (a.nvars() != b.nvars())
    throw std::invalid_argument("polynomial dimension mismatch");
  Poly r(a.nvars());
  for (const auto &[s, c] : a.terms())
    for (const auto &[t, d] : b.terms())
      r.add_term(s * t, c * d);
  return r;
}

Poly operator*(const Term &t, const Poly &p) {
  Poly r(p.nvars());
  for (const auto &[s, c] : p.terms())
    r.add_term(t * s, c);
  return r;
}

std::vector<std::pair<Term, Rat>> Poly::sorted(const TermOrder &o) const {
  std::vector<std::pair<Term, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto &a, const auto &b) {
    return o.compare(a.first, b.first) == std::strong_ordering::greater;
  });
  return v;
}

std::pair<Term, Rat> Poly::leading(const TermOrder &o) const {
  if (terms_.empty())
    throw std::invalid_argument("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (o.compare(it->first, best->first) == std::strong_ordering::greater)
      best = it;
  return *best;
}

// ---- VecP ------------------------------------------------------------------

VecP VecP::unit(std::size_t nvars, std::size_t rank, std::size_t comp) {
  return monomial(rank, ModuleTerm{Term(nvars), comp}, Rat(1));
}

VecP VecP::monomial(std::size_t rank, const ModuleTerm &m, const Rat &c) {
  VecP v(m.term.nvars(), rank);
  v.add_term(m, c);
  return v;
}

VecP VecP::from_components(std::size_t nvars,
                           const std::vector<Poly> &components) {
  VecP v(nvars, components.size());
  for (std::size_t k = 0; k < components.size(); ++k)
    for (const auto &[t, c] : components[k].terms())
      v.add_term(ModuleTerm{t, k}, c);
  return v;
}

Rat VecP::coeff(const ModuleTerm &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

int VecP::degree() const {
  int d = -1;
  for (const auto &[m, c] : terms_)
    d = std::max(d, static_cast<int>(m.term.degree()));
  return d;
}

Poly VecP::component(std::size_t k) const {
  Poly p(nvars_);
  for (const auto &[m, c] : terms_)
    if (m.comp == k)
      p.add_term(m.term, c);
  return p;
}

std::vector<Poly> VecP::components() const {
  std::vector<Poly> out(rank_, Poly(nvars_));
  for (const auto &[m, c] : terms_)
    out[m.comp].add_term(m.term, c);
  return out;
}

void VecP::add_term(const ModuleTerm &m, const Rat &c) {
  if (m.comp >= rank_)
    throw std::invalid_argument("component index out of range");
  if (m.term.nvars() != nvars_)
    throw std::invalid_argument("term dimension mismatch");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void VecP::add_scaled(const Rat &c, const Term &t, const VecP &v) {
  check_compatible(v);
  if (c == 0)
    return;
  for (const auto &[m, a] : v.terms_)
    add_term(ModuleTerm{t * m.term, m.comp}, c * a);
}

void VecP::check_compatible(const VecP &o) const {
  if (o.rank_ != rank_ || o.nvars_ != nvars_)
    throw std::invalid_argument("vector rank mismatch");
}

VecP &VecP::operator+=(const VecP &o) {
  check_compatible(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, c);
  return *this;
}

VecP &VecP::operator-=(const VecP &o) {
  check_compatible(o);
  for (const auto &[m, c] : o.terms_)
    add_term(m, -c);
  return *this;
}

VecP &VecP::operator*=(const Rat &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, a] : terms_)
    a *= c;
  return *this;
}

VecP operator*(const Term &t, const VecP &v) {
  VecP r(v.nvars(), v.rank());
  r.add_scaled(Rat(1), t, v);
  return r;
}

VecP operator*(const Poly &p, const VecP &v) {
  if (p.nvars() != v.nvars())
    throw std::invalid_argument("polynomial dimension mismatch");
  VecP r(v.nvars(), v.rank());
  for (const auto &[t, c] : p.terms())
    r.add_scaled(c, t, v);
  return r;
}

std::vector<std::pair<ModuleTerm, Rat>> VecP::sorted(const TermOrder &o) const {
  std::vector<std::pair<ModuleTerm, Rat>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(),
            [&](const auto &a, const auto &b) { return o.greater(a.first, b.first); });
  return v;
}

std::pair<ModuleTerm, Rat> leading_term(const TermOrder &o, const VecP &v) {
  if (v.is_zero())
    throw std::invalid_argument("leading term of zero vector");
  auto best = v.terms().begin();
  for (auto it = std::next(best); it != v.terms().end(); ++it)
    if (o.greater(it->first, best->first))
      best = it;
  return *best;
}

// ---- term enumeration ------------------------------------------------------

static void enumerate(std::size_t nvars, std::size_t pos, unsigned left,
                      std::vector<unsigned> &cur, std::vector<Term> &out) {
  if (pos + 1 == nvars) {
    cur[pos] = left;
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur[pos] = e;
    enumerate(nvars, pos + 1, left - e, cur, out);
  }
  cur[pos] = 0;
}

std::vector<Term> terms_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Term> out;
  if (nvars == 0) {
    if (degree == 0)
      out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> cur(nvars, 0);
  enumerate(nvars, 0, degree, cur, out);
  return out;
}

std::vector<Term> terms_up_to_degree(std::size_t nvars, unsigned bound) {
  std::vector<Term> out;
  for (unsigned d = 0; d <= bound; ++d) {
    auto level = terms_of_degree(nvars, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

} // namespace mbb
