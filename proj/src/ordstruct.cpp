#include "mbb/ordstruct.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace mbb {

static std::string term_text(const Term &t) {
  if (t.is_one())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < t.nvars(); ++i) {
    if (t[i] == 0)
      continue;
    if (!s.empty())
      s += "*";
    s += "x" + std::to_string(i + 1);
    if (t[i] > 1)
      s += "^" + std::to_string(t[i]);
  }
  return s;
}

unsigned ideal_index(std::size_t nvars, const OrderIdeal &o, const Term &t) {
  if (t.nvars() != nvars)
    throw std::invalid_argument("term dimension mismatch");
  if (o.empty())
    return t.degree() + 1;
  if (o.count(t))
    return 0;
  unsigned best = std::numeric_limits<unsigned>::max();
  for (const auto &u : o)
    if (divides(u, t))
      best = std::min(best, t.degree() - u.degree());
  return best;
}

static unsigned ideal_max_degree(const OrderIdeal &o) {
  unsigned d = 0;
  for (const auto &t : o)
    d = std::max(d, t.degree());
  return d;
}

std::set<Term> ideal_border(std::size_t nvars, const OrderIdeal &o,
                            unsigned k) {
  std::set<Term> out;
  if (k == 0)
    return o;
  unsigned bound = o.empty() ? k - 1 : ideal_max_degree(o) + k;
  for (const auto &t : terms_up_to_degree(nvars, bound))
    if (ideal_index(nvars, o, t) == k)
      out.insert(t);
  return out;
}

OrderModule OrderModule::validate(std::size_t nvars,
                                  std::vector<OrderIdeal> ideals,
                                  const TermOrder &order) {
  OrderModule m;
  m.nvars_ = nvars;
  m.order_ = order;
  for (std::size_t k = 0; k < ideals.size(); ++k) {
    for (const auto &t : ideals[k]) {
      if (t.nvars() != nvars)
        throw std::invalid_argument("term dimension mismatch");
      for (std::size_t i = 0; i < nvars; ++i) {
        if (t[i] == 0)
          continue;
        Term d = quot(t, Term::variable(nvars, i));
        if (!ideals[k].count(d))
          throw MathError("not divisor-closed: missing " + term_text(d) +
                          "*e" + std::to_string(k + 1) + " (divisor of " +
                          term_text(t) + "*e" + std::to_string(k + 1) + ")");
      }
    }
  }
  m.ideals_ = std::move(ideals);

  std::vector<ModuleTerm> terms, border;
  for (std::size_t k = 0; k < m.ideals_.size(); ++k) {
    for (const auto &t : m.ideals_[k])
      terms.push_back({t, k});
    for (const auto &b : ideal_border(nvars, m.ideals_[k], 1))
      border.push_back({b, k});
  }
  m.terms_ = m.sort_canonical(std::move(terms));
  m.border_ = m.sort_canonical(std::move(border));
  for (std::size_t i = 0; i < m.terms_.size(); ++i)
    m.term_pos_[m.terms_[i]] = i;
  for (std::size_t j = 0; j < m.border_.size(); ++j)
    m.border_pos_[m.border_[j]] = j;
  return m;
}

OrderModule OrderModule::from_terms(std::size_t nvars, std::size_t rank,
                                    const std::vector<ModuleTerm> &terms,
                                    const TermOrder &order) {
  std::vector<OrderIdeal> ideals(rank);
  for (const auto &m : terms) {
    if (m.comp >= rank)
      throw std::invalid_argument("component index out of range");
    ideals[m.comp].insert(m.term);
  }
  return validate(nvars, std::move(ideals), order);
}

std::vector<ModuleTerm>
OrderModule::sort_canonical(std::vector<ModuleTerm> v) const {
  std::sort(v.begin(), v.end(),
            [&](const ModuleTerm &a, const ModuleTerm &b) {
              if (a.comp != b.comp)
                return a.comp < b.comp;
              return order_.compare(a.term, b.term) ==
                     std::strong_ordering::greater;
            });
  return v;
}

bool OrderModule::contains(const ModuleTerm &m) const {
  return term_pos_.count(m) != 0;
}

std::optional<std::size_t> OrderModule::position(const ModuleTerm &m) const {
  auto it = term_pos_.find(m);
  if (it == term_pos_.end())
    return std::nullopt;
  return it->second;
}

std::optional<std::size_t>
OrderModule::border_position(const ModuleTerm &m) const {
  auto it = border_pos_.find(m);
  if (it == border_pos_.end())
    return std::nullopt;
  return it->second;
}

unsigned OrderModule::index(const ModuleTerm &m) const {
  if (m.comp >= rank())
    throw std::invalid_argument("component index out of range");
  return ideal_index(nvars_, ideals_[m.comp], m.term);
}

unsigned OrderModule::index(const VecP &v) const {
  if (v.is_zero())
    throw std::invalid_argument("index of the zero vector");
  unsigned d = 0;
  for (const auto &[m, c] : v.terms())
    d = std::max(d, index(m));
  return d;
}

std::vector<ModuleTerm> OrderModule::border(unsigned k) const {
  if (k == 0)
    return terms_;
  if (k == 1)
    return border_;
  std::vector<ModuleTerm> out;
  for (std::size_t c = 0; c < rank(); ++c)
    for (const auto &t : ideal_border(nvars_, ideals_[c], k))
      out.push_back({t, c});
  return sort_canonical(std::move(out));
}

std::vector<ModuleTerm> OrderModule::border_closure(unsigned k) const {
  std::vector<ModuleTerm> out;
  for (unsigned i = 0; i <= k; ++i) {
    auto level = border(i);
    out.insert(out.end(), level.begin(), level.end());
  }
  return sort_canonical(std::move(out));
}

std::pair<Term, std::size_t>
OrderModule::factor_through_border(const ModuleTerm &m) const {
  unsigned ind = index(m);
  if (ind == 0)
    throw std::invalid_argument("factor_through_border: term lies in M");
  for (std::size_t j = 0; j < border_.size(); ++j) {
    const auto &b = border_[j];
    if (b.comp != m.comp || !divides(b.term, m.term))
      continue;
    if (m.term.degree() - b.term.degree() == ind - 1)
      return {quot(m.term, b.term), j};
  }
  throw std::logic_error("factor_through_border: no border factor");
}

std::vector<ModuleTerm> OrderModule::corners() const {
  std::vector<ModuleTerm> out;
  for (const auto &b : border_) {
    bool corner = true;
    for (std::size_t i = 0; i < nvars_ && corner; ++i)
      if (b.term[i] > 0 &&
          !contains({quot(b.term, Term::variable(nvars_, i)), b.comp}))
        corner = false;
    if (corner)
      out.push_back(b);
  }
  return out;
}

unsigned OrderModule::max_degree() const {
  unsigned d = 0;
  for (const auto &o : ideals_)
    d = std::max(d, ideal_max_degree(o));
  return d;
}

} // namespace mbb
