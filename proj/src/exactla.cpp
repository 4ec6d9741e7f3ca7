#include "mbb/exactla.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mbb {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto &r : rows) {
    if (r.size() != cols_)
      throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

std::vector<Rat> RatMatrix::row(std::size_t i) const {
  return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
}

std::vector<Rat> RatMatrix::column(std::size_t j) const {
  std::vector<Rat> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rat &x) { return x == 0; });
}

RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat &x = a(i, k);
      if (x == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0)
          c(i, j) += x * b(k, j);
    }
  return c;
}

RatMatrix operator+(const RatMatrix &a, const RatMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix dimension mismatch");
  RatMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i)
    c.data_[i] += b.data_[i];
  return c;
}

RatMatrix operator*(const Rat &s, const RatMatrix &a) {
  RatMatrix c = a;
  for (auto &x : c.data_)
    x *= s;
  return c;
}

std::vector<Rat> operator*(const RatMatrix &a, const std::vector<Rat> &v) {
  if (a.cols() != v.size())
    throw std::invalid_argument("matrix dimension mismatch");
  std::vector<Rat> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && v[j] != 0)
        out[i] += a(i, j) * v[j];
  return out;
}

RrefResult rref(RatMatrix m) {
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0)
      ++p;
    if (p == m.rows())
      continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (m(r, j) != 0)
        m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0)
          m(i, j) -= f * m(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.matrix = std::move(m);
  return res;
}

std::vector<Rat> coordinates(const VecP &v,
                             const std::vector<ModuleTerm> &universe) {
  std::map<ModuleTerm, std::size_t> pos;
  for (std::size_t i = 0; i < universe.size(); ++i)
    pos[universe[i]] = i;
  std::vector<Rat> out(universe.size());
  for (const auto &[m, c] : v.terms()) {
    auto it = pos.find(m);
    if (it == pos.end())
      throw std::invalid_argument("vector has support outside the universe");
    out[it->second] = c;
  }
  return out;
}

VecP from_coordinates(const std::vector<Rat> &coords,
                      const std::vector<ModuleTerm> &universe,
                      std::size_t nvars, std::size_t rank) {
  VecP v(nvars, rank);
  for (std::size_t i = 0; i < universe.size(); ++i)
    v.add_term(universe[i], coords[i]);
  return v;
}

static RatMatrix stack(const std::vector<VecP> &vectors,
                       const std::vector<ModuleTerm> &universe) {
  std::map<ModuleTerm, std::size_t> pos;
  for (std::size_t i = 0; i < universe.size(); ++i)
    pos[universe[i]] = i;
  RatMatrix m(vectors.size(), universe.size());
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (const auto &[t, c] : vectors[r].terms()) {
      auto it = pos.find(t);
      if (it == pos.end())
        throw std::invalid_argument("vector has support outside the universe");
      m(r, it->second) = c;
    }
  return m;
}

std::vector<VecP> span_basis(const std::vector<VecP> &vectors,
                             const std::vector<ModuleTerm> &universe) {
  if (vectors.empty())
    return {};
  auto rr = rref(stack(vectors, universe));
  std::vector<VecP> out;
  for (std::size_t i = 0; i < rr.rank(); ++i)
    out.push_back(from_coordinates(rr.matrix.row(i), universe,
                                   vectors[0].nvars(), vectors[0].rank()));
  return out;
}

std::vector<VecP> intersect_with_coordinate_space(
    const std::vector<VecP> &vectors, const std::vector<ModuleTerm> &keep,
    const TermOrder &order) {
  if (vectors.empty())
    return {};
  std::set<ModuleTerm> keepset(keep.begin(), keep.end());
  std::set<ModuleTerm> outside;
  for (const auto &v : vectors)
    for (const auto &[m, c] : v.terms())
      if (!keepset.count(m))
        outside.insert(m);
  std::vector<ModuleTerm> universe(outside.begin(), outside.end());
  std::sort(universe.begin(), universe.end(),
            [&](const ModuleTerm &a, const ModuleTerm &b) {
              return order.greater(a, b);
            });
  const std::size_t split = universe.size();
  universe.insert(universe.end(), keep.begin(), keep.end());

  auto rr = rref(stack(vectors, universe));
  std::vector<VecP> out;
  for (std::size_t i = 0; i < rr.rank(); ++i) {
    if (rr.pivots[i] < split)
      continue;
    out.push_back(from_coordinates(rr.matrix.row(i), universe,
                                   vectors[0].nvars(), vectors[0].rank()));
  }
  return out;
}

std::vector<ModuleTerm> module_terms_up_to(std::size_t nvars, std::size_t rank,
                                           unsigned d, const TermOrder &order) {
  std::vector<ModuleTerm> out;
  for (const auto &t : terms_up_to_degree(nvars, d))
    for (std::size_t k = 0; k < rank; ++k)
      out.push_back({t, k});
  std::sort(out.begin(), out.end(),
            [&](const ModuleTerm &a, const ModuleTerm &b) {
              return order.greater(a, b);
            });
  return out;
}

OrderModule compute_order_module(unsigned d, const std::vector<VecP> &gens,
                                 std::size_t nvars, std::size_t rank,
                                 const TermOrder &order) {
  if (!order.degree_compatible())
    throw MathError("computeOrderModule needs a degree compatible ordering");
  auto L = module_terms_up_to(nvars, rank, d, order);
  std::vector<bool> pivot(L.size(), false);
  if (!gens.empty()) {
    auto rr = rref(stack(gens, L));
    for (auto p : rr.pivots)
      pivot[p] = true;
  }
  std::vector<OrderIdeal> ideals(rank);
  for (std::size_t i = 0; i < L.size(); ++i)
    if (!pivot[i])
      ideals[L[i].comp].insert(L[i].term);
  try {
    return OrderModule::validate(nvars, std::move(ideals), order);
  } catch (const MathError &e) {
    throw MathError(std::string("computeOrderModule: span is not stable (") +
                    e.what() + ")");
  }
}

} // namespace mbb
