#pragma once

#include <vector>

#include "mbb/ordstruct.hpp"
#include "mbb/ring.hpp"

namespace mbb {

/// Dense row-major matrix over Q.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::vector<Rat> row(std::size_t i) const;
  std::vector<Rat> column(std::size_t j) const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b);
  friend RatMatrix operator+(const RatMatrix &a, const RatMatrix &b);
  friend RatMatrix operator*(const Rat &c, const RatMatrix &a);
  friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

std::vector<Rat> operator*(const RatMatrix &a, const std::vector<Rat> &v);

struct RrefResult {
  RatMatrix matrix; // zero rows kept at the bottom
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form with the leftmost-nonzero pivot rule.
RrefResult rref(RatMatrix m);

/// Coordinates of v in the given column order; throws if v has support
/// outside the universe.
std::vector<Rat> coordinates(const VecP &v,
                             const std::vector<ModuleTerm> &universe);
VecP from_coordinates(const std::vector<Rat> &coords,
                      const std::vector<ModuleTerm> &universe,
                      std::size_t nvars, std::size_t rank);

/// Basis of span(vectors) as the nonzero rows of the RREF relative to the
/// universe (which callers pass σ-descending).
std::vector<VecP> span_basis(const std::vector<VecP> &vectors,
                             const std::vector<ModuleTerm> &universe);

/// Basis of span(vectors) ∩ span_K(keep). keep is used in the given order
/// as the trailing block of coordinates.
std::vector<VecP> intersect_with_coordinate_space(
    const std::vector<VecP> &vectors, const std::vector<ModuleTerm> &keep,
    const TermOrder &order);

/// All module terms of degree <= d in rank components, σ-descending.
std::vector<ModuleTerm> module_terms_up_to(std::size_t nvars, std::size_t rank,
                                           unsigned d, const TermOrder &order);

/// The order module spanned by the pivot-free columns of the RREF of the
/// generators over L = T^n_{<=d}<e_1..e_r> (columns σ-descending).
OrderModule compute_order_module(unsigned d, const std::vector<VecP> &gens,
                                 std::size_t nvars, std::size_t rank,
                                 const TermOrder &order);

} // namespace mbb
