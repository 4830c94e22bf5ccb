#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cnz/errors.hpp"
#include "cnz/ring.hpp"

namespace cnz {

/// Dense square matrix over one domain, row-major, 0-based indices.
template <domain_element R>
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t order)
      : m_(order), a_(order * order, R::zero()) {}

  SquareMatrix(std::size_t order, std::vector<R> row_major)
      : m_(order), a_(std::move(row_major)) {
    if (a_.size() != m_ * m_)
      throw usage_error("matrix entries do not fill an order-" +
                        std::to_string(m_) + " square");
  }

  static SquareMatrix identity(std::size_t order) {
    SquareMatrix I(order);
    for (std::size_t i = 0; i < order; ++i) I.at(i, i) = R::one();
    return I;
  }

  std::size_t order() const { return m_; }

  const R& at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return a_[i * m_ + j];
  }
  R& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return a_[i * m_ + j];
  }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.m_ == b.m_ && a.a_ == b.a_;
  }

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < m_; ++i) {
      if (i) out += "; ";
      for (std::size_t j = 0; j < m_; ++j) {
        if (j) out += ' ';
        out += at(i, j).to_string();
      }
    }
    return out + "]";
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= m_ || j >= m_)
      throw usage_error("matrix index (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") out of range for order " +
                        std::to_string(m_));
  }

  std::size_t m_;
  std::vector<R> a_;
};

/// Length-checked column vector companion to SquareMatrix.
template <domain_element R>
class ColumnVector {
 public:
  explicit ColumnVector(std::vector<R> entries) : v_(std::move(entries)) {}

  std::size_t size() const { return v_.size(); }
  const R& at(std::size_t i) const {
    if (i >= v_.size()) throw usage_error("column vector index out of range");
    return v_[i];
  }
  std::span<const R> entries() const { return v_; }

 private:
  std::vector<R> v_;
};

/**
 * Vandermonde matrix of the given points: entry (i, j) = s_j^i, so row 0 is
 * all ones. Points must be pairwise distinct, otherwise the determinant is
 * zero and everything built on it collapses.
 */
template <domain_element R>
SquareMatrix<R> vandermonde_matrix(std::span<const R> points) {
  if (points.empty()) throw input_error("vandermonde: empty point list");
  if (!all_distinct(points))
    throw duplicate_error("vandermonde: points are not pairwise distinct");
  const std::size_t m = points.size();
  SquareMatrix<R> A(m);
  for (std::size_t j = 0; j < m; ++j) A.at(0, j) = R::one();
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      A.at(i, j) = A.at(i - 1, j) * points[j];
  return A;
}

namespace detail {

// Laplace expansion along the topmost remaining row, columns restricted to
// the mask. Division-free, valid over any domain. Empty determinant is one.
template <domain_element R>
R det_expand(const SquareMatrix<R>& M, std::size_t row, std::uint64_t colmask) {
  if (colmask == 0) return R::one();
  R sum = R::zero();
  bool negate = false;
  for (std::size_t j = 0; j < M.order(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (!(colmask & bit)) continue;
    if (!M.at(row, j).is_zero()) {
      R term = M.at(row, j) * det_expand(M, row + 1, colmask & ~bit);
      sum = negate ? sum - term : sum + term;
    }
    negate = !negate;
  }
  return sum;
}

}  // namespace detail

/**
 * Determinant by cofactor (Laplace) expansion along the first row. O(m!)
 * but division-free: the reference algorithm, correct in every domain.
 */
template <domain_element R>
R determinant_cofactor(const SquareMatrix<R>& M) {
  if (M.order() >= 64) throw usage_error("cofactor determinant: order >= 64");
  const std::uint64_t full =
      M.order() == 0 ? 0 : (~std::uint64_t{0} >> (64 - M.order()));
  return detail::det_expand(M, 0, full);
}

/**
 * Determinant by fraction-free (Bareiss) elimination, O(m^3) ring operations.
 * Every intermediate division is exact by the Sylvester identity; an inexact
 * one means the elimination state is corrupt and surfaces as integrity_error.
 */
template <exact_division_element R>
R determinant_bareiss(const SquareMatrix<R>& M) {
  const std::size_t m = M.order();
  if (m == 0) return R::one();
  std::vector<std::vector<R>> a(m);
  for (std::size_t i = 0; i < m; ++i) {
    a[i].reserve(m);
    for (std::size_t j = 0; j < m; ++j) a[i].push_back(M.at(i, j));
  }
  R prev = R::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < m && a[p][k].is_zero()) ++p;
      if (p == m) return R::zero();  // zero column below the diagonal
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = R::zero();
    }
    prev = a[k][k];
  }
  return negate ? -a[m - 1][m - 1] : a[m - 1][m - 1];
}

/// Fast determinant: Bareiss when the domain divides exactly, else Laplace.
template <domain_element R>
R determinant(const SquareMatrix<R>& M) {
  if constexpr (exact_division_element<R>)
    return determinant_bareiss(M);
  else
    return determinant_cofactor(M);
}

/// The (m-1)x(m-1) matrix with row i and column j deleted. Requires m >= 2.
template <domain_element R>
SquareMatrix<R> minor_matrix(const SquareMatrix<R>& M, std::size_t i,
                             std::size_t j) {
  const std::size_t m = M.order();
  if (m < 2) throw usage_error("minor of a matrix of order < 2");
  if (i >= m || j >= m) throw usage_error("minor index out of range");
  SquareMatrix<R> out(m - 1);
  for (std::size_t r = 0, ro = 0; r < m; ++r) {
    if (r == i) continue;
    for (std::size_t c = 0, co = 0; c < m; ++c) {
      if (c == j) continue;
      out.at(ro, co) = M.at(r, c);
      ++co;
    }
    ++ro;
  }
  return out;
}

/**
 * Cofactor (-1)^{i+j} det(minor). For an order-1 matrix the minor is the
 * empty matrix whose determinant is one, so the cofactor is one.
 */
template <domain_element R>
R cofactor(const SquareMatrix<R>& M, std::size_t i, std::size_t j) {
  if (i >= M.order() || j >= M.order())
    throw usage_error("cofactor index out of range");
  if (M.order() == 1) return R::one();
  R d = determinant_cofactor(minor_matrix(M, i, j));
  return ((i + j) % 2 == 0) ? d : -d;
}

/**
 * Closed form for the Vandermonde determinant: prod_{i<j} (s_j - s_i),
 * which equals det of vandermonde_matrix(points) with entries s_j^i.
 * (The opposite orientation prod_{i<j} (s_i - s_j) differs by the sign
 * (-1)^{m(m-1)/2}; everything here is stated against det(A).)
 * Nonzero for distinct points since the domain has no zero divisors.
 */
template <domain_element R>
R vandermonde_det_product(std::span<const R> points) {
  if (points.empty()) throw input_error("vandermonde: empty point list");
  R prod = R::one();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      R diff = points[j] - points[i];
      if (diff.is_zero())
        throw duplicate_error("vandermonde: points are not pairwise distinct");
      prod = prod * diff;
    }
  return prod;
}

}  // namespace cnz
