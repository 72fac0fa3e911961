#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "poncelet/errors.hpp"
#include "poncelet/rational.hpp"

namespace poncelet {

/// Dense row-major matrix with value semantics.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * c));
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, T(0));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::vector<T> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }
  [[nodiscard]] std::vector<T> col(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RationalVector = std::vector<Rational>;

inline RationalVector mat_vec(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RationalVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

namespace detail {

// Scales each row by the lcm of its denominators.
inline Matrix<BigInt> integer_rows(const RationalMatrix& m) {
  Matrix<BigInt> out(m.rows(), m.cols(), BigInt(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInt d = m(r, c).denominator();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& q = m(r, c);
      out(r, c) = q.numerator() * (l / q.denominator());
    }
  }
  return out;
}

}  // namespace detail

/// Exact rank by fraction-free (Bareiss) elimination on integer-scaled rows.
inline std::size_t rank(const RationalMatrix& m) {
  Matrix<BigInt> a = detail::integer_rows(m);
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && a(pivot, c) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(r, pivot);
    const BigInt p = a(r, c);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const BigInt f = a(i, c);
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        BigInt v = p * a(i, j) - f * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

/// Reduced row-echelon form over Q; `pivots` receives the pivot columns.
inline RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  if (pivots) pivots->clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    const Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

/// Basis of the right null space {v : m v = 0}. One vector per free column,
/// in increasing column order, with a 1 in its free column and 0 in the
/// other free columns. Empty iff m has full column rank.
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  const RationalMatrix e = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -e(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  Rational det(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t p = c;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) return Rational(0);
    if (p != c) {
      m.swap_rows(p, c);
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

inline RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  const RationalMatrix e = rref(aug, &pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DegeneracyError("singular matrix");
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = e(i, n + j);
  return out;
}

/// True iff u = c·v for some nonzero c (both nonzero, same length).
inline bool projectively_equal(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size()) return false;
  std::size_t lead = 0;
  while (lead < u.size() && u[lead].is_zero()) ++lead;
  if (lead == u.size() || v[lead].is_zero()) return false;
  const Rational scale = v[lead] / u[lead];
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] * scale != v[i]) return false;
  return true;
}

/// Scales v so its first nonzero entry is 1. The zero vector is returned unchanged.
inline RationalVector normalize_projective(RationalVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& q) { return !q.is_zero(); });
  if (it == v.end()) return v;
  const Rational inv = it->inverse();
  for (auto& q : v) q *= inv;
  return v;
}

}  // namespace poncelet
