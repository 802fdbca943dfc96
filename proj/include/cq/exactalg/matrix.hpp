#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cq/core/error.hpp"
#include "cq/exactalg/rat.hpp"

namespace cq {

// Dense row-major matrix over an exact field F.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const F& fill = F())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const F& sample = F()) {
    Matrix m(n, n, zero_like(sample));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(sample);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.data_.reserve(rows.size() * cols);
    for (const auto& r : rows) {
      if (r.size() != cols) fail(ErrorCode::InvalidInput, "ragged matrix rows");
      m.data_.insert(m.data_.end(), r.begin(), r.end());
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<F> col(std::size_t j) const {
    std::vector<F> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    if (data_.empty()) return Matrix(cols_, rows_);
    Matrix t(cols_, rows_, data_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = F(r.data_[k] + o.data_[k]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = F(r.data_[k] - o.data_[k]);
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) fail(ErrorCode::InvalidInput, "matrix product shape mismatch");
    const F zero = data_.empty() ? (o.data_.empty() ? F() : zero_like(o.data_.front()))
                                 : zero_like(data_.front());
    Matrix r(rows_, o.cols_, zero);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& a = (*this)(i, k);
        if (is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (is_zero(o(k, j))) continue;
          r(i, j) = F(r(i, j) + F(a * o(k, j)));
        }
      }
    return r;
  }
  Matrix scaled(const F& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x = F(x * s);
    return r;
  }
  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> out(rows_, v.empty() ? F() : zero_like(v.front()));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(v[j])) out[i] = F(out[i] + F((*this)(i, j) * v[j]));
    return out;
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }
  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  const std::vector<F>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using QMatrix = Matrix<Rat>;

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination to reduced row echelon form.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> res;
  const std::size_t R = m.rows(), C = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = r;
    while (p < R && is_zero(m(p, c))) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
    const F inv = F(one_like(m(r, c)) / m(r, c));
    for (std::size_t j = c; j < C; ++j)
      if (!is_zero(m(r, j))) m(r, j) = F(m(r, j) * inv);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F f = m(i, c);
      for (std::size_t j = c; j < C; ++j)
        if (!is_zero(m(r, j))) m(i, j) = F(m(i, j) - F(f * m(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

// Basis of the right null space {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m, const F& sample = F()) {
  const auto rr = rref(m);
  const std::size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  const F zero = zero_like(sample), one = one_like(sample);
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(C, zero);
    v[free] = one;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = F(-rr.reduced(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) fail(ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) fail(ErrorCode::InvalidInput, "determinant of empty matrix");
  F det = one_like(m(0, 0));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return zero_like(det);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = F(-det);
    }
    det = F(det * m(c, c));
    const F inv = F(one_like(det) / m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const F f = F(m(i, c) * inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = F(m(i, j) - F(f * m(c, j)));
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) fail(ErrorCode::InvalidInput, "inverse of non-square matrix");
  if (n == 0) return m;
  Matrix<F> aug(n, 2 * n, zero_like(m(0, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one_like(m(0, 0));
  }
  const auto rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n, zero_like(m(0, 0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

// Some solution x of a x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b, const F& sample = F()) {
  const std::size_t R = a.rows(), C = a.cols();
  Matrix<F> aug(R, C + 1, zero_like(sample));
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) aug(i, j) = a(i, j);
    aug(i, C) = b[i];
  }
  const auto rr = rref(aug);
  if (rr.rank > 0 && rr.pivots[rr.rank - 1] == C) return std::nullopt;
  std::vector<F> x(C, zero_like(sample));
  for (std::size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, C);
  return x;
}

// Reduced basis of the row space spanned by the given vectors.
template <class F>
std::vector<std::vector<F>> row_space_basis(const std::vector<std::vector<F>>& vectors, std::size_t dim,
                                            const F& sample = F()) {
  if (vectors.empty()) return {};
  const auto rr = rref(Matrix<F>::from_rows(vectors, dim));
  std::vector<std::vector<F>> out;
  for (std::size_t i = 0; i < rr.rank; ++i) out.push_back(rr.reduced.row(i));
  (void)sample;
  return out;
}

template <class F>
std::size_t span_rank(const std::vector<std::vector<F>>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rref(Matrix<F>::from_rows(vectors, dim)).rank;
}

// Equality of the subspaces spanned by two families of vectors.
template <class F>
bool same_span(const std::vector<std::vector<F>>& a, const std::vector<std::vector<F>>& b, std::size_t dim) {
  const std::size_t ra = span_rank(a, dim), rb = span_rank(b, dim);
  if (ra != rb) return false;
  std::vector<std::vector<F>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both, dim) == ra;
}

template <class F>
bool in_span(const std::vector<std::vector<F>>& family, const std::vector<F>& v, std::size_t dim) {
  auto both = family;
  both.push_back(v);
  return span_rank(both, dim) == span_rank(family, dim);
}

}  // namespace cq
