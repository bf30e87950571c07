#pragma once

#include "affweyl/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace affweyl {

template <class R>
using Vec = std::vector<R>;

template <class R>
Vec<R> zero_vec(size_t n) { return Vec<R>(n, R(0)); }

template <class R>
Vec<R> operator+(const Vec<R>& a, const Vec<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec<R> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <class R>
Vec<R> operator-(const Vec<R>& a, const Vec<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec<R> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class R>
Vec<R> operator*(const R& c, const Vec<R>& v) {
  Vec<R> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

template <class R>
R dot(const Vec<R>& a, const Vec<R>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  R s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <class R>
bool is_zero_vec(const Vec<R>& v) {
  for (const auto& x : v)
    if (!(x == R(0))) return false;
  return true;
}

template <class R>
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, R(0)) {}

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  R& operator()(size_t i, size_t j) { return d_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return d_[i * cols_ + j]; }

  const std::vector<R>& data() const { return d_; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dim mismatch");
    Mat r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (aik == R(0)) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend Vec<R> operator*(const Mat& a, const Vec<R>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix dim mismatch");
    Vec<R> r(a.rows_, R(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
    return r;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix dim mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
    return r;
  }

  friend Mat operator-(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix dim mismatch");
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
    return r;
  }

  friend Mat operator*(const R& c, const Mat& a) {
    Mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = c * a.d_[i];
    return r;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

private:
  size_t rows_, cols_;
  std::vector<R> d_;
};

// Solution of A x = b as one point plus a nullspace basis; nullopt if inconsistent.
template <class R>
struct AffineSolution {
  Vec<R> base;
  std::vector<Vec<R>> nullspace;
};

template <class R>
std::optional<AffineSolution<R>> solve_affine(Mat<R> a, Vec<R> b) {
  const size_t m = a.rows(), n = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_affine: dim mismatch");
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t p = row;
    while (p < m && a(p, col) == R(0)) ++p;
    if (p == m) continue;
    if (p != row) {
      for (size_t j = 0; j < n; ++j) std::swap(a(row, j), a(p, j));
      std::swap(b[row], b[p]);
    }
    R inv = R(1) / a(row, col);
    for (size_t j = 0; j < n; ++j) a(row, j) *= inv;
    b[row] *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row) continue;
      R f = a(r, col);
      if (f == R(0)) continue;
      for (size_t j = 0; j < n; ++j) a(r, j) -= f * a(row, j);
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (size_t r = row; r < m; ++r)
    if (!(b[r] == R(0))) return std::nullopt;

  AffineSolution<R> sol;
  sol.base = zero_vec<R>(n);
  std::vector<bool> is_pivot(n, false);
  for (size_t r = 0; r < pivot_col.size(); ++r) {
    is_pivot[pivot_col[r]] = true;
    sol.base[pivot_col[r]] = b[r];
  }
  for (size_t col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    Vec<R> dir = zero_vec<R>(n);
    dir[col] = R(1);
    for (size_t r = 0; r < pivot_col.size(); ++r)
      dir[pivot_col[r]] = -a(r, col);
    sol.nullspace.push_back(std::move(dir));
  }
  return sol;
}

template <class R>
Mat<R> invert(const Mat<R>& m) {
  const size_t n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("invert: not square");
  Mat<R> inv(n, n);
  for (size_t col = 0; col < n; ++col) {
    Vec<R> e = zero_vec<R>(n);
    e[col] = R(1);
    auto sol = solve_affine(m, e);
    if (!sol || !sol->nullspace.empty())
      throw std::domain_error("invert: singular matrix");
    for (size_t i = 0; i < n; ++i) inv(i, col) = sol->base[i];
  }
  return inv;
}

}  // namespace affweyl
