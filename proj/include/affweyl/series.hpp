#pragma once

#include "affweyl/element.hpp"
#include "affweyl/errors.hpp"
#include "affweyl/rational.hpp"

#include <string>
#include <vector>

namespace affweyl {

// Formal power series truncated at a fixed cap, exact coefficients.
// Arithmetic never reads past the cap; mixing caps is a caller error.
template <class R>
struct TruncSeries {
  long cap = 0;
  std::vector<R> c;  // c[0..cap]

  TruncSeries() = default;
  explicit TruncSeries(long cap_) : cap(cap_), c(cap_ + 1, R(0)) {}

  static TruncSeries constant(long cap, R v) {
    TruncSeries s(cap);
    s.c[0] = v;
    return s;
  }
  static TruncSeries one(long cap) { return constant(cap, R(1)); }

  // 1 - u^d
  static TruncSeries one_minus_power(long cap, long d) {
    TruncSeries s = one(cap);
    if (d <= cap) s.c[d] = s.c[d] - R(1);
    return s;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    check_caps(a, b);
    TruncSeries r(a.cap);
    for (long i = 0; i <= a.cap; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    check_caps(a, b);
    TruncSeries r(a.cap);
    for (long i = 0; i <= a.cap; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    check_caps(a, b);
    TruncSeries r(a.cap);
    for (long i = 0; i <= a.cap; ++i) {
      if (a.c[i] == R(0)) continue;
      for (long j = 0; i + j <= a.cap; ++j) {
        if (b.c[j] == R(0)) continue;
        r.c[i + j] += a.c[i] * b.c[j];
      }
    }
    return r;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.cap == b.cap && a.c == b.c;
  }
  friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

  static void check_caps(const TruncSeries& a, const TruncSeries& b) {
    if (a.cap != b.cap) throw std::invalid_argument("series cap mismatch");
  }
};

template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& s) {
  if (s.c[0] == R(0))
    throw std::domain_error("series_inverse: zero constant term is not a unit");
  TruncSeries<R> t(s.cap);
  R inv0 = R(1) / s.c[0];
  t.c[0] = inv0;
  for (long k = 1; k <= s.cap; ++k) {
    R acc(0);
    for (long j = 1; j <= k; ++j) acc += s.c[j] * t.c[k - j];
    t.c[k] = -acc * inv0;
  }
  return t;
}

// first degree where the two differ, or -1 when equal up to cap
template <class R>
long first_difference(const TruncSeries<R>& a, const TruncSeries<R>& b) {
  TruncSeries<R>::check_caps(a, b);
  for (long i = 0; i <= a.cap; ++i)
    if (!(a.c[i] == b.c[i])) return i;
  return -1;
}

template <class R>
std::string series_string(const TruncSeries<R>& s) {
  std::string out = "[";
  for (long i = 0; i <= s.cap; ++i) {
    if (i) out += ",";
    out += rational_string(s.c[i]);
  }
  return out + "]";
}

template <class R>
struct MatrixSeries {
  long dim = 0;
  long cap = 0;
  std::vector<TruncSeries<R>> e;  // row-major dim*dim

  MatrixSeries() = default;
  MatrixSeries(long dim_, long cap_)
      : dim(dim_), cap(cap_), e(dim_ * dim_, TruncSeries<R>(cap_)) {}

  TruncSeries<R>& at(long i, long j) { return e[i * dim + j]; }
  const TruncSeries<R>& at(long i, long j) const { return e[i * dim + j]; }

  static MatrixSeries identity(long dim, long cap) {
    MatrixSeries m(dim, cap);
    for (long i = 0; i < dim; ++i) m.at(i, i) = TruncSeries<R>::one(cap);
    return m;
  }

  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
    if (a.dim != b.dim || a.cap != b.cap)
      throw std::invalid_argument("matrix series mismatch");
    MatrixSeries r(a.dim, a.cap);
    for (long i = 0; i < a.dim; ++i)
      for (long k = 0; k < a.dim; ++k)
        for (long j = 0; j < a.dim; ++j)
          r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
    return r;
  }

  friend bool operator==(const MatrixSeries& a, const MatrixSeries& b) {
    return a.dim == b.dim && a.cap == b.cap && a.e == b.e;
  }
};

namespace detail {

// cofactor expansion along the first row; arithmetic stays in the
// truncated ring, fine for the small dimensions representations have
template <class R>
TruncSeries<R> det_cofactor(const MatrixSeries<R>& m, std::vector<long> cols, long row) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  TruncSeries<R> acc(m.cap);
  for (size_t k = 0; k < cols.size(); ++k) {
    std::vector<long> rest;
    rest.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    TruncSeries<R> minor = det_cofactor(m, rest, row + 1) * m.at(row, cols[k]);
    acc = (k % 2 == 0) ? acc + minor : acc - minor;
  }
  return acc;
}

// Bareiss over untruncated polynomials: exact division works in R[u],
// and truncating the final determinant equals the determinant in the
// truncated ring.
template <class R>
using Poly = std::vector<R>;

template <class R>
Poly<R> poly_mul(const Poly<R>& a, const Poly<R>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<R> r(a.size() + b.size() - 1, R(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == R(0)) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

template <class R>
Poly<R> poly_sub(Poly<R> a, const Poly<R>& b) {
  if (a.size() < b.size()) a.resize(b.size(), R(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (!a.empty() && a.back() == R(0)) a.pop_back();
  return a;
}

template <class R>
Poly<R> poly_divexact(const Poly<R>& a, const Poly<R>& b) {
  if (b.empty()) throw std::domain_error("poly division by zero");
  Poly<R> rem = a, q;
  if (rem.size() < b.size()) {
    if (rem.empty()) return {};
    throw std::logic_error("inexact polynomial division");
  }
  q.assign(rem.size() - b.size() + 1, R(0));
  for (long i = (long)rem.size() - 1; i >= (long)b.size() - 1; --i) {
    if (rem[i] == R(0)) continue;
    R f = rem[i] / b.back();
    q[i - b.size() + 1] = f;
    for (size_t j = 0; j < b.size(); ++j) rem[i - b.size() + 1 + j] -= f * b[j];
  }
  for (const auto& x : rem)
    if (!(x == R(0))) throw std::logic_error("inexact polynomial division");
  return q;
}

template <class R>
TruncSeries<R> det_bareiss(const MatrixSeries<R>& m) {
  long n = m.dim;
  std::vector<std::vector<Poly<R>>> a(n, std::vector<Poly<R>>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      Poly<R> p = m.at(i, j).c;
      while (!p.empty() && p.back() == R(0)) p.pop_back();
      a[i][j] = p;
    }
  Poly<R> prev = {R(1)};
  R sign(1);
  for (long k = 0; k < n - 1; ++k) {
    if (a[k][k].empty()) {
      long piv = -1;
      for (long r = k + 1; r < n; ++r)
        if (!a[r][k].empty()) { piv = r; break; }
      if (piv < 0) return TruncSeries<R>(m.cap);  // zero column: det = 0
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i)
      for (long j = k + 1; j < n; ++j) {
        Poly<R> num = poly_sub(poly_mul(a[i][j], a[k][k]), poly_mul(a[i][k], a[k][j]));
        a[i][j] = poly_divexact(num, prev);
      }
    prev = a[k][k];
  }
  TruncSeries<R> out(m.cap);
  const Poly<R>& det = a[n - 1][n - 1];
  for (long i = 0; i <= m.cap && i < (long)det.size(); ++i)
    out.c[i] = sign * det[i];
  return out;
}

}  // namespace detail

template <class R>
TruncSeries<R> matrix_series_det(const MatrixSeries<R>& m) {
  if (m.dim == 0) return TruncSeries<R>::one(m.cap);
  if (m.dim <= 4) {
    std::vector<long> cols(m.dim);
    for (long i = 0; i < m.dim; ++i) cols[i] = i;
    return detail::det_cofactor(m, cols, 0);
  }
  return detail::det_bareiss(m);
}

// Coefficient k = number of source elements of length k.
template <class R>
TruncSeries<R> poincare_series(const std::vector<long>& lengths, long cap) {
  TruncSeries<R> s(cap);
  for (long l : lengths)
    if (0 <= l && l <= cap) s.c[l] += R(1);
  return s;
}

template <class R>
TruncSeries<R> poincare_series(const std::vector<BallEntry>& entries, long cap) {
  TruncSeries<R> s(cap);
  for (const auto& e : entries)
    if (e.length <= cap) s.c[e.length] += R(1);
  return s;
}

// The Eq-style alternating product prod_{I subseteq S} W_I(u)^{(-1)^{|S|+|I|}}
// over all 2^{|S|} subsets, exact up to cap. Subsets iterate in bitmask
// order for reproducibility.
inline TruncSeries<BigRat> alternating_product(DatumPtr d, long cap,
                                               size_t capacity = kDefaultBallCapacity) {
  if (!d->affine)
    throw std::invalid_argument("alternating_product wants an affine datum");
  const int ngen = d->num_generators();
  TruncSeries<BigRat> result = TruncSeries<BigRat>::one(cap);
  for (unsigned mask = 0; mask < (1u << ngen); ++mask) {
    std::vector<int> gens;
    for (int i = 0; i < ngen; ++i)
      if (mask & (1u << i)) gens.push_back(i);
    auto entries = ball(d, gens, cap, capacity);
    TruncSeries<BigRat> w = poincare_series<BigRat>(entries, cap);
    bool positive = ((ngen + (int)gens.size()) % 2) == 0;
    result = positive ? result * w : result * series_inverse(w);
  }
  return result;
}

}  // namespace affweyl
