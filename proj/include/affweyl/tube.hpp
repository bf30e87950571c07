#pragma once

#include "affweyl/element.hpp"
#include "affweyl/rootdata.hpp"
#include "affweyl/series.hpp"

#include <optional>
#include <vector>

namespace affweyl {

// Exact affine subspace base + span(directions), directions independent.
struct AffineSubspace {
  Vec<Rat> base;
  std::vector<Vec<Rat>> directions;

  long dimension() const { return (long)directions.size(); }

  bool contains(const Vec<Rat>& p) const {
    if (directions.empty()) return p == base;
    Mat<Rat> m(base.size(), directions.size());
    for (size_t j = 0; j < directions.size(); ++j)
      for (size_t i = 0; i < base.size(); ++i) m(i, j) = directions[j][i];
    return solve_affine(m, p - base).has_value();
  }
};

struct DriftData {
  long order_m = 1;            // multiplicative order of the linear part
  Vec<Rat> v;                  // drift vector v_w
  std::optional<int> direction;  // i with v parallel to omega_i^vee
  std::optional<Rat> c;          // the coefficient, when direction is set
};

constexpr long kMaxLinearOrder = 60;

inline long linear_order(const AffineWeylElement& w) {
  const Mat<Rat> id = Mat<Rat>::identity(w.linear.rows());
  Mat<Rat> p = w.linear;
  for (long m = 1; m <= kMaxLinearOrder; ++m) {
    if (p == id) return m;
    p = p * w.linear;
  }
  throw std::logic_error("linear part order exceeds cap; not a Weyl group element?");
}

// v = c * w for some rational c != 0?
inline std::optional<Rat> parallel_coefficient(const Vec<Rat>& v, const Vec<Rat>& w) {
  Rat c(0);
  bool have = false;
  for (size_t i = 0; i < v.size(); ++i) {
    if (w[i] == Rat(0)) {
      if (!(v[i] == Rat(0))) return std::nullopt;
      continue;
    }
    Rat ratio = v[i] / w[i];
    if (!have) {
      c = ratio;
      have = true;
    } else if (ratio != c) {
      return std::nullopt;
    }
  }
  if (!have || c == Rat(0)) return std::nullopt;
  return c;
}

// w^m is the translation by m*v_w; v_w = 0 exactly for elliptic elements.
inline DriftData drift(const AffineWeylElement& w) {
  DriftData d;
  d.order_m = linear_order(w);
  AffineWeylElement p = power(w, (int)d.order_m);
  if (!(p.linear == Mat<Rat>::identity(w.linear.rows())))
    throw std::logic_error("w^m not a translation; order computation bug");
  d.v = (Rat(1) / Rat(d.order_m)) * p.translation;
  if (!is_zero_vec(d.v)) {
    for (int i = 1; i <= w.datum->rank; ++i) {
      auto c = parallel_coefficient(d.v, w.datum->fundamental_coweights[i - 1]);
      if (c) {
        d.direction = i;
        d.c = *c;
        break;
      }
    }
  }
  return d;
}

// Min(w) = {x : w(x) = x + v_w}, solved inside the coroot span so the
// dimension is intrinsic to the ambient model of the acting group.
inline AffineSubspace min_set(const AffineWeylElement& w) {
  const RootDatum& d = *w.datum;
  DriftData dd = drift(w);
  const int dim = d.ambient_dim, r = d.rank;
  // x = C y with coroot columns; solve (M - I) C y = v - t
  Mat<Rat> lhs(dim, r);
  Mat<Rat> mi = w.linear - Mat<Rat>::identity(dim);
  for (int j = 0; j < r; ++j) {
    Vec<Rat> col = mi * d.simple_coroots[j];
    for (int i = 0; i < dim; ++i) lhs(i, j) = col[i];
  }
  auto sol = solve_affine(lhs, dd.v - w.translation);
  if (!sol)
    throw std::logic_error("empty Min set; affine Weyl elements are semi-simple");
  auto to_ambient = [&](const Vec<Rat>& y) {
    Vec<Rat> x = zero_vec<Rat>(dim);
    for (int j = 0; j < r; ++j) x = x + y[j] * d.simple_coroots[j];
    return x;
  };
  AffineSubspace out;
  out.base = to_ambient(sol->base);
  for (const auto& y : sol->nullspace) out.directions.push_back(to_ambient(y));
  return out;
}

// True unless some wall H_{alpha,k} contains the whole subspace: a root
// functional constant on the subspace with an integer value.
inline bool avoids_walls(const AffineSubspace& sub, const RootDatum& d) {
  for (const auto& alpha : d.positive_roots) {
    bool constant = true;
    for (const auto& dir : sub.directions)
      if (!(pairing(alpha, dir) == Rat(0))) {
        constant = false;
        break;
      }
    if (constant && pairing(alpha, sub.base).is_integer()) return false;
  }
  return true;
}

// Stabilizer criterion: v_w a nonzero multiple of omega_i^vee and Min(w)
// in no wall.
inline bool stabilizes_tube(const AffineWeylElement& w, int i) {
  if (i < 1 || i > w.datum->rank)
    throw std::invalid_argument("stabilizes_tube: coweight index out of range");
  DriftData d = drift(w);
  if (is_zero_vec(d.v))
    throw std::invalid_argument("stabilizes_tube: elliptic element (zero drift)");
  auto c = parallel_coefficient(d.v, w.datum->fundamental_coweights[i - 1]);
  if (!c) return false;
  return avoids_walls(min_set(w), *w.datum);
}

struct StraightnessReport {
  bool powers_ok = false;   // l(w^k) = k l(w) for k = 1..k_max
  bool formula_ok = false;  // l(w) = <2rho, dominant(v_w)>
  long len = 0;
  Rat expected_len;
};

inline StraightnessReport is_straight(const AffineWeylElement& w, int k_max) {
  if (k_max < 2) throw std::invalid_argument("is_straight: k_max must be >= 2");
  StraightnessReport rep;
  rep.len = length(w);
  rep.powers_ok = true;
  AffineWeylElement p = w;
  for (int k = 2; k <= k_max; ++k) {
    p = compose(p, w);
    if (length(p) != k * rep.len) {
      rep.powers_ok = false;
      break;
    }
  }
  DriftData d = drift(w);
  Vec<Rat> vd = dominant_representative(*w.datum, d.v);
  rep.expected_len = pairing(w.datum->two_rho, vd);
  rep.formula_ok = (rep.expected_len == Rat(rep.len));
  return rep;
}

// d_i = (omega_i,alpha_i^vee)/(omega_i,omega_i) * <2rho, omega_i>, with the
// integrality of the result enforced rather than assumed.
inline long tube_degree(const RootDatum& d, int i) {
  if (i < 1 || i > d.rank)
    throw std::invalid_argument("tube_degree: index out of range");
  const Vec<Rat>& omega = d.fundamental_coweights[i - 1];
  Rat ratio = inner(d, omega, d.simple_coroots[i - 1]) / inner(d, omega, omega);
  Rat val = ratio * pairing(d.two_rho, omega);
  if (!val.is_integer() || !(val > Rat(0)))
    throw VerificationError("tube_degree: " + d.descriptor() + " i=" + std::to_string(i) +
                            " gave non-positive-integer " + val.str());
  return val.num();
}

}  // namespace affweyl
