#pragma once

#include "affweyl/linalg.hpp"
#include "affweyl/rational.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace affweyl {

enum class Family { A, B, C, D, E, F, G };

inline char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
    case Family::E: return 'E';
    case Family::F: return 'F';
    case Family::G: return 'G';
  }
  return '?';
}

inline Family parse_family(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return Family::A;
      case 'B': case 'b': return Family::B;
      case 'C': case 'c': return Family::C;
      case 'D': case 'd': return Family::D;
      case 'E': case 'e': return Family::E;
      case 'F': case 'f': return Family::F;
      case 'G': case 'g': return Family::G;
    }
  }
  throw std::invalid_argument("unknown family '" + s + "' (expected one of A,B,C,D,E,F,G)");
}

// Exact root-system data for one irreducible family, finite or affine.
// Family A lives on the sum-zero hyperplane of R^n with coordinates
// (x_0..x_{n-1}) and e_i(x) = x_{n-i}; family C lives on R^{n-1} with
// e_i(x) = x_i. Both match the explicit generator formulas those models
// were chosen for. Remaining families use their usual orthonormal models.
struct RootDatum {
  Family family;
  int rank;            // number of simple roots of the finite system
  bool affine;
  int ambient_dim;

  std::vector<Vec<Rat>> simple_roots;
  std::vector<Vec<Rat>> simple_coroots;
  std::vector<Vec<Rat>> fundamental_coweights;
  std::vector<Vec<Rat>> positive_roots;
  std::vector<Vec<Rat>> positive_coroots;
  Vec<Rat> highest_root;
  Vec<Rat> highest_coroot;  // coroot of the highest root
  Vec<Rat> two_rho;
  Mat<Rat> gram;
  std::vector<std::vector<long long>> cartan;

  // generic interior point of the fundamental alcove: 0 < <alpha,p> < 1
  // for every positive root
  Vec<Rat> alcove_point;

  int n() const { return rank + 1; }  // the classical size parameter for families A and C
  int num_generators() const { return affine ? rank + 1 : rank; }

  std::string descriptor() const {
    return std::string(1, family_char(family)) + std::to_string(rank) +
           (affine ? "~" : "");
  }

  bool compatible(const RootDatum& o) const {
    return family == o.family && rank == o.rank && affine == o.affine;
  }
};

using DatumPtr = std::shared_ptr<const RootDatum>;

inline Rat inner(const RootDatum& d, const Vec<Rat>& v, const Vec<Rat>& w) {
  if ((int)v.size() != d.ambient_dim || (int)w.size() != d.ambient_dim)
    throw std::invalid_argument("inner: dimension mismatch with ambient model");
  Rat s(0);
  for (int i = 0; i < d.ambient_dim; ++i)
    for (int j = 0; j < d.ambient_dim; ++j) s += v[i] * d.gram(i, j) * w[j];
  return s;
}

// canonical pairing <alpha, x>, alpha a functional and x a point
inline Rat pairing(const Vec<Rat>& alpha, const Vec<Rat>& x) {
  return dot(alpha, x);
}

namespace detail {

inline Vec<Rat> basis_vec(int dim, int i, Rat c = Rat(1)) {
  Vec<Rat> v = zero_vec<Rat>(dim);
  v[i] = c;
  return v;
}

inline std::vector<Vec<Rat>> simple_roots_for(Family family, int rank, int& ambient) {
  std::vector<Vec<Rat>> roots;
  switch (family) {
    case Family::A: {
      // sum-zero model: coordinates (x_0..x_{n-1}), alpha_i = x_{n-i} - x_{n-i-1}
      if (rank < 1) throw std::invalid_argument("family A requires rank >= 1");
      int n = rank + 1;
      ambient = n;
      for (int i = 1; i <= rank; ++i) {
        Vec<Rat> a = zero_vec<Rat>(n);
        a[n - i] = Rat(1);
        a[n - i - 1] = Rat(-1);
        roots.push_back(a);
      }
      break;
    }
    case Family::B: {
      if (rank < 2) throw std::invalid_argument("family B requires rank >= 2");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Vec<Rat> a = zero_vec<Rat>(rank);
        a[i] = Rat(1);
        a[i + 1] = Rat(-1);
        roots.push_back(a);
      }
      roots.push_back(basis_vec(rank, rank - 1));
      break;
    }
    case Family::C: {
      // coordinates (x_1..x_{n-1}), alpha_i = e_i - e_{i+1}, alpha_{n-1} = 2e_{n-1}
      if (rank < 2) throw std::invalid_argument("family C requires rank >= 2");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Vec<Rat> a = zero_vec<Rat>(rank);
        a[i] = Rat(1);
        a[i + 1] = Rat(-1);
        roots.push_back(a);
      }
      roots.push_back(basis_vec(rank, rank - 1, Rat(2)));
      break;
    }
    case Family::D: {
      if (rank < 3) throw std::invalid_argument("family D requires rank >= 3");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        Vec<Rat> a = zero_vec<Rat>(rank);
        a[i] = Rat(1);
        a[i + 1] = Rat(-1);
        roots.push_back(a);
      }
      Vec<Rat> a = zero_vec<Rat>(rank);
      a[rank - 2] = Rat(1);
      a[rank - 1] = Rat(1);
      roots.push_back(a);
      break;
    }
    case Family::E: {
      if (rank < 6 || rank > 8) throw std::invalid_argument("family E requires rank in {6,7,8}");
      ambient = 8;
      // Bourbaki: alpha_1 = (e_1 - e_2 - ... - e_7 + e_8)/2, alpha_2 = e_1 + e_2,
      // alpha_k = e_{k-1} - e_{k-2} for k = 3..8; E6/E7 take the first 6/7.
      Vec<Rat> a1 = zero_vec<Rat>(8);
      a1[0] = Rat(1, 2);
      for (int j = 1; j <= 6; ++j) a1[j] = Rat(-1, 2);
      a1[7] = Rat(1, 2);
      roots.push_back(a1);
      Vec<Rat> a2 = zero_vec<Rat>(8);
      a2[0] = Rat(1);
      a2[1] = Rat(1);
      roots.push_back(a2);
      for (int k = 3; k <= rank; ++k) {
        Vec<Rat> a = zero_vec<Rat>(8);
        a[k - 2] = Rat(1);
        a[k - 3] = Rat(-1);
        roots.push_back(a);
      }
      break;
    }
    case Family::F: {
      if (rank != 4) throw std::invalid_argument("family F requires rank 4");
      ambient = 4;
      Vec<Rat> a1 = zero_vec<Rat>(4), a2 = zero_vec<Rat>(4), a4 = zero_vec<Rat>(4);
      a1[1] = Rat(1);
      a1[2] = Rat(-1);
      a2[2] = Rat(1);
      a2[3] = Rat(-1);
      a4[0] = Rat(1, 2);
      a4[1] = Rat(-1, 2);
      a4[2] = Rat(-1, 2);
      a4[3] = Rat(-1, 2);
      roots.push_back(a1);
      roots.push_back(a2);
      roots.push_back(basis_vec(4, 3));
      roots.push_back(a4);
      break;
    }
    case Family::G: {
      if (rank != 2) throw std::invalid_argument("family G requires rank 2");
      ambient = 3;
      Vec<Rat> a1 = zero_vec<Rat>(3), a2 = zero_vec<Rat>(3);
      a1[0] = Rat(1);
      a1[1] = Rat(-1);
      a2[0] = Rat(-2);
      a2[1] = Rat(1);
      a2[2] = Rat(1);
      roots.push_back(a1);
      roots.push_back(a2);
      break;
    }
  }
  return roots;
}

}  // namespace detail

// Coefficients of v in the simple-root basis; throws if v is outside the span.
inline Vec<Rat> simple_root_coefficients(const RootDatum& d, const Vec<Rat>& v) {
  Mat<Rat> s(d.ambient_dim, d.rank);
  for (int j = 0; j < d.rank; ++j)
    for (int i = 0; i < d.ambient_dim; ++i) s(i, j) = d.simple_roots[j][i];
  auto sol = solve_affine(s, v);
  if (!sol) throw std::domain_error("vector outside the root span");
  return sol->base;
}

inline DatumPtr build_root_datum(Family family, int rank, bool affine) {
  auto d = std::make_shared<RootDatum>();
  d->family = family;
  d->rank = rank;
  d->affine = affine;
  d->simple_roots = detail::simple_roots_for(family, rank, d->ambient_dim);
  const int dim = d->ambient_dim;

  d->gram = Mat<Rat>::identity(dim);

  auto coroot_of = [&](const Vec<Rat>& a) {
    Rat nrm = inner(*d, a, a);
    return (Rat(2) / nrm) * a;
  };
  for (const auto& a : d->simple_roots) d->simple_coroots.push_back(coroot_of(a));

  // close the simple roots under all simple reflections; the matrices
  // preserve the dot product, so they act the same way on functionals
  std::vector<Mat<Rat>> refl;
  for (int i = 0; i < rank; ++i) {
    Mat<Rat> m = Mat<Rat>::identity(dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c)
        m(r, c) -= d->simple_coroots[i][r] * d->simple_roots[i][c];
    refl.push_back(m);
  }
  std::set<std::vector<std::pair<long long, long long>>> seen;
  auto key_of = [](const Vec<Rat>& v) {
    std::vector<std::pair<long long, long long>> k;
    k.reserve(v.size());
    for (const auto& x : v) k.emplace_back(x.num(), x.den());
    return k;
  };
  std::vector<Vec<Rat>> all = d->simple_roots;
  for (const auto& a : all) seen.insert(key_of(a));
  for (size_t head = 0; head < all.size(); ++head) {
    Vec<Rat> cur = all[head];
    for (const auto& m : refl) {
      Vec<Rat> img = m * cur;
      if (seen.insert(key_of(img)).second) all.push_back(img);
    }
    if (all.size() > 100000) throw std::runtime_error("root closure failed to terminate");
  }

  Rat best_height(-1);
  d->two_rho = zero_vec<Rat>(dim);
  for (const auto& r : all) {
    Vec<Rat> coeff = simple_root_coefficients(*d, r);
    bool pos = true, neg = true;
    Rat height(0);
    for (const auto& c : coeff) {
      if (c < Rat(0)) pos = false;
      if (c > Rat(0)) neg = false;
      height += c;
    }
    if (!pos && !neg) throw std::runtime_error("root with mixed signs; closure bug");
    if (pos) {
      d->positive_roots.push_back(r);
      d->positive_coroots.push_back(coroot_of(r));
      d->two_rho = d->two_rho + r;
      if (height > best_height) {
        best_height = height;
        d->highest_root = r;
      }
    }
  }
  d->highest_coroot = coroot_of(d->highest_root);

  // cartan[i][j] = <alpha_j, alpha_i^vee>, required integral
  d->cartan.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rat c = pairing(d->simple_roots[j], d->simple_coroots[i]);
      if (!c.is_integer()) throw std::runtime_error("non-integral Cartan entry");
      d->cartan[i][j] = c.num();
      if (i == j && c != Rat(2)) throw std::runtime_error("Cartan diagonal != 2");
      if (i != j && c > Rat(0)) throw std::runtime_error("positive off-diagonal Cartan entry");
    }

  // fundamental coweights: omega_i in span(coroots) with <alpha_j, omega_i> = delta_ij
  {
    Mat<Rat> m(rank, rank);
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k)
        m(j, k) = pairing(d->simple_roots[j], d->simple_coroots[k]);
    for (int i = 0; i < rank; ++i) {
      Vec<Rat> e = zero_vec<Rat>(rank);
      e[i] = Rat(1);
      auto sol = solve_affine(m, e);
      if (!sol || !sol->nullspace.empty())
        throw std::runtime_error("coweight system not uniquely solvable");
      Vec<Rat> w = zero_vec<Rat>(dim);
      for (int k = 0; k < rank; ++k) w = w + sol->base[k] * d->simple_coroots[k];
      d->fundamental_coweights.push_back(w);
    }
  }

  // generic alcove point p = sum c_i omega_i with sum m_i c_i < 1:
  // every positive-root pairing lands strictly inside (0,1)
  {
    Vec<Rat> hc = simple_root_coefficients(*d, d->highest_root);
    long long big = 1;
    for (const auto& c : hc) {
      if (!c.is_integer()) throw std::runtime_error("highest root not integral");
      big += c.num();
    }
    d->alcove_point = zero_vec<Rat>(dim);
    for (int i = 0; i < rank; ++i)
      d->alcove_point = d->alcove_point + Rat(1, big + i) * d->fundamental_coweights[i];
    for (const auto& r : d->positive_roots) {
      Rat v = pairing(r, d->alcove_point);
      if (!(Rat(0) < v) || !(v < Rat(1)))
        throw std::runtime_error("alcove point not generic");
    }
  }

  // sanity on the invariant form: fixed by every simple reflection
  for (const auto& m : refl) {
    Mat<Rat> g2 = m.transpose() * d->gram * m;
    if (!(g2 == d->gram)) throw std::runtime_error("gram not W-invariant");
  }

  return d;
}

inline DatumPtr build_root_datum(const std::string& family, int rank, bool affine) {
  return build_root_datum(parse_family(family), rank, affine);
}

// Repeatedly reflect at the smallest simple root with negative pairing.
inline Vec<Rat> dominant_representative(const RootDatum& d, Vec<Rat> v) {
  if ((int)v.size() != d.ambient_dim)
    throw std::invalid_argument("dominant_representative: dimension mismatch");
  for (;;) {
    bool moved = false;
    for (int i = 0; i < d.rank; ++i) {
      Rat p = pairing(d.simple_roots[i], v);
      if (p < Rat(0)) {
        v = v - p * d.simple_coroots[i];
        moved = true;
        break;
      }
    }
    if (!moved) return v;
  }
}

}  // namespace affweyl
