#pragma once

#include "affweyl/errors.hpp"
#include "affweyl/rootdata.hpp"

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace affweyl {

// Affine isometry x |-> Mx + t with M in the finite Weyl group and t in
// the coroot lattice. Exact rational entries, always reduced, so
// structural equality is canonical.
struct AffineWeylElement {
  DatumPtr datum;
  Mat<Rat> linear;
  Vec<Rat> translation;

  Vec<Rat> apply(const Vec<Rat>& x) const { return linear * x + translation; }

  bool is_identity() const {
    return linear == Mat<Rat>::identity(linear.rows()) && is_zero_vec(translation);
  }

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.linear == b.linear && a.translation == b.translation;
  }
  friend bool operator!=(const AffineWeylElement& a, const AffineWeylElement& b) {
    return !(a == b);
  }
};

inline AffineWeylElement identity_element(DatumPtr d) {
  return {d, Mat<Rat>::identity(d->ambient_dim), zero_vec<Rat>(d->ambient_dim)};
}

// s_i for i >= 1; s_0 is the reflection in the wall <alpha~, x> = 1
// of an affine datum.
inline AffineWeylElement generator(DatumPtr d, int i) {
  if (i < 0 || i > d->rank)
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range for " + d->descriptor());
  if (i == 0 && !d->affine)
    throw std::invalid_argument("generator 0 requires an affine datum");
  const Vec<Rat>& alpha = (i == 0) ? d->highest_root : d->simple_roots[i - 1];
  const Vec<Rat>& corr = (i == 0) ? d->highest_coroot : d->simple_coroots[i - 1];
  Rat k = (i == 0) ? Rat(1) : Rat(0);
  int dim = d->ambient_dim;
  Mat<Rat> m = Mat<Rat>::identity(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) -= corr[r] * alpha[c];
  return {d, std::move(m), k * corr};
}

inline AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) {
  if (!a.datum->compatible(*b.datum))
    throw std::invalid_argument("compose: datum mismatch (" + a.datum->descriptor() +
                                " vs " + b.datum->descriptor() + ")");
  return {a.datum, a.linear * b.linear, a.linear * b.translation + a.translation};
}

inline AffineWeylElement invert(const AffineWeylElement& a) {
  Mat<Rat> minv = invert(a.linear);
  return {a.datum, minv, -Rat(1) * (minv * a.translation)};
}

inline AffineWeylElement power(const AffineWeylElement& a, int k) {
  AffineWeylElement r = identity_element(a.datum);
  AffineWeylElement base = k >= 0 ? a : invert(a);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = compose(r, base);
  return r;
}

struct GeneratorWord {
  std::vector<int> letters;
};

inline AffineWeylElement word_to_element(DatumPtr d, const std::vector<int>& word) {
  AffineWeylElement r = identity_element(d);
  for (int i : word) r = compose(r, generator(d, i));
  return r;
}

// Number of walls H_{alpha,k} separating the fundamental alcove from its
// image: per positive root, integers strictly between <alpha, p> and
// <alpha, w(p)> for the stored generic alcove point p. Equals the Coxeter
// word length on both the finite and the affine group.
inline long length(const AffineWeylElement& w) {
  const RootDatum& d = *w.datum;
  Vec<Rat> img = w.apply(d.alcove_point);
  long total = 0;
  for (const auto& alpha : d.positive_roots) {
    Rat a = pairing(alpha, d.alcove_point);
    Rat b = pairing(alpha, img);
    if (b.is_integer())
      throw std::logic_error("alcove point genericity violated; datum bug");
    long long fa = a.floor(), fb = b.floor();
    total += fa > fb ? fa - fb : fb - fa;
  }
  return total;
}

enum class Descent { Min, Max };

// Greedy reduced word: repeatedly strip the chosen left descent.
inline std::vector<int> reduced_word(const AffineWeylElement& w, Descent pick = Descent::Min) {
  std::vector<int> word;
  AffineWeylElement cur = w;
  long len = length(cur);
  int ngen = cur.datum->num_generators();
  int lo = cur.datum->affine ? 0 : 1;
  while (len > 0) {
    int found = -1;
    for (int k = 0; k < ngen; ++k) {
      int i = pick == Descent::Min ? lo + k : lo + ngen - 1 - k;
      AffineWeylElement next = compose(generator(cur.datum, i), cur);
      if (length(next) == len - 1) {
        found = i;
        cur = next;
        break;
      }
    }
    if (found < 0) throw std::logic_error("no descent found; length function bug");
    word.push_back(found);
    --len;
  }
  return word;
}

struct BallEntry {
  AffineWeylElement element;
  long length;
  std::vector<int> word;  // one reduced word, from the BFS path
};

namespace detail {

struct ElemKey {
  std::vector<long long> v;
  bool operator==(const ElemKey& o) const { return v == o.v; }
};

struct ElemKeyHash {
  size_t operator()(const ElemKey& k) const {
    uint64_t h = 1469598103934665603ull;
    for (long long x : k.v) {
      h ^= (uint64_t)x;
      h *= 1099511628211ull;
    }
    return (size_t)h;
  }
};

inline ElemKey elem_key(const AffineWeylElement& e) {
  ElemKey k;
  k.v.reserve(2 * e.linear.data().size() + 2 * e.translation.size());
  for (const auto& x : e.linear.data()) {
    k.v.push_back(x.num());
    k.v.push_back(x.den());
  }
  for (const auto& x : e.translation) {
    k.v.push_back(x.num());
    k.v.push_back(x.den());
  }
  return k;
}

// lexicographic over (linear row-major, translation)
inline bool elem_less(const AffineWeylElement& a, const AffineWeylElement& b) {
  for (size_t i = 0; i < a.linear.data().size(); ++i) {
    const Rat &x = a.linear.data()[i], &y = b.linear.data()[i];
    if (x != y) return x < y;
  }
  for (size_t i = 0; i < a.translation.size(); ++i) {
    const Rat &x = a.translation[i], &y = b.translation[i];
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace detail

inline constexpr size_t kDefaultBallCapacity = 4000000;

// All elements of the standard parabolic subgroup generated by {s_i : i in gens}
// with length <= max_len, breadth-first by length, each shell sorted.
// Throws CapacityError instead of ever truncating.
inline std::vector<BallEntry> ball(DatumPtr d, const std::vector<int>& gens,
                                   long max_len,
                                   size_t capacity = kDefaultBallCapacity) {
  for (int i : gens)
    if (i < 0 || i > d->rank || (i == 0 && !d->affine))
      throw std::invalid_argument("ball: invalid generator index " + std::to_string(i));
  if (max_len < 0) throw std::invalid_argument("ball: negative length cap");

  std::vector<AffineWeylElement> gen_elems;
  for (int i : gens) gen_elems.push_back(generator(d, i));

  std::vector<BallEntry> out;
  std::unordered_set<detail::ElemKey, detail::ElemKeyHash> seen;

  AffineWeylElement e = identity_element(d);
  seen.insert(detail::elem_key(e));
  out.push_back({e, 0, {}});

  size_t shell_begin = 0;
  for (long len = 0; len < max_len; ++len) {
    size_t shell_end = out.size();
    if (shell_begin == shell_end) break;  // finite group exhausted
    std::vector<BallEntry> next;
    for (size_t idx = shell_begin; idx < shell_end; ++idx) {
      for (size_t g = 0; g < gen_elems.size(); ++g) {
        AffineWeylElement cand = compose(out[idx].element, gen_elems[g]);
        if (length(cand) != len + 1) continue;
        auto key = detail::elem_key(cand);
        if (!seen.insert(std::move(key)).second) continue;
        if (seen.size() > capacity)
          throw CapacityError("ball: capacity " + std::to_string(capacity) +
                              " exceeded at length " + std::to_string(len + 1));
        std::vector<int> word = out[idx].word;
        word.push_back(gens[g]);
        next.push_back({std::move(cand), len + 1, std::move(word)});
      }
    }
    std::sort(next.begin(), next.end(), [](const BallEntry& a, const BallEntry& b) {
      return detail::elem_less(a.element, b.element);
    });
    shell_begin = shell_end;
    for (auto& entry : next) out.push_back(std::move(entry));
  }
  return out;
}

inline std::vector<int> all_generators(const RootDatum& d) {
  std::vector<int> g;
  for (int i = d.affine ? 0 : 1; i <= d.rank; ++i) g.push_back(i);
  return g;
}

}  // namespace affweyl
