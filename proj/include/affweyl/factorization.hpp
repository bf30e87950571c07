#pragma once

#include "affweyl/element.hpp"
#include "affweyl/errors.hpp"
#include "affweyl/indexcalc.hpp"
#include "affweyl/series.hpp"
#include "affweyl/tube.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace affweyl {

// T_i with its word pinned to the explicit coordinate action.
struct MonoidFactor {
  std::string label;
  AffineWeylElement generator;
  std::vector<int> word;  // reduced
  long step_length = 0;
  int direction = 0;  // coweight index the drift is parallel to
};

struct FactorSet {
  std::string label;
  std::vector<BallEntry> elements;  // with lengths and reduced words
};

namespace detail {

inline DatumPtr factorization_datum(Family family, int n) {
  if (family == Family::A) {
    if (n < 2) throw std::invalid_argument("family A factorization needs n >= 2");
  } else if (family == Family::C) {
    if (n < 3) throw std::invalid_argument("family C factorization needs n >= 3");
  } else {
    throw std::invalid_argument("factorizations exist for families A and C only");
  }
  return build_root_datum(family, n - 1, true);
}

// coordinate action of T_i straight off the explicit formulas
inline AffineWeylElement t_formula(DatumPtr d, Family family, int n, int i) {
  AffineWeylElement e = identity_element(d);
  Mat<Rat> p(d->ambient_dim, d->ambient_dim);
  Vec<Rat> t = zero_vec<Rat>(d->ambient_dim);
  if (family == Family::A) {
    // (x_{n-i-1}-1, x_0..x_{n-i-2}, x_{n-i+1}..x_{n-1}, x_{n-i}+1)
    p(0, n - i - 1) = Rat(1);
    t[0] = Rat(-1);
    for (int j = 1; j <= n - i - 1; ++j) p(j, j - 1) = Rat(1);
    for (int j = n - i; j <= n - 2; ++j) p(j, j + 1) = Rat(1);
    p(n - 1, n - i) = Rat(1);
    t[n - 1] = Rat(1);
  } else {
    // (x_i+1, x_1..x_{i-1}, x_{i+1}..x_{n-1}); coordinates are 1-based in the model
    p(0, i - 1) = Rat(1);
    t[0] = Rat(1);
    for (int j = 1; j <= i - 1; ++j) p(j, j - 1) = Rat(1);
    for (int j = i; j <= n - 2; ++j) p(j, j) = Rat(1);
  }
  e.linear = p;
  e.translation = t;
  return e;
}

inline std::vector<int> t_word(Family family, int n, int i) {
  std::vector<int> w;
  if (family == Family::A) {
    // s_0 (s_{n-1} ... s_{i+1}) (s_1 ... s_{i-1}) s_i
    w.push_back(0);
    for (int j = n - 1; j >= i + 1; --j) w.push_back(j);
    for (int j = 1; j <= i - 1; ++j) w.push_back(j);
    w.push_back(i);
  } else {
    // T_{n-1} = s_0 s_1 ... s_{n-1}; T_{i-1} = T_i s_{i-1}
    for (int j = 0; j <= n - 1; ++j) w.push_back(j);
    for (int j = n - 2; j >= i; --j) w.push_back(j);
  }
  return w;
}

}  // namespace detail

inline MonoidFactor build_T(Family family, int n, int i) {
  auto d = detail::factorization_datum(family, n);
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("build_T: i must be in 1..n-1");
  MonoidFactor m;
  m.label = "T" + std::to_string(i);
  m.word = detail::t_word(family, n, i);
  m.generator = word_to_element(d, m.word);
  AffineWeylElement formula = detail::t_formula(d, family, n, i);
  if (!(m.generator == formula))
    throw VerificationError("build_T: word and coordinate formula disagree for " +
                            m.label + " in " + d->descriptor());
  m.step_length = length(m.generator);
  long expect = family == Family::A ? n : 2 * n - i - 1;
  if (m.step_length != expect || (long)m.word.size() != m.step_length)
    throw VerificationError("build_T: " + m.label + " has length " +
                            std::to_string(m.step_length) + ", expected " +
                            std::to_string(expect));
  m.direction = i;
  return m;
}

namespace detail {

inline void check_length_multiset(const FactorSet& fs, const std::vector<long>& expect) {
  std::vector<long> got;
  for (const auto& e : fs.elements) got.push_back(e.length);
  std::vector<long> want = expect;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want)
    throw VerificationError("factor set " + fs.label + " has the wrong length multiset");
}

}  // namespace detail

// Family A: the n sets Xhat_1..Xhat_n of n elements each, from the explicit
// words (ascending prefix chain into u_0 = s_0 s_1...s_{i-1}, then
// u_0 s_{n-1} s_{n-2} ...). Family C: X_1 = minimal coset representatives
// inside W_{v_{n-1}}, X_n = W_{v_0}.
inline std::vector<FactorSet> build_factor_sets(Family family, int n,
                                                size_t capacity = kDefaultBallCapacity) {
  auto d = detail::factorization_datum(family, n);
  std::vector<FactorSet> sets;
  if (family == Family::A) {
    for (int i = 1; i <= n; ++i) {
      FactorSet fs;
      fs.label = "Xhat" + std::to_string(i);
      // ascending chain u_{-i+k} = s_{i-k}...s_{i-1}, which for i = n stops
      // one short of wrapping
      for (int k = 0; k <= i && k <= n - 1; ++k) {
        std::vector<int> word;
        for (int j = i - k; j <= i - 1; ++j) word.push_back(j);
        fs.elements.push_back({word_to_element(d, word), (long)word.size(), word});
      }
      std::vector<int> u0;
      for (int j = 0; j <= i - 1; ++j) u0.push_back(j);
      for (int j = 0; j <= n - i - 2; ++j) {
        std::vector<int> word = u0;
        for (int t = n - 1; t >= n - j - 1; --t) word.push_back(t);
        fs.elements.push_back({word_to_element(d, word), (long)word.size(), word});
      }
      if ((int)fs.elements.size() != n)
        throw VerificationError("factor set " + fs.label + " has " +
                                std::to_string(fs.elements.size()) + " elements, expected " +
                                std::to_string(n));
      for (auto& e : fs.elements)
        if (length(e.element) != e.length)
          throw VerificationError("factor set " + fs.label + " word not reduced");
      std::vector<long> expect;
      for (long k = 0; k < n; ++k) expect.push_back(k);
      detail::check_length_multiset(fs, expect);
      sets.push_back(std::move(fs));
    }
  } else {
    long full = (long)(n - 1) * (n - 1);  // longest element of C_{n-1}
    std::vector<int> v0_gens, vlast_gens, both_gens;
    for (int j = 1; j <= n - 1; ++j) v0_gens.push_back(j);
    for (int j = 0; j <= n - 2; ++j) vlast_gens.push_back(j);
    for (int j = 1; j <= n - 2; ++j) both_gens.push_back(j);

    FactorSet x1;
    x1.label = "X1";
    for (auto& e : ball(d, vlast_gens, full, capacity)) {
      bool minimal = true;
      for (int i = 1; i <= n - 1 && minimal; ++i)
        if (length(compose(generator(d, i), e.element)) != e.length + 1) minimal = false;
      if (minimal) x1.elements.push_back(e);
    }

    FactorSet xn;
    xn.label = "Xn";
    for (auto& e : ball(d, v0_gens, full, capacity)) xn.elements.push_back(e);

    // Poincare checks: X_1(u) W_{A_{n-2}}(u) = W_{C_{n-1}}(u), X_n = W_{v_0}
    long cap = 2 * full;
    auto x1_series = poincare_series<BigRat>(x1.elements, cap);
    auto sub = poincare_series<BigRat>(ball(d, both_gens, full, capacity), cap);
    auto whole = poincare_series<BigRat>(ball(d, vlast_gens, full, capacity), cap);
    if (!(x1_series * sub == whole))
      throw VerificationError("X1 Poincare polynomial fails the coset quotient identity");
    TruncSeries<BigRat> cpoly = TruncSeries<BigRat>::one(cap);
    auto inv1 = series_inverse(TruncSeries<BigRat>::one_minus_power(cap, 1));
    for (int i = 1; i <= n - 1; ++i)
      cpoly = cpoly * TruncSeries<BigRat>::one_minus_power(cap, 2 * i) * inv1;
    if (!(poincare_series<BigRat>(xn.elements, cap) == cpoly))
      throw VerificationError("Xn Poincare polynomial is not prod (1-u^{2i})/(1-u)");

    sets.push_back(std::move(x1));
    sets.push_back(std::move(xn));
  }
  return sets;
}

// One slot of the ordered product: a factor set or a straight monoid.
struct FactorSlot {
  bool is_monoid;
  size_t index;  // into sets or monoids
};

struct FactorizationScheme {
  Family family;
  int n;
  DatumPtr datum;
  std::vector<FactorSet> sets;
  std::vector<MonoidFactor> monoids;  // monoids[i] = T_{i+1}
  std::vector<FactorSlot> slots;      // product order, left to right
};

inline FactorizationScheme build_factorization(Family family, int n,
                                               size_t capacity = kDefaultBallCapacity) {
  FactorizationScheme s;
  s.family = family;
  s.n = n;
  s.datum = detail::factorization_datum(family, n);
  s.sets = build_factor_sets(family, n, capacity);
  for (int i = 1; i <= n - 1; ++i) s.monoids.push_back(build_T(family, n, i));
  if (family == Family::A) {
    // Xhat_n T_{n-1} Xhat_{n-1} ... Xhat_2 T_1 Xhat_1
    for (int i = n; i >= 1; --i) {
      s.slots.push_back({false, (size_t)(i - 1)});
      if (i >= 2) s.slots.push_back({true, (size_t)(i - 2)});
    }
  } else {
    // Xn T_1 T_2 ... T_{n-1} X1; sets = {X1, Xn}. Ascending monoid order is
    // the one that makes the tuple map injective (T_{i+1} T_i = s_i T_{i+1}^2,
    // so the descending arrangement collides).
    s.slots.push_back({false, 1});
    for (int i = 1; i <= n - 1; ++i) s.slots.push_back({true, (size_t)(i - 1)});
    s.slots.push_back({false, 0});
  }
  return s;
}

struct FactorizationReport {
  Family family;
  int n;
  long max_len = 0;
  bool additive_ok = true;
  bool injective_ok = true;
  bool surjective_ok = true;
  bool series_ok = true;
  long tuple_count = 0;
  long ball_count = 0;
  std::string counterexample;  // first failure, human-readable

  bool pass() const { return additive_ok && injective_ok && surjective_ok && series_ok; }
};

// Enumerate every tuple with length budget N, multiply out, and compare
// against the honest ball. Also recompute the Poincare-series identity.
inline FactorizationReport verify_factorization(Family family, int n, long max_len,
                                                size_t capacity = kDefaultBallCapacity) {
  FactorizationScheme s = build_factorization(family, n, capacity);
  FactorizationReport rep;
  rep.family = family;
  rep.n = n;
  rep.max_len = max_len;

  struct Choice {
    size_t slot;
    long pick;  // element index or monoid exponent
  };
  std::vector<Choice> current;
  std::unordered_map<detail::ElemKey, std::vector<Choice>, detail::ElemKeyHash> seen;

  auto describe = [&](const std::vector<Choice>& tuple) {
    std::string out;
    for (const auto& ch : tuple) {
      const FactorSlot& slot = s.slots[ch.slot];
      if (!out.empty()) out += " * ";
      if (slot.is_monoid)
        out += s.monoids[slot.index].label + "^" + std::to_string(ch.pick);
      else
        out += s.sets[slot.index].label + "[" + std::to_string(ch.pick) + "]";
    }
    return out;
  };

  // DFS over slots left to right, composing as we descend
  auto rec = [&](auto&& self, size_t slot_idx, const AffineWeylElement& prefix,
                 long used) -> void {
    if (slot_idx == s.slots.size()) {
      ++rep.tuple_count;
      long actual = length(prefix);
      if (actual != used && rep.additive_ok) {
        rep.additive_ok = false;
        rep.counterexample = "length not additive: " + describe(current) + " has length " +
                             std::to_string(actual) + ", factors sum to " +
                             std::to_string(used);
      }
      auto key = detail::elem_key(prefix);
      auto [it, fresh] = seen.emplace(std::move(key), current);
      if (!fresh && rep.injective_ok) {
        rep.injective_ok = false;
        rep.counterexample = "tuples collide: " + describe(it->second) + " and " +
                             describe(current);
      }
      return;
    }
    const FactorSlot& slot = s.slots[slot_idx];
    if (slot.is_monoid) {
      const MonoidFactor& m = s.monoids[slot.index];
      AffineWeylElement acc = prefix;
      for (long k = 0; used + k * m.step_length <= max_len; ++k) {
        current.push_back({slot_idx, k});
        self(self, slot_idx + 1, acc, used + k * m.step_length);
        current.pop_back();
        acc = compose(acc, m.generator);
      }
    } else {
      const FactorSet& fs = s.sets[slot.index];
      for (size_t e = 0; e < fs.elements.size(); ++e) {
        if (used + fs.elements[e].length > max_len) continue;
        current.push_back({slot_idx, (long)e});
        self(self, slot_idx + 1, compose(prefix, fs.elements[e].element),
             used + fs.elements[e].length);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, identity_element(s.datum), 0);

  auto whole = ball(s.datum, all_generators(*s.datum), max_len, capacity);
  rep.ball_count = (long)whole.size();
  if (rep.injective_ok && rep.additive_ok) {
    if ((long)seen.size() != rep.ball_count) {
      rep.surjective_ok = false;
      for (const auto& e : whole) {
        if (!seen.count(detail::elem_key(e.element))) {
          std::string word;
          for (int g : e.word) word += std::to_string(g);
          rep.counterexample = "ball element of length " + std::to_string(e.length) +
                               " not hit (word " + word + ")";
          break;
        }
      }
    } else {
      // containment is automatic (products of tuples within budget land in
      // the ball once additivity holds), so equal counts mean equal sets
      rep.surjective_ok = true;
    }
  } else {
    rep.surjective_ok = false;
  }

  TruncSeries<BigRat> lhs = TruncSeries<BigRat>::one(max_len);
  for (const auto& slot : s.slots) {
    if (slot.is_monoid)
      lhs = lhs * series_inverse(TruncSeries<BigRat>::one_minus_power(
                max_len, s.monoids[slot.index].step_length));
    else
      lhs = lhs * poincare_series<BigRat>(s.sets[slot.index].elements, max_len);
  }
  rep.series_ok = (lhs == poincare_series<BigRat>(whole, max_len));
  if (!rep.series_ok && rep.counterexample.empty())
    rep.counterexample = "factor series product differs from the group series";
  return rep;
}

// Sum of the factor sets' index vectors per the closed assignments,
// checked against the signed parabolic sum.
inline IndexVector factor_index(Family family, int n) {
  auto d = detail::factorization_datum(family, n);
  IndexVector sum;
  if (family == Family::A) {
    // Xhat_i contributes iota(S - {s_i}) - iota(S - {s_i, s_{i-1}}), indices mod n
    for (int i = 1; i <= n; ++i) {
      int a = i % n, b = (i - 1) % n;
      std::vector<int> big, small;
      for (int g = 0; g < n; ++g) {
        if (g != a) big.push_back(g);
        if (g != a && g != b) small.push_back(g);
      }
      sum += iota_parabolic(d, big);
      sum -= iota_parabolic(d, small);
    }
  } else {
    std::vector<int> v0, vlast, both;
    for (int j = 1; j <= n - 1; ++j) v0.push_back(j);
    for (int j = 0; j <= n - 2; ++j) vlast.push_back(j);
    for (int j = 1; j <= n - 2; ++j) both.push_back(j);
    sum += iota_parabolic(d, v0);
    sum += iota_parabolic(d, vlast);
    sum -= iota_parabolic(d, both);
  }
  if (!(sum == alternating_index(d)))
    throw VerificationError("factor_index != alternating_index for " + d->descriptor());
  return sum;
}

enum class Region { S, TS, F, D0 };

inline Region parse_region(const std::string& s) {
  if (s == "S") return Region::S;
  if (s == "TS" || s == "T(S)") return Region::TS;
  if (s == "F") return Region::F;
  if (s == "D0") return Region::D0;
  throw std::invalid_argument("unknown region label '" + s + "' (S, TS, F, D0)");
}

namespace detail {

inline bool a_region_s(int n, int i, const Vec<Rat>& x) {
  // x_0 <= ... <= x_{n-i-1} <= min{x_{n-i}, ..., x_{n-1}, x_0 + 1}
  for (int j = 0; j + 1 <= n - i - 1; ++j)
    if (!(x[j] <= x[j + 1])) return false;
  const Rat& last = x[n - i - 1];
  for (int j = n - i; j <= n - 1; ++j)
    if (!(last <= x[j])) return false;
  return last <= x[0] + Rat(1);
}

// C-family regions, following the product Xn T_1 ... T_{n-1} X1 from the
// outside in: S_0 = X_1(D_0) = {1 >= x_1 >= ... >= x_{n-1} >= 0}, and stage
// i absorbs the monoid T_{n-i}:  S_i = union_N T_{n-i}^N(S_{i-1}).
// Membership walks x back through the monoid inverse while it stays in the
// nonnegative orthant (every stage lives there).
struct CRegions {
  int n;
  std::vector<AffineWeylElement> t_inv;  // t_inv[i-1] = T_i^{-1}

  explicit CRegions(int n_) : n(n_) {
    for (int i = 1; i <= n - 1; ++i)
      t_inv.push_back(invert(build_T(Family::C, n, i).generator));
  }

  // the monoid absorbed by stage i
  int stage_monoid(int i) const { return n - i; }

  bool in_s0(const Vec<Rat>& x) const {
    if (!(x[0] <= Rat(1))) return false;
    for (int j = 0; j + 1 <= n - 2; ++j)
      if (!(x[j] >= x[j + 1])) return false;
    return x[n - 2] >= Rat(0);
  }

  bool in_s(int i, Vec<Rat> x) const {
    if (i == 0) return in_s0(x);
    const AffineWeylElement& back = t_inv[stage_monoid(i) - 1];
    for (;;) {
      bool nonneg = true;
      for (const auto& c : x)
        if (c < Rat(0)) nonneg = false;
      if (!nonneg) return false;
      if (in_s(i - 1, x)) return true;
      x = back.apply(x);
    }
  }

  // the monoid image inside stage i, so S_{i-1} = S_i \ monoid_image(i)
  bool in_ts(int i, const Vec<Rat>& x) const {
    return in_s(i, t_inv[stage_monoid(i) - 1].apply(x));
  }
};

}  // namespace detail

inline bool region_membership(Family family, int n, Region region, int i,
                              const Vec<Rat>& point) {
  auto d = detail::factorization_datum(family, n);
  if ((int)point.size() != d->ambient_dim)
    throw std::invalid_argument("region_membership: point has the wrong dimension");
  if (region != Region::D0) {
    int lo = region == Region::TS ? 1 : 0;
    if (i < lo || i > n - 1)
      throw std::invalid_argument("region index i must be in " + std::to_string(lo) +
                                  "..n-1");
  }
  if (family == Family::A) {
    Rat sum(0);
    for (const auto& c : point) sum += c;
    if (!(sum == Rat(0)))
      throw std::invalid_argument("region_membership: point is off the sum-zero plane");
    auto in_ts = [&](int k, const Vec<Rat>& x) {
      AffineWeylElement tinv = invert(build_T(Family::A, n, k).generator);
      return detail::a_region_s(n, k, tinv.apply(x));
    };
    switch (region) {
      case Region::S: return detail::a_region_s(n, i, point);
      case Region::TS: return in_ts(i, point);
      case Region::F:
        if (i == 0) return detail::a_region_s(n, 0, point);
        return detail::a_region_s(n, i, point) && !in_ts(i, point);
      case Region::D0: return detail::a_region_s(n, 0, point);
    }
    return false;
  }
  detail::CRegions reg(n);
  switch (region) {
    case Region::S: return reg.in_s(i, point);
    case Region::TS: return reg.in_ts(i, point);
    case Region::F:
      if (i == 0) return reg.in_s0(point);
      return reg.in_s(i, point) && !reg.in_ts(i, point);
    case Region::D0:
      for (int j = 0; j + 1 <= n - 2; ++j)
        if (!(point[j] >= point[j + 1])) return false;
      return point[0] <= Rat(1, 2) && point[n - 2] >= Rat(0);
  }
  return false;
}

}  // namespace affweyl
