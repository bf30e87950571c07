#pragma once

#include "affweyl/hecke.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

namespace affweyl::acceptance {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail_acc {

using Clock = std::chrono::steady_clock;

inline double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

inline TruncSeries<BigRat> inv_one_minus(long cap, long d) {
  return series_inverse(TruncSeries<BigRat>::one_minus_power(cap, d));
}

inline std::vector<int> random_word(std::mt19937_64& rng, int ngen, int len) {
  std::vector<int> w;
  for (int k = 0; k < len; ++k) w.push_back((int)(rng() % ngen));
  return w;
}

}  // namespace detail_acc

// 1. Eq. (1) for A~_{n-1}, n = 2..5: prod_{i<n} 1/(1-u^n), cap 24, < 60 s/case.
inline CriterionResult criterion_eq1_A() {
  CriterionResult r{1, "eq1-family-A", true, ""};
  const long cap = 24;
  double worst = 0;
  for (int n = 2; n <= 5; ++n) {
    auto t0 = detail_acc::Clock::now();
    auto d = build_root_datum(Family::A, n - 1, true);
    auto lhs = alternating_product(d, cap);
    auto rhs = TruncSeries<BigRat>::one(cap);
    for (int i = 1; i <= n - 1; ++i) rhs = rhs * detail_acc::inv_one_minus(cap, n);
    double dt = detail_acc::seconds_since(t0);
    worst = std::max(worst, dt);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.detail = "mismatch for A~" + std::to_string(n - 1) + " at degree " +
                 std::to_string(first_difference(lhs, rhs));
      return r;
    }
    if (dt >= 60.0) {
      r.pass = false;
      r.detail = "A~" + std::to_string(n - 1) + " took " + std::to_string(dt) + "s";
      return r;
    }
  }
  char buf[128];
  snprintf(buf, sizeof buf, "n = 2..5 exact to cap 24, slowest case %.1fs", worst);
  r.detail = buf;
  return r;
}

// 2. Eq. (1) for C~_{n-1}, n = 3..5: prod_i 1/(1-u^{2n-i-1}), cap 24.
inline CriterionResult criterion_eq1_C() {
  CriterionResult r{2, "eq1-family-C", true, ""};
  const long cap = 24;
  for (int n = 3; n <= 5; ++n) {
    auto d = build_root_datum(Family::C, n - 1, true);
    auto lhs = alternating_product(d, cap);
    auto rhs = TruncSeries<BigRat>::one(cap);
    for (int i = 1; i <= n - 1; ++i)
      rhs = rhs * detail_acc::inv_one_minus(cap, 2 * n - i - 1);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.detail = "mismatch for C~" + std::to_string(n - 1) + " at degree " +
                 std::to_string(first_difference(lhs, rhs));
      return r;
    }
  }
  r.detail = "n = 3..5 exact to cap 24";
  return r;
}

// 3. Degree-formula coherence on every affine family of rank <= 4.
inline CriterionResult criterion_degree_formula() {
  CriterionResult r{3, "tube-degree-formula", true, ""};
  const long cap = 24;
  std::vector<std::pair<Family, int>> cases = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4},
      {Family::B, 2}, {Family::B, 3}, {Family::B, 4},
      {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
      {Family::D, 3}, {Family::D, 4},
      {Family::G, 2}};
  for (auto [fam, rank] : cases) {
    auto d = build_root_datum(fam, rank, true);
    auto rhs = TruncSeries<BigRat>::one(cap);
    for (int i = 1; i <= rank; ++i) {
      long deg = tube_degree(*d, i);  // throws unless a positive integer
      rhs = rhs * detail_acc::inv_one_minus(cap, deg);
    }
    auto lhs = alternating_product(d, cap);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.detail = "mismatch for " + d->descriptor() + " at degree " +
                 std::to_string(first_difference(lhs, rhs));
      return r;
    }
  }
  r.detail = std::to_string(cases.size()) + " affine data exact to cap 24, all d_i integral";
  return r;
}

// 4. Geometric length = BFS graph distance through length 10.
inline CriterionResult criterion_length_oracle() {
  CriterionResult r{4, "length-oracle", true, ""};
  long total = 0;
  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::C, 2}, {Family::G, 2}}) {
    auto d = build_root_datum(fam, rank, true);
    std::unordered_map<detail::ElemKey, long, detail::ElemKeyHash> dist;
    std::vector<AffineWeylElement> frontier = {identity_element(d)};
    std::vector<AffineWeylElement> all = frontier;
    dist[detail::elem_key(frontier[0])] = 0;
    for (long lvl = 1; lvl <= 10; ++lvl) {
      std::vector<AffineWeylElement> next;
      for (const auto& e : frontier)
        for (int i = 0; i <= rank; ++i) {
          auto cand = compose(e, generator(d, i));
          if (dist.emplace(detail::elem_key(cand), lvl).second) {
            next.push_back(cand);
            all.push_back(cand);
          }
        }
      frontier = std::move(next);
    }
    for (const auto& e : all) {
      if (length(e) != dist.at(detail::elem_key(e))) {
        r.pass = false;
        r.detail = "discrepancy in " + d->descriptor();
        return r;
      }
    }
    total += (long)all.size();
  }
  r.detail = std::to_string(total) + " elements across A~2, C~2, G~2, zero discrepancies";
  return r;
}

// 5. Straightness, tube stabilization and c_{T_i} for all constructed T_i.
inline CriterionResult criterion_straightness() {
  CriterionResult r{5, "straight-generators", true, ""};
  int count = 0;
  for (auto fam : {Family::A, Family::C}) {
    for (int n = fam == Family::A ? 2 : 3; n <= 5; ++n) {
      auto d = build_root_datum(fam, n - 1, true);
      for (int i = 1; i <= n - 1; ++i) {
        auto t = build_T(fam, n, i);
        long expect = fam == Family::A ? n : 2 * n - i - 1;
        auto straight = is_straight(t.generator, 5);
        auto dr = drift(t.generator);
        const auto& w = d->fundamental_coweights[i - 1];
        Rat ratio = inner(*d, w, d->simple_coroots[i - 1]) / inner(*d, w, w);
        bool ok = straight.powers_ok && straight.formula_ok && t.step_length == expect &&
                  stabilizes_tube(t.generator, i) && dr.c.has_value() && *dr.c == ratio;
        if (!ok) {
          r.pass = false;
          r.detail = "T_" + std::to_string(i) + " fails in " + d->descriptor();
          return r;
        }
        ++count;
      }
    }
  }
  r.detail = std::to_string(count) + " generators: lengths, powers to k=5, tubes, c_T exact";
  return r;
}

// 6. Factorization bijection at the stated caps, < 5 min total.
inline CriterionResult criterion_factorization() {
  CriterionResult r{6, "factorization-bijection", true, ""};
  auto t0 = detail_acc::Clock::now();
  long total = 0;
  for (auto [fam, n, cap] : std::vector<std::tuple<Family, int, long>>{
           {Family::A, 3, 12}, {Family::A, 4, 12}, {Family::A, 5, 10},
           {Family::C, 3, 12}, {Family::C, 4, 12}}) {
    auto rep = verify_factorization(fam, n, cap);
    if (!rep.pass()) {
      r.pass = false;
      r.detail = std::string(fam == Family::A ? "A" : "C") + " n=" + std::to_string(n) +
                 ": " + rep.counterexample;
      return r;
    }
    total += rep.ball_count;
  }
  double dt = detail_acc::seconds_since(t0);
  if (dt >= 300.0) {
    r.pass = false;
    r.detail = "total runtime " + std::to_string(dt) + "s exceeds 5 min";
    return r;
  }
  char buf[160];
  snprintf(buf, sizeof buf,
           "5 cases, %ld elements matched bijectively, %.1fs total", total, dt);
  r.detail = buf;
  return r;
}

// 7. Index calculus: signed sum = closed form = factor assignment.
inline CriterionResult criterion_index() {
  CriterionResult r{7, "index-calculus", true, ""};
  int count = 0;
  for (auto fam : {Family::A, Family::C}) {
    for (int n = fam == Family::A ? 2 : 3; n <= 5; ++n) {
      auto d = build_root_datum(fam, n - 1, true);
      auto alt = alternating_index(d);     // asserts the closed form internally
      auto fac = factor_index(fam, n);     // asserts equality with alternating
      if (!(alt == fac)) {
        r.pass = false;
        r.detail = "vectors differ for " + d->descriptor();
        return r;
      }
      ++count;
    }
  }
  r.detail = std::to_string(count) + " data, integer vectors equal on the nose";
  return r;
}

// 8. Hecke determinant identity at cap 16.
inline CriterionResult criterion_det_identity() {
  CriterionResult r{8, "hecke-determinant-identity", true, ""};
  const long cap = 16;
  int runs = 0;
  std::vector<BigRat> qs = {BigRat(2), BigRat(3), BigRat(1, 2)};
  for (auto fam : {Family::A, Family::C}) {
    int n_hi = fam == Family::A ? 5 : 4;
    for (int n = 3; n <= n_hi; ++n) {
      auto d = build_root_datum(fam, n - 1, true);
      for (const auto& q : qs) {
        for (auto rep : {make_trivial_rep(d, q), make_sign_rep(d, q)}) {
          auto rb = verify_det_identity(fam, n, rep, cap);
          if (!rb.pass()) {
            r.pass = false;
            r.detail = rep.name + " q=" + rational_string(q) + " on " + d->descriptor() +
                       " differs at degree " +
                       std::to_string(rb.first_diff_alternating >= 0
                                          ? rb.first_diff_alternating
                                          : rb.first_diff_factored);
            return r;
          }
          ++runs;
        }
      }
    }
  }
  auto a1 = build_root_datum(Family::A, 1, true);
  for (auto q : {BigRat(2), BigRat(1, 2)}) {
    auto rb = verify_det_identity(Family::A, 2, make_a1_two_dim_rep(a1, q), cap);
    if (!rb.pass()) {
      r.pass = false;
      r.detail = "two-dim A~1 rep at q=" + rational_string(q) + " fails";
      return r;
    }
    ++runs;
  }
  r.detail = std::to_string(runs) + " (rep, q, group) runs, both arrangements exact to cap 16";
  return r;
}

// 9. Negative paths: braid violation, non-unit inverse, capacity overflow.
inline CriterionResult criterion_negative() {
  CriterionResult r{9, "negative-tests", true, ""};

  auto a2 = build_root_datum(Family::A, 2, true);
  auto path = std::filesystem::temp_directory_path() / "affweyl_braid_violating.json";
  {
    nlohmann::json doc;
    doc["family"] = "A";
    doc["rank"] = 2;
    doc["affine"] = true;
    doc["q"] = "2/1";
    doc["dim"] = 2;
    nlohmann::json gens = nlohmann::json::array();
    for (auto diag : std::vector<std::vector<std::string>>{
             {"2/1", "-1/1"}, {"2/1", "-1/1"}, {"-1/1", "2/1"}}) {
      nlohmann::json m = nlohmann::json::array();
      for (int i = 0; i < 2; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 2; ++j) row.push_back(i == j ? diag[i] : "0/1");
        m.push_back(row);
      }
      gens.push_back(m);
    }
    doc["generators"] = gens;
    std::ofstream(path) << doc.dump(2);
  }
  bool braid_named = false;
  try {
    load_rep_file(a2, path.string());
  } catch (const RepValidationError& e) {
    std::string msg = e.what();
    braid_named = msg.find("braid relation") != std::string::npos &&
                  msg.find("(0,2)") != std::string::npos;
  }
  std::filesystem::remove(path);
  if (!braid_named) {
    r.pass = false;
    r.detail = "braid-violating rep not rejected with the offending pair";
    return r;
  }

  bool inverse_rejected = false;
  try {
    TruncSeries<BigRat> s(6);
    s.c[1] = BigRat(1);
    series_inverse(s);
  } catch (const std::domain_error&) {
    inverse_rejected = true;
  }
  if (!inverse_rejected) {
    r.pass = false;
    r.detail = "series_inverse accepted a non-unit";
    return r;
  }

  bool capacity_reported = false;
  try {
    ball(a2, {0, 1, 2}, 12, 16);
  } catch (const CapacityError&) {
    capacity_reported = true;
  }
  if (!capacity_reported) {
    r.pass = false;
    r.detail = "ball capacity overflow was not reported";
    return r;
  }

  r.detail = "braid rejection names pair (0,2); non-unit inverse and capacity overflow throw";
  return r;
}

// 10. Property suites: word-order invariance, det multiplicativity,
//     length symmetry under inversion.
inline CriterionResult criterion_properties(uint64_t seed = 0) {
  CriterionResult r{10, "property-suites", true, ""};
  std::mt19937_64 rng(seed);

  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::C, 2}, {Family::G, 2}}) {
    auto d = build_root_datum(fam, rank, true);
    auto geo = make_geometric_rep(d);
    for (int trial = 0; trial < 200; ++trial) {
      auto w = word_to_element(d, detail_acc::random_word(rng, rank + 1, 8));
      auto lhs = evaluate_word(geo, reduced_word(w, Descent::Min));
      auto rhs = evaluate_word(geo, reduced_word(w, Descent::Max));
      if (!(lhs == rhs)) {
        r.pass = false;
        r.detail = "word-order invariance fails in " + d->descriptor();
        return r;
      }
    }
  }
  {
    auto a1 = build_root_datum(Family::A, 1, true);
    auto two = make_a1_two_dim_rep(a1, BigRat(1, 2));
    for (int trial = 0; trial < 200; ++trial) {
      auto w = word_to_element(a1, detail_acc::random_word(rng, 2, 8));
      if (!(evaluate_word(two, reduced_word(w, Descent::Min)) ==
            evaluate_word(two, reduced_word(w, Descent::Max)))) {
        r.pass = false;
        r.detail = "word-order invariance fails for the two-dim A~1 rep";
        return r;
      }
    }
  }

  for (int trial = 0; trial < 20; ++trial) {
    MatrixSeries<BigRat> a(3, 8), b(3, 8);
    for (long i = 0; i < 3; ++i)
      for (long j = 0; j < 3; ++j)
        for (long k = 0; k <= 8; ++k) {
          a.at(i, j).c[k] = BigRat((long long)(rng() % 9) - 4, 1 + (long long)(rng() % 3));
          b.at(i, j).c[k] = BigRat((long long)(rng() % 9) - 4, 1 + (long long)(rng() % 3));
        }
    if (!(matrix_series_det(a * b) == matrix_series_det(a) * matrix_series_det(b))) {
      r.pass = false;
      r.detail = "det multiplicativity fails on a random 3x3 matrix series";
      return r;
    }
  }

  for (auto [fam, rank] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::C, 2}, {Family::G, 2}}) {
    auto d = build_root_datum(fam, rank, true);
    for (int trial = 0; trial < 200; ++trial) {
      int len = (int)(rng() % 13);
      auto w = word_to_element(d, detail_acc::random_word(rng, rank + 1, len));
      if (length(w) != length(invert(w))) {
        r.pass = false;
        r.detail = "length(w) != length(w^-1) in " + d->descriptor();
        return r;
      }
    }
  }

  r.detail = "200 samples/datum for both invariances, 20 random det products, all exact";
  return r;
}

inline CriterionResult run_criterion(int index) {
  try {
    switch (index) {
      case 1: return criterion_eq1_A();
      case 2: return criterion_eq1_C();
      case 3: return criterion_degree_formula();
      case 4: return criterion_length_oracle();
      case 5: return criterion_straightness();
      case 6: return criterion_factorization();
      case 7: return criterion_index();
      case 8: return criterion_det_identity();
      case 9: return criterion_negative();
      case 10: return criterion_properties();
      default:
        throw std::invalid_argument("criterion index must be 1..10");
    }
  } catch (const std::exception& e) {
    return {index, "criterion-" + std::to_string(index), false,
            std::string("exception: ") + e.what()};
  }
}

inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (int k = 1; k <= 10; ++k) out.push_back(run_criterion(k));
  return out;
}

}  // namespace affweyl::acceptance
