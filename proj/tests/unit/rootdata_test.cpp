#include "affweyl/rootdata.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace affweyl;

namespace {

Vec<Rat> rv(std::initializer_list<Rat> xs) { return Vec<Rat>(xs); }

}  // namespace

TEST_CASE("invalid (family, rank) pairs are rejected with a diagnostic") {
  CHECK_THROWS_AS(build_root_datum(Family::A, 0, true), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::B, 1, true), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::C, 1, false), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::D, 2, true), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::E, 5, true), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::F, 3, true), std::invalid_argument);
  CHECK_THROWS_AS(build_root_datum(Family::G, 3, true), std::invalid_argument);
  CHECK_THROWS_WITH(build_root_datum(Family::F, 3, true),
                    Catch::Matchers::ContainsSubstring("rank 4"));
}

TEST_CASE("A1 model: single simple root on the sum-zero plane") {
  auto d = build_root_datum(Family::A, 1, true);
  REQUIRE(d->ambient_dim == 2);
  REQUIRE(d->rank == 1);
  CHECK(d->simple_roots[0] == rv({Rat(-1), Rat(1)}));
  CHECK(d->highest_root == d->simple_roots[0]);
  CHECK(d->positive_roots.size() == 1);
}

TEST_CASE("C2 affine model matches the explicit coordinates") {
  auto d = build_root_datum(Family::C, 2, true);
  REQUIRE(d->ambient_dim == 2);
  CHECK(d->simple_roots[0] == rv({Rat(1), Rat(-1)}));
  CHECK(d->simple_roots[1] == rv({Rat(0), Rat(2)}));
  CHECK(d->highest_root == rv({Rat(2), Rat(0)}));  // a_0 = 1 - 2e_1
  CHECK(d->fundamental_coweights[0] == rv({Rat(1), Rat(0)}));
  CHECK(d->fundamental_coweights[1] == rv({Rat(1, 2), Rat(1, 2)}));
  CHECK(d->positive_roots.size() == 4);
  CHECK(d->two_rho == rv({Rat(4), Rat(2)}));
}

TEST_CASE("A2 data in the sum-zero model") {
  auto d = build_root_datum(Family::A, 2, true);
  CHECK(d->two_rho == rv({Rat(-2), Rat(0), Rat(2)}));
  CHECK(d->positive_roots.size() == 3);
  // omega_i^vee per the explicit model: (-i/n,...,(n-i)/n,...)
  CHECK(d->fundamental_coweights[0] == rv({Rat(-1, 3), Rat(-1, 3), Rat(2, 3)}));
  CHECK(d->fundamental_coweights[1] == rv({Rat(-2, 3), Rat(1, 3), Rat(1, 3)}));
}

TEST_CASE("A-family coweights match the closed form for larger n") {
  for (int rank = 1; rank <= 4; ++rank) {
    auto d = build_root_datum(Family::A, rank, true);
    int n = rank + 1;
    for (int i = 1; i <= rank; ++i) {
      Vec<Rat> expect(n);
      for (int j = 0; j < n - i; ++j) expect[j] = Rat(-i, n);
      for (int j = n - i; j < n; ++j) expect[j] = Rat(n - i, n);
      CHECK(d->fundamental_coweights[i - 1] == expect);
    }
  }
}

TEST_CASE("pairing of simple roots and coweights is the identity") {
  for (auto fam : {Family::A, Family::B, Family::C, Family::D, Family::G}) {
    int rank = fam == Family::G ? 2 : 3;
    if (fam == Family::A) rank = 3;
    auto d = build_root_datum(fam, rank, true);
    for (int i = 0; i < d->rank; ++i)
      for (int j = 0; j < d->rank; ++j)
        CHECK(pairing(d->simple_roots[i], d->fundamental_coweights[j]) ==
              (i == j ? Rat(1) : Rat(0)));
  }
}

TEST_CASE("Cartan matrices of small types") {
  auto g2 = build_root_datum(Family::G, 2, true);
  CHECK(g2->cartan == std::vector<std::vector<long long>>{{2, -3}, {-1, 2}});
  // cartan[i][j] = <alpha_j, alpha_i^vee>
  auto c2 = build_root_datum(Family::C, 2, true);
  CHECK(c2->cartan == std::vector<std::vector<long long>>{{2, -2}, {-1, 2}});
  auto a2 = build_root_datum(Family::A, 2, true);
  CHECK(a2->cartan == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
}

TEST_CASE("positive root counts across families") {
  CHECK(build_root_datum(Family::A, 4, false)->positive_roots.size() == 10);
  CHECK(build_root_datum(Family::B, 3, true)->positive_roots.size() == 9);
  CHECK(build_root_datum(Family::C, 4, true)->positive_roots.size() == 16);
  CHECK(build_root_datum(Family::D, 4, true)->positive_roots.size() == 12);
  CHECK(build_root_datum(Family::E, 6, false)->positive_roots.size() == 36);
  CHECK(build_root_datum(Family::E, 7, false)->positive_roots.size() == 63);
  CHECK(build_root_datum(Family::E, 8, false)->positive_roots.size() == 120);
  CHECK(build_root_datum(Family::F, 4, true)->positive_roots.size() == 24);
  CHECK(build_root_datum(Family::G, 2, true)->positive_roots.size() == 6);
}

TEST_CASE("two_rho is the sum of positive roots and the highest root dominates") {
  for (auto fam : {Family::A, Family::B, Family::C, Family::D, Family::F, Family::G}) {
    int rank = fam == Family::G ? 2 : (fam == Family::F ? 4 : 3);
    if (fam == Family::A) rank = 2;
    auto d = build_root_datum(fam, rank, true);
    Vec<Rat> sum = zero_vec<Rat>(d->ambient_dim);
    for (const auto& r : d->positive_roots) sum = sum + r;
    CHECK(sum == d->two_rho);
    for (int i = 0; i < d->rank; ++i) {
      Vec<Rat> diff = d->highest_root - d->simple_roots[i];
      for (const auto& c : simple_root_coefficients(*d, diff)) CHECK(c >= Rat(0));
    }
  }
}

TEST_CASE("inner: spec values") {
  auto a2 = build_root_datum(Family::A, 2, true);
  Vec<Rat> zero = zero_vec<Rat>(3);
  CHECK(inner(*a2, zero, zero) == Rat(0));
  const auto& w1 = a2->fundamental_coweights[0];
  CHECK(inner(*a2, w1, a2->simple_coroots[0]) / inner(*a2, w1, w1) == Rat(3, 2));

  // C~_2: both coweight ratios come out 1 under any invariant form; this is
  // forced by c_{T_i} and by d_i = 2n-i-1 (see the tube tests).
  auto c2 = build_root_datum(Family::C, 2, true);
  const auto& w2 = c2->fundamental_coweights[1];
  CHECK(w2 == rv({Rat(1, 2), Rat(1, 2)}));
  CHECK(inner(*c2, w2, c2->simple_coroots[1]) / inner(*c2, w2, w2) == Rat(1));
}

TEST_CASE("inner rejects dimension mismatch") {
  auto d = build_root_datum(Family::A, 2, true);
  CHECK_THROWS_AS(inner(*d, zero_vec<Rat>(2), zero_vec<Rat>(3)), std::invalid_argument);
}

TEST_CASE("coweight ratio is invariant under rescaling the form") {
  for (auto fam : {Family::A, Family::C, Family::G}) {
    int rank = 2;
    auto d = build_root_datum(fam, rank, true);
    RootDatum scaled = *d;
    scaled.gram = Rat(7, 3) * scaled.gram;
    for (int i = 0; i < rank; ++i) {
      const auto& w = d->fundamental_coweights[i];
      Rat r1 = inner(*d, w, d->simple_coroots[i]) / inner(*d, w, w);
      Rat r2 = inner(scaled, w, scaled.simple_coroots[i]) / inner(scaled, w, w);
      CHECK(r1 == r2);
    }
  }
}

TEST_CASE("simple reflections permute the other positive roots and negate their own") {
  for (auto fam : {Family::A, Family::C, Family::G}) {
    auto d = build_root_datum(fam, 2, true);
    for (int i = 0; i < d->rank; ++i) {
      Mat<Rat> m = Mat<Rat>::identity(d->ambient_dim);
      for (int r = 0; r < d->ambient_dim; ++r)
        for (int c = 0; c < d->ambient_dim; ++c)
          m(r, c) -= d->simple_coroots[i][r] * d->simple_roots[i][c];
      std::vector<Vec<Rat>> images;
      for (const auto& root : d->positive_roots) {
        Vec<Rat> img = m * root;
        if (root == d->simple_roots[i]) {
          CHECK(img == -Rat(1) * root);
        } else {
          images.push_back(img);
        }
      }
      for (const auto& img : images) {
        bool found = false;
        for (const auto& root : d->positive_roots)
          if (root == img) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("dominant_representative: fixed points and the A1 reflection") {
  auto a1 = build_root_datum(Family::A, 1, true);
  // (-1,1) is dominant in this model; (1,-1) reflects onto it
  CHECK(dominant_representative(*a1, rv({Rat(-1), Rat(1)})) == rv({Rat(-1), Rat(1)}));
  CHECK(dominant_representative(*a1, rv({Rat(1), Rat(-1)})) == rv({Rat(-1), Rat(1)}));

  auto a2 = build_root_datum(Family::A, 2, true);
  Vec<Rat> v = Rat(3, 2) * a2->fundamental_coweights[0];  // v_{T_1}
  CHECK(dominant_representative(*a2, v) == v);
}

TEST_CASE("dominant_representative is idempotent and orbit-preserving") {
  std::mt19937_64 rng(0);
  for (auto fam : {Family::A, Family::C}) {
    auto d = build_root_datum(fam, 2, true);
    for (int trial = 0; trial < 25; ++trial) {
      Vec<Rat> v(d->ambient_dim);
      for (auto& x : v) x = Rat((long long)(rng() % 13) - 6, 1 + (long long)(rng() % 3));
      Vec<Rat> dom = dominant_representative(*d, v);
      CHECK(dominant_representative(*d, dom) == dom);
      // scramble with a short random word of simple reflections
      Vec<Rat> w = dom;
      for (int k = 0; k < 6; ++k) {
        int i = (int)(rng() % d->rank);
        w = w - pairing(d->simple_roots[i], w) * d->simple_coroots[i];
      }
      CHECK(dominant_representative(*d, w) == dom);
      for (int i = 0; i < d->rank; ++i)
        CHECK(pairing(d->simple_roots[i], dom) >= Rat(0));
    }
  }
}
