#include "affweyl/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace affweyl;

namespace {

TruncSeries<Rat> random_series(std::mt19937_64& rng, long cap, bool unit = false) {
  TruncSeries<Rat> s(cap);
  for (long i = 0; i <= cap; ++i)
    s.c[i] = Rat((long long)(rng() % 11) - 5, 1 + (long long)(rng() % 4));
  if (unit && s.c[0] == Rat(0)) s.c[0] = Rat(1);
  return s;
}

MatrixSeries<Rat> random_matrix_series(std::mt19937_64& rng, long dim, long cap) {
  MatrixSeries<Rat> m(dim, cap);
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) m.at(i, j) = random_series(rng, cap);
  return m;
}

}  // namespace

TEST_CASE("series inverse: geometric expansions") {
  auto inv_1mu = series_inverse(TruncSeries<Rat>::one_minus_power(6, 1));
  for (long i = 0; i <= 6; ++i) CHECK(inv_1mu.c[i] == Rat(1));

  TruncSeries<Rat> onepu(6);
  onepu.c[0] = Rat(1);
  onepu.c[1] = Rat(1);
  auto inv = series_inverse(onepu);
  for (long i = 0; i <= 6; ++i) CHECK(inv.c[i] == Rat(i % 2 == 0 ? 1 : -1));

  auto inv3 = series_inverse(TruncSeries<Rat>::one_minus_power(9, 3));
  for (long i = 0; i <= 9; ++i) CHECK(inv3.c[i] == Rat(i % 3 == 0 ? 1 : 0));
}

TEST_CASE("series inverse requires a unit") {
  TruncSeries<Rat> s(4);
  s.c[1] = Rat(1);
  CHECK_THROWS_AS(series_inverse(s), std::domain_error);
}

TEST_CASE("ring laws hold exactly up to cap") {
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    auto u = random_series(rng, 8, true);
    CHECK(series_inverse(u) * u == TruncSeries<Rat>::one(8));
  }
}

TEST_CASE("poincare series from length data") {
  CHECK(poincare_series<Rat>(std::vector<long>{0}, 4) ==
        TruncSeries<Rat>::constant(4, Rat(1)));
  auto s = poincare_series<Rat>(std::vector<long>{0, 1}, 4);
  CHECK(s.c[0] == Rat(1));
  CHECK(s.c[1] == Rat(1));
  CHECK(s.c[2] == Rat(0));
  // lengths beyond the cap are simply not visible
  auto t = poincare_series<Rat>(std::vector<long>{0, 9}, 4);
  CHECK(t == TruncSeries<Rat>::constant(4, Rat(1)));
}

TEST_CASE("full A~_1 Poincare series is (1-u^2)/(1-u)^2") {
  auto d = build_root_datum(Family::A, 1, true);
  auto entries = ball(d, {0, 1}, 6);
  auto got = poincare_series<BigRat>(entries, 6);
  auto inv = series_inverse(TruncSeries<BigRat>::one_minus_power(6, 1));
  auto expect = TruncSeries<BigRat>::one_minus_power(6, 2) * inv * inv;
  CHECK(got == expect);
}

TEST_CASE("matrix series determinants: diagonal and 1x1") {
  MatrixSeries<Rat> id = MatrixSeries<Rat>::identity(3, 5);
  CHECK(matrix_series_det(id) == TruncSeries<Rat>::one(5));

  MatrixSeries<Rat> dia(2, 5);
  dia.at(0, 0) = TruncSeries<Rat>::one_minus_power(5, 1);
  dia.at(1, 1) = TruncSeries<Rat>::one(5);
  dia.at(1, 1).c[1] = Rat(1);  // 1 + u
  CHECK(matrix_series_det(dia) == TruncSeries<Rat>::one_minus_power(5, 2));

  MatrixSeries<Rat> one(1, 5);
  one.at(0, 0) = dia.at(1, 1);
  CHECK(matrix_series_det(one) == dia.at(1, 1));
}

TEST_CASE("det is multiplicative on random matrix series") {
  std::mt19937_64 rng(1);
  for (long dim : {2, 3}) {
    for (int trial = 0; trial < 8; ++trial) {
      auto a = random_matrix_series(rng, dim, 6);
      auto b = random_matrix_series(rng, dim, 6);
      CHECK(matrix_series_det(a * b) == matrix_series_det(a) * matrix_series_det(b));
    }
  }
}

TEST_CASE("bareiss path agrees with cofactor expansion") {
  // coefficient growth in dense eliminations is why series run on BigRat
  std::mt19937_64 rng(2);
  auto rnd = [&](long dim, long cap) {
    MatrixSeries<BigRat> m(dim, cap);
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j)
        for (long k = 0; k <= cap; ++k)
          m.at(i, j).c[k] = BigRat((long long)(rng() % 11) - 5, 1 + (long long)(rng() % 4));
    return m;
  };
  auto m5 = rnd(5, 4);
  auto det5 = matrix_series_det(m5);
  // embed the same matrix as the top-left block of a 6x6 with unit diagonal
  MatrixSeries<BigRat> m6 = MatrixSeries<BigRat>::identity(6, 4);
  for (long i = 0; i < 5; ++i)
    for (long j = 0; j < 5; ++j) m6.at(i, j) = m5.at(i, j);
  CHECK(matrix_series_det(m6) == det5);
  // and multiplicativity still holds at dim 5
  auto a = rnd(5, 4);
  CHECK(matrix_series_det(m5 * a) == det5 * matrix_series_det(a));
}

TEST_CASE("alternating product: A~_1 and A~_2 closed forms") {
  auto a1 = build_root_datum(Family::A, 1, true);
  auto got1 = alternating_product(a1, 8);
  auto exp1 = series_inverse(TruncSeries<BigRat>::one_minus_power(8, 2));
  CHECK(got1 == exp1);

  auto a2 = build_root_datum(Family::A, 2, true);
  auto got2 = alternating_product(a2, 12);
  auto inv3 = series_inverse(TruncSeries<BigRat>::one_minus_power(12, 3));
  CHECK(got2 == inv3 * inv3);
}

TEST_CASE("alternating product: C~_2 equals 1/((1-u^4)(1-u^3))") {
  auto c2 = build_root_datum(Family::C, 2, true);
  auto got = alternating_product(c2, 12);
  auto expect = series_inverse(TruncSeries<BigRat>::one_minus_power(12, 4)) *
                series_inverse(TruncSeries<BigRat>::one_minus_power(12, 3));
  CHECK(got == expect);
}

TEST_CASE("alternating product output has constant term 1 and integer coefficients") {
  for (auto fam : {Family::A, Family::C, Family::G}) {
    auto d = build_root_datum(fam, 2, true);
    auto s = alternating_product(d, 10);
    CHECK(s.c[0] == BigRat(1));
    for (long i = 0; i <= 10; ++i) CHECK(denominator(s.c[i]) == 1);
  }
}
