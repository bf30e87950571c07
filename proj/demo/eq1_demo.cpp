// Small tour of the library: exact Poincare-series identities, straight
// generators, and a Hecke determinant check, all over exact rationals.

#include "affweyl/hecke.hpp"

#include <cstdio>

using namespace affweyl;

int main() {
  // alternating product of parabolic Poincare series for G~_2
  auto g2 = build_root_datum(Family::G, 2, true);
  long cap = 16;
  auto lhs = alternating_product(g2, cap);
  auto rhs = TruncSeries<BigRat>::one(cap);
  std::printf("G~2 tube degrees:");
  for (int i = 1; i <= 2; ++i) {
    long d = tube_degree(*g2, i);
    std::printf(" %ld", d);
    rhs = rhs * series_inverse(TruncSeries<BigRat>::one_minus_power(cap, d));
  }
  std::printf("\nalternating product %s the degree product\n",
              lhs == rhs ? "equals" : "DIFFERS FROM");

  // a straight generator of C~_3 and its tube
  auto t = build_T(Family::C, 4, 2);
  auto st = is_straight(t.generator, 5);
  std::printf("C~3 T_2: length %ld, straight powers %s, stabilizes its tube %s\n",
              t.step_length, st.powers_ok ? "ok" : "NO",
              stabilizes_tube(t.generator, 2) ? "yes" : "NO");

  // the length-preserving factorization, then the determinant identity
  auto fac = verify_factorization(Family::A, 3, 10);
  std::printf("A~2 factorization at budget 10: %s (%ld elements)\n",
              fac.pass() ? "bijective and length-preserving" : "FAILED", fac.ball_count);

  auto a1 = build_root_datum(Family::A, 1, true);
  auto rep = make_a1_two_dim_rep(a1, BigRat(1, 2));
  auto rb = verify_det_identity(Family::A, 2, rep, 14);
  std::printf("A~1 two-dim rep at q = 1/2: determinant identity %s\n",
              rb.pass() ? "holds to cap 14" : "FAILS");
  return (lhs == rhs && st.powers_ok && fac.pass() && rb.pass()) ? 0 : 1;
}
