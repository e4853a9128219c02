#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eisdenom/acceptance.hpp"
#include "eisdenom/eis_eval.hpp"
#include "eisdenom/quadfield.hpp"
#include "oracles.hpp"

using namespace eisdenom;

namespace {

Rational zeta_oracle(long s) {  // zeta(s) for s <= 0
  auto B = oracle::bernoulli_recurrence(1 - s);
  return -B[1 - s] / Rational(1 - s);
}

Rational D_oracle(int n, int nu) {
  Rational a = zeta_oracle(-nu), b = zeta_oracle(nu - n), c = zeta_oracle(-1 - n);
  return a * b / c - a - b;
}

Rational Dp_oracle(int n, int nu, long p) {
  Rational P(p);
  Rational a = (1 - rpow(P, nu)) * zeta_oracle(-nu);
  Rational b = (1 - rpow(P, n - nu)) * zeta_oracle(nu - n);
  Rational c = (1 - rpow(P, n + 1)) * zeta_oracle(-1 - n);
  return a * b / c - a - b;
}

SymbolChain translation(int n, long a) {
  SymbolChain ch(n);
  ch.add(PointRef::base(), PointRef::formal(Mat2::T(a)), HomPoly::e(n, 0));
  return ch;
}

}  // namespace

TEST_CASE("D values") {
  CHECK(D_value(2, 1) == 1);
  CHECK(D_value(4, 1) == make_rational(1, 4));
  for (int n = 4; n <= 16; n += 2)
    for (int nu = 2; nu <= n - 2; nu += 2) CHECK(D_value(n, nu) == 0);
  for (int n = 2; n <= 20; n += 2)
    for (int nu = 1; nu < n; ++nu) CHECK(D_value(n, nu) == D_oracle(n, nu));
  CHECK_THROWS(D_value(4, 0));
  CHECK_THROWS(D_value(4, 4));
}

TEST_CASE("cocycle relations and normalization") {
  for (int n = 2; n <= 14; n += 2) {
    const EisCocycle& c = eisenstein_cocycle(n);
    CAPTURE(n);
    CHECK(pair_dual(c.v, HomPoly::e(n, 0)) == 1);
    CHECK((c.u + act(Mat2::S(), c.u)).is_zero());
    Mat2 U = Mat2::S() * Mat2::T();
    HomPoly w = c.u + act(Mat2::S(), c.v);
    CHECK((w + act(U, w) + act(U * U, w)).is_zero());
    CHECK(c.kernel_dim == c.coboundary_dim);
  }
  CHECK_THROWS(eisenstein_cocycle(3));
}

TEST_CASE("cocycle law on random pairs") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + 2 * (trial % 5);
    const EisCocycle& c = eisenstein_cocycle(n);
    Mat2 g = random_sl2(rng, 40), h = random_sl2(rng, 40);
    CHECK(cocycle_eval(c, g * h) == cocycle_eval(c, g) + act(g, cocycle_eval(c, h)));
    CHECK(cocycle_eval(c, -g) == cocycle_eval(c, g));
  }
}

TEST_CASE("word decomposition independence") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> e(-6, 6), len(1, 8), sel(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + 2 * (trial % 6);
    const EisCocycle& c = eisenstein_cocycle(n);
    std::vector<std::pair<char, long>> word;
    Mat2 g = Mat2::identity();
    long l = len(rng);
    for (long i = 0; i < l; ++i) {
      if (sel(rng)) {
        long k = e(rng);
        word.push_back({'T', k});
        g = g * Mat2::T(k);
      } else {
        word.push_back({'S', 1});
        g = g * Mat2::S();
      }
    }
    HomPoly direct = cocycle_eval(c, g);
    CHECK(cocycle_eval_word(c, word) == direct);
    // Same element through (ST)^3 = -I and T^a T^b = T^(a+b).
    auto longer = word;
    for (int i = 0; i < 3; ++i) {
      longer.push_back({'S', 1});
      longer.push_back({'T', 1});
    }
    longer.push_back({'T', 2});
    longer.push_back({'T', -2});
    CHECK(cocycle_eval_word(c, longer) == direct);
  }
}

TEST_CASE("basic pairings") {
  for (int n = 2; n <= 12; n += 2) {
    const EisCocycle& c = eisenstein_cocycle(n);
    CHECK(pair_cycle(c, translation(n, 1)) == 1);
    for (long a = -5; a <= 5; ++a) CHECK(pair_cycle(c, translation(n, a)) == a);
    for (int nu = 1; nu < n; ++nu) {
      auto ch = build_ctilde(n, make_lift_params(2, nu, 0, 0), Mat2::identity(), Mat2::identity());
      CHECK(pair_cycle(c, ch) == D_value(n, nu));
    }
  }
  SymbolChain open(2);
  open.add(PointRef::base(), PointRef::formal(Mat2::S()), HomPoly::e(2, 1));
  CHECK_THROWS(pair_cycle(eisenstein_cocycle(2), open));
}

TEST_CASE("coboundary invariance on random cycles") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coef(-40, 40);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + 2 * (trial % 5);
    SymbolChain ch(n);
    if (trial % 2 == 0) {
      Mat2 g;
      do g = random_sl2(rng, 30);
      while (abs(g.trace()) <= 2);
      ch.add(PointRef::base(), PointRef::formal(g), poly_pow(q_gamma(g), n / 2));
    } else {
      int nu = 1 + trial % (n - 1);
      ch = build_ctilde(n, make_lift_params(3, nu, 1, trial % 3), random_sl2(rng, 6), random_sl2(rng, 6));
    }
    REQUIRE(is_cycle(ch));
    std::vector<Rational> bc;
    for (int i = 0; i <= n; ++i) bc.push_back(Rational(coef(rng)));
    Cocycle cb = coboundary(HomPoly(n, bc, Basis::dual));
    const EisCocycle& phi = eisenstein_cocycle(n);
    Cocycle shifted{n, phi.u + cb.u, phi.v + cb.v};
    CHECK(pair_cycle(shifted, ch) == pair_cycle(phi, ch));
    CHECK(pair_cycle(cb, ch) == 0);
  }
}

TEST_CASE("cocycle space") {
  for (int n = 2; n <= 10; n += 2) {
    auto basis = cocycle_space_basis(n);
    // Z^1 has dimension n+2 for even n: coboundaries (n+1) plus the Eisenstein
    // line plus cusp forms counted twice.
    long cusp = (n + 2) / 12 - ((n + 2) % 12 == 2 ? 1 : 0);
    CHECK(static_cast<long>(basis.size()) == (n + 1) + 1 + 2 * cusp);
  }
}

TEST_CASE("Hecke eigen property") {
  for (int n = 2; n <= 12; n += 2) CHECK(hecke_eigen_check(n, 2));
  for (int n = 2; n <= 8; n += 2) CHECK(hecke_eigen_check(n, 3));
  CHECK(hecke_eigen_check(4, 5));
}

TEST_CASE("W series and lift pairings") {
  for (int n : {2, 4, 6})
    for (int nu = 1; nu < n; ++nu)
      for (long p : {2L, 3L, 5L}) {
        CHECK(W_series(n, p, nu, 0) == D_value(n, nu));
        CHECK(pair_lift(n, p, nu, 0) == D_value(n, nu));
        CHECK(pair_lift(n, p, nu, 1) == W_series(n, p, nu, 1));
      }
  CHECK(W_series(2, 2, 1, 1) == 9);
  CHECK(pair_lift_sequence(2, 2, 1, 3) == std::vector<Rational>{1, 9, 78, 678});
  CHECK(pair_lift(2, 3, 1, 1) == 27);
  CHECK(pair_lift(2, 3, 1, 2) == 705);
  CHECK_THROWS(W_series(2, 2, 2, 1));
}

TEST_CASE("closed form matches pairing with the built lift") {
  for (long p : {2L, 3L})
    for (long m = 0; m <= 3; ++m) CHECK(pair_cycle(eisenstein_cocycle(2), build_lift(2, p, 1, m)) == pair_lift(2, p, 1, m));
  for (int nu = 1; nu <= 3; ++nu)
    for (long m = 0; m <= 3; ++m)
      CHECK(pair_cycle(eisenstein_cocycle(4), build_lift(4, 3, nu, m)) == pair_lift(4, 3, nu, m));
  CHECK(pair_cycle(eisenstein_cocycle(6), build_lift(6, 2, 3, 2)) == pair_lift(6, 2, 3, 2));
}

TEST_CASE("D_p and defects") {
  CHECK(Dp_value(2, 1, 5) == make_rational(-24, 31));
  CHECK(delta_p_nu(2, 1, 5) == 0);
  for (int n = 4; n <= 12; n += 2)
    for (int nu = 2; nu <= n - 2; nu += 2) {
      CHECK(Dp_value(n, nu, 7) == 0);
      CHECK(delta_p_nu(n, nu, 7) == 0);
    }
  CHECK(delta_p(10, 691) == 1);
  for (int n = 2; n <= 16; n += 2)
    for (int nu = 1; nu < n; ++nu)
      for (long p : {2L, 3L, 5L, 7L, 691L}) CHECK(Dp_value(n, nu, p) == Dp_oracle(n, nu, p));
}

TEST_CASE("lift limits") {
  for (int n : {2, 4, 6})
    for (int nu = 1; nu < n; nu += 2)
      for (long p : {2L, 3L, 5L}) {
        Rational P(p);
        Rational expect = (1 - rpow(P, n + 1)) / ((1 - rpow(P, nu)) * (1 - rpow(P, n - nu))) * Dp_oracle(n, nu, p);
        CHECK(lift_limit(n, p, nu) == expect);
      }
  CHECK(lift_limit(2, 5, 1) == 6);
  CHECK(lift_limit(2, 3, 1) == 3);
  CHECK(lift_limit(4, 5, 1) == make_rational(-525, 124));
}

TEST_CASE("p-adic convergence of the lift pairings") {
  auto seq = pair_lift_sequence(2, 5, 1, 125);
  Rational L = lift_limit(2, 5, 1);
  // Along powers of p the distance to the limit shrinks strictly.
  Valuation prev = -1;
  for (long m : {1L, 5L, 25L, 125L}) {
    Valuation v = padic_val(seq[m] - L, 5);
    CHECK(v > prev);
    prev = v;
  }
  // For m >= 4 the distance is exactly p^(n+1+ord_p m); frozen from the exact values.
  for (long m = 4; m <= 125; ++m) CHECK(padic_val(seq[m] - L, 5) == 3 + padic_val(Integer(m), Integer(5)));
  // Along m = 1, 2, 6, 24, 120 the valuations are 1, 2, 3, 3, 4.
  std::vector<Valuation> fact;
  for (long m : {1L, 2L, 6L, 24L, 120L}) fact.push_back(padic_val(seq[m] - L, 5));
  CHECK(fact == std::vector<Valuation>{1, 2, 3, 3, 4});
}

TEST_CASE("denominator of the Eisenstein class") {
  CHECK(denominator_eis(2, 100).N == 1);
  CHECK(denominator_eis(10, 1000).N == 691);
  CHECK(denominator_eis(14, 1000).N == 3617);
  for (int n = 2; n <= 20; n += 2) {
    DenominatorReport r = denominator_eis(n, 1000);
    CAPTURE(n);
    CHECK(r.all_match);
    CHECK(r.N == abs(zeta_oracle(-1 - n).get_num()));
    for (const auto& pr : r.per_prime) {
      CHECK(pr.delta == pr.ord_N);
      if ((n + 2) % (pr.p - 1) == 0) CHECK(pr.delta == 0);
    }
  }
  CHECK(denominator_eis(14, 1000).uncovered == 3617);
  CHECK(denominator_eis(14, 4000).uncovered == 1);
}
