#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eisdenom/acceptance.hpp"
#include "eisdenom/eis_eval.hpp"
#include "eisdenom/quadfield.hpp"
#include "oracles.hpp"

using namespace eisdenom;

namespace {

const std::vector<long> kFundamental = {5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41, 44, 56, 57, 60, 61, 65, 69};

Rational zeta_oracle(long s) {
  auto B = oracle::bernoulli_recurrence(1 - s);
  return -B[1 - s] / Rational(1 - s);
}

// f(g X) for f = [a, b, c].
QForm transform(const QForm& f, const Mat2& g) {
  auto val = [&](const Integer& x, const Integer& y) -> Integer { return f.a * x * x + f.b * x * y + f.c * y * y; };
  Integer b = 2 * f.a * g.a * g.b + f.b * (g.a * g.d + g.b * g.c) + 2 * f.c * g.c * g.d;
  return {val(g.a, g.c), b, val(g.b, g.d)};
}

}  // namespace

TEST_CASE("discriminants") {
  CHECK(is_valid_discriminant(5));
  CHECK(is_valid_discriminant(12));
  CHECK_FALSE(is_valid_discriminant(4));
  CHECK_FALSE(is_valid_discriminant(7));
  CHECK_FALSE(is_valid_discriminant(-3));
  CHECK_THROWS(narrow_classes(7));
}

TEST_CASE("narrow class numbers") {
  CHECK(narrow_classes(5).size() == 1);
  CHECK(narrow_classes(8).size() == 1);
  CHECK(narrow_classes(12).size() == 2);
  for (long D = 5; D <= 300; ++D) {
    if (!is_valid_discriminant(D)) continue;
    CAPTURE(D);
    CHECK(static_cast<long>(narrow_classes(D).size()) == oracle::narrow_class_number(D));
  }
}

TEST_CASE("fundamental units") {
  CHECK(fundamental_unit_tp(5) == std::pair<Integer, Integer>{3, 1});
  CHECK(fundamental_unit_tp(12) == std::pair<Integer, Integer>{4, 1});
  CHECK(fundamental_unit_tp(8) == std::pair<Integer, Integer>{6, 2});
  for (long D = 5; D <= 1000; ++D) {
    if (!is_valid_discriminant(D)) continue;
    CAPTURE(D);
    auto [t, u] = oracle::pell4(D);
    CHECK(fundamental_unit_tp(D) == std::pair<Integer, Integer>{t, u});
  }
}

TEST_CASE("class data") {
  for (long D : {5L, 8L, 12L, 13L, 21L, 32L, 45L, 60L, 85L, 136L, 145L}) {
    auto [t, u] = fundamental_unit_tp(D);
    for (const NarrowClass& A : narrow_classes(D)) {
      CAPTURE(D);
      CHECK(A.rep.disc() == D);
      CHECK(A.rep.primitive());
      CHECK(A.gamma0.is_sl2());
      CHECK(A.gamma0.trace() == t);
      CHECK(A.t == t);
      CHECK(A.u == u);
      CHECK(abs(A.gamma0.trace()) > 2);
      CHECK(act(A.gamma0, A.N) == A.N);
      CHECK(A.alpha1.D == A.alpha2.D);
      CHECK_FALSE(A.cycle.empty());
      for (const QForm& f : A.cycle) CHECK(is_reduced(f));
      CHECK(is_cycle(zclass_cycle(A, 2)));
    }
  }
}

TEST_CASE("partial zeta values") {
  CHECK(partial_zeta_neg(narrow_classes(5).front(), 2) == make_rational(1, 30));
  CHECK(partial_zeta_neg(narrow_classes(8).front(), 2) == make_rational(1, 12));
  // Summing over narrow classes gives zeta(1-k) L(1-k, chi_D).
  for (long D : kFundamental)
    for (int k = 2; k <= 6; k += 2) {
      CAPTURE(D);
      CAPTURE(k);
      Rational total = 0;
      for (const NarrowClass& A : narrow_classes(D)) total += partial_zeta_neg(A, k);
      Rational L = -oracle::gen_bernoulli(k, D) / Rational(k);
      CHECK(total == zeta_oracle(1 - k) * L);
    }
}

TEST_CASE("denominators of partial zeta values") {
  for (long D = 5; D <= 200; ++D) {
    if (!is_valid_discriminant(D)) continue;
    for (int k = 2; k <= 4; ++k) {
      Integer J = zeta_neg(2 * k).denominator();
      for (const NarrowClass& A : narrow_classes(D)) CHECK(is_integer(partial_zeta_neg(A, k) * Rational(J)));
    }
  }
}

TEST_CASE("independence of the class representative") {
  std::mt19937_64 rng(31);
  for (long D : {12L, 40L, 60L, 65L, 85L, 145L}) {
    for (const NarrowClass& A : narrow_classes(D)) {
      Rational z = partial_zeta_neg(A, 2);
      for (const QForm& f : A.cycle)
        if (f.a > 0) CHECK(partial_zeta_neg(class_from_form(f), 2) == z);
      int tried = 0;
      while (tried < 5) {
        QForm g = transform(A.rep, random_sl2(rng, 6));
        if (g.a <= 0) continue;
        ++tried;
        CHECK(partial_zeta_neg(class_from_form(g), 2) == z);
        CHECK(partial_zeta_neg(class_from_form(g), 3) == partial_zeta_neg(A, 3));
      }
    }
  }
}

TEST_CASE("fixed forms of hyperbolic elements") {
  CHECK(q_gamma(Mat2::T()) == HomPoly(2, {1, 0, 0}));
  CHECK(q_gamma(Mat2{2, 1, 1, 1}) == HomPoly(2, {1, 1, -1}));
  CHECK_THROWS(q_gamma(Mat2::S()));
  CHECK_THROWS(q_gamma(Mat2{2, 1, 1, 2}));
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    Mat2 g = random_sl2(rng, 30);
    if (g.trace() == 0 || g == Mat2::identity() || g == -Mat2::identity()) continue;
    HomPoly Q = q_gamma(g);
    CHECK(act(g, Q) == Q);
  }
}

TEST_CASE("Rademacher values") {
  CHECK(rademacher(2, Mat2::T()) == 1);
  CHECK(rademacher(3, Mat2::T()) == 1);
  CHECK(rademacher(2, Mat2{2, 1, 1, 1}) == 4);
  for (long a = 1; a <= 6; ++a) CHECK(rademacher(2, Mat2::T(a)) == a);
  // Conjugation invariance.
  std::mt19937_64 rng(33);
  for (int i = 0; i < 20; ++i) {
    Mat2 h = random_sl2(rng, 8);
    Mat2 g{2, 1, 1, 1};
    CHECK(rademacher(2, h * g * h.inv_sl2()) == rademacher(2, g));
    CHECK(rademacher(3, h * g * h.inv_sl2()) == rademacher(3, g));
  }
  CHECK_THROWS(rademacher(1, Mat2::T()));
}

TEST_CASE("sharpness witnesses") {
  CHECK(sharpness_search(2, 5, 100).D == 5);
  CHECK(sharpness_search(2, 3, 100).D == 5);
  SharpnessWitness w = sharpness_search(2, 2, 100);
  REQUIRE(w.found);
  CHECK(w.D != 5);
  CHECK(w.D != 8);
  CHECK(padic_val(Rational(w.J_zeta), 2) == 0);
}
