#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "eisdenom/eis_eval.hpp"
#include "eisdenom/numeric_oracle.hpp"
#include "eisdenom/quadfield.hpp"
#include "oracles.hpp"

using namespace eisdenom;

namespace {

// Plain composite Simpson integration of the q-expansion, independent of the
// library quadrature.
Complex simpson_chain(const SymbolChain& ch, Complex tau, long T, int panels) {
  const int n = ch.weight();
  auto B = oracle::bernoulli_recurrence(n + 2);
  double zeta = Rational(-B[n + 2] / Rational(n + 2)).get_d();
  std::vector<double> c(T + 1, 0.0);
  c[0] = 1;
  for (long k = 1; k <= T; ++k) {
    double s = 0;
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) s += std::pow(static_cast<double>(d), n + 1);
    c[k] = 2 * s / zeta;
  }
  const Complex two_pi_i(0, 2 * M_PI);
  auto E = [&](Complex z) {
    Complex q = std::exp(two_pi_i * z), qk = 1, s = 0;
    for (long k = 0; k <= T; ++k, qk *= q) s += c[k] * qk;
    return s;
  };
  Complex total = 0;
  for (const Term& t : ch.terms()) {
    Complex z0 = point_value(t.from, tau), z1 = point_value(t.to, tau);
    auto f = [&](Complex z) {
      Complex p = 0, zp = 1;
      for (int mu = 0; mu <= n; ++mu, zp *= z) p += t.poly[mu].get_d() * zp;
      return E(z) * p;
    };
    Complex h = (z1 - z0) / static_cast<double>(2 * panels), s = f(z0) + f(z1);
    for (int i = 1; i < 2 * panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(z0 + h * static_cast<double>(i));
    total += t.coeff.get_d() * s * h / 3.0;
  }
  return total;
}

}  // namespace

TEST_CASE("q-expansion coefficients") {
  QSeries E4 = eisenstein_q(2, 10);
  CHECK(E4.weight() == 4);
  CHECK(E4.c[0] == 1);
  CHECK(E4.c[1] == 240);
  CHECK(E4.c[2] == 2160);
  QSeries E12 = eisenstein_q(10, 3);
  CHECK(E12.c[1] == make_rational(65520, 691));
  // E4^2 = E8 up to the truncation.
  QSeries E8 = eisenstein_q(6, 40);
  QSeries E4b = eisenstein_q(2, 40);
  Complex z(0.1, 0.9);
  CHECK(std::abs(E4b(z) * E4b(z) - E8(z)) < 1e-9);
  // Modularity E4(-1/z) = z^4 E4(z).
  Complex w(0.05, 1.2);
  CHECK(std::abs(E4b(-1.0 / w) - std::pow(w, 4) * E4b(w)) < 1e-8);
  CHECK(E4.tail_bound(1.0) < E4.tail_bound(0.5));
}

TEST_CASE("translation integral") {
  for (int n = 2; n <= 10; n += 2) {
    NumericValue v = numeric_pair(n, Mat2::T(), HomPoly::e(n, 0), Complex(0, 1));
    CHECK(std::abs(v.value - Complex(1, 0)) < 1e-10);
  }
  CHECK_THROWS(numeric_pair(2, Mat2::S(), HomPoly::e(2, 0)));
  CHECK_THROWS(point_value(PointRef(Cusp::infinity()), kDefaultTau));
}

TEST_CASE("designated integral suite") {
  auto suite = designated_integrals();
  CHECK(suite.size() == 10);
  for (const auto& d : suite) {
    CAPTURE(d.name);
    CHECK(d.ok);
    CHECK(d.abs_diff < 1e-8);
    CHECK(d.numeric.min_height > 0.4);
    CHECK(std::abs(d.numeric.value.imag()) < 1e-8);
  }
}

TEST_CASE("refinement and basepoint stability") {
  auto base = designated_integrals(150, 1e-8);
  auto fine = designated_integrals(300, 1e-8);
  auto moved = designated_integrals(150, 1e-8, Complex(-0.17, 1.31));
  REQUIRE(base.size() == fine.size());
  REQUIRE(base.size() == moved.size());
  for (size_t i = 0; i < base.size(); ++i) {
    CAPTURE(base[i].name);
    CHECK(std::abs(base[i].numeric.value - fine[i].numeric.value) < 1e-9);
    CHECK(std::abs(base[i].numeric.value - moved[i].numeric.value) < 1e-8);
  }
}

TEST_CASE("independent quadrature") {
  SymbolChain c1 = build_ctilde(2, make_lift_params(2, 1, 0, 0), Mat2::identity(), Mat2::identity());
  Complex s = simpson_chain(c1, kDefaultTau, 120, 400);
  CHECK(std::abs(s - Complex(D_value(2, 1).get_d(), 0)) < 1e-7);
  SymbolChain c3 = build_ctilde(4, make_lift_params(2, 3, 0, 0), Mat2::identity(), Mat2::identity());
  Complex s3 = simpson_chain(c3, kDefaultTau, 120, 400);
  CHECK(std::abs(s3 - numeric_pair_chain(c3).value) < 1e-7);
  NarrowClass A = narrow_classes(5).front();
  SymbolChain z = zclass_cycle(A, 2);
  CHECK(std::abs(simpson_chain(z, kDefaultTau, 120, 400) - numeric_pair_chain(z).value) < 1e-7);
  CHECK(std::abs(numeric_pair_chain(z).value.real() - pair_cycle(eisenstein_cocycle(2), z).get_d()) < 1e-8);
}
