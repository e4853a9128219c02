#pragma once

#include <string>
#include <vector>

#include "eisdenom/bernoulli.hpp"
#include "eisdenom/rational.hpp"

namespace eisdenom {

struct Mat2 {
  Integer a = 1, b = 0, c = 0, d = 1;

  Integer det() const { return a * d - b * c; }
  Integer trace() const { return a + d; }
  Mat2 adj() const { return {d, -b, -c, a}; }
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }
  bool is_sl2() const { return det() == 1; }
  // Inverse of an SL2(Z) element.
  Mat2 inv_sl2() const;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 S() { return {0, -1, 1, 0}; }
  static Mat2 T(const Integer& k = 1) { return {1, k, 0, 1}; }
  static Mat2 diag(const Integer& x, const Integer& y) { return {x, 0, 0, y}; }
};

std::string to_string(const Mat2& g);

enum class Basis { primary, dual };

// Homogeneous polynomial of degree n in X1, X2. Primary: coefficient mu is the
// coefficient of e_mu = X1^mu X2^(n-mu). Dual: coordinates in the basis
// e_nu^flat = (-1)^(n-nu) binom(n,nu) X1^(n-nu) X2^nu, so <e_nu^flat, e_mu> = delta.
class HomPoly {
 public:
  HomPoly() = default;
  explicit HomPoly(int n, Basis basis = Basis::primary);
  HomPoly(int n, std::vector<Rational> coeffs, Basis basis = Basis::primary);

  static HomPoly e(int n, int nu);
  static HomPoly e_flat(int n, int nu);

  int weight() const { return n_; }
  Basis basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_.at(i); }
  Rational& operator[](int i) { return c_.at(i); }
  bool is_zero() const;

  HomPoly& operator+=(const HomPoly& o);
  HomPoly& operator-=(const HomPoly& o);
  HomPoly& operator*=(const Rational& s);
  HomPoly operator+(const HomPoly& o) const { HomPoly r(*this); return r += o; }
  HomPoly operator-(const HomPoly& o) const { HomPoly r(*this); return r -= o; }
  HomPoly operator*(const Rational& s) const { HomPoly r(*this); return r *= s; }
  HomPoly operator-() const { return *this * Rational(-1); }
  bool operator==(const HomPoly& o) const;
  bool operator!=(const HomPoly& o) const { return !(*this == o); }

 private:
  void check_compatible(const HomPoly& o) const;
  int n_ = 0;
  Basis basis_ = Basis::primary;
  std::vector<Rational> c_{Rational(0)};
};

std::string to_string(const HomPoly& P);

// Column mu holds the coefficients of g.e_mu, with (gP)(X1,X2) = P(dX1-bX2, -cX1+aX2).
std::vector<std::vector<Integer>> action_matrix(const Mat2& g, int n);

// Primary: substitution above. Dual: the contragredient action fixed by
// <g.c, Q> = <c, adj(g).Q>.
HomPoly act(const Mat2& g, const HomPoly& P);

Rational pair_dual(const HomPoly& dual, const HomPoly& primary);

// Product and powers of primary polynomials (weights add).
HomPoly poly_mul(const HomPoly& P, const HomPoly& Q);
HomPoly poly_pow(const HomPoly& P, int k);

// P(x, 1) as a univariate polynomial.
UniPoly dehomogenize(const HomPoly& P);

// Conversion between dual coordinates and the monomial expansion of
// sum c_nu e_nu^flat (returned primary-tagged).
HomPoly dual_to_monomials(const HomPoly& dual);
HomPoly dual_from_monomials(const HomPoly& poly);

HomPoly dagger(const HomPoly& P);
HomPoly ddagger(const HomPoly& P);

struct LiftParams {
  long p = 2;
  long nu = 1;
  long k = 0;
  Integer j = 0;
  long l = 0;        // min(ord_p j, k)
  Integer jprime = 0;  // j / p^l
  Integer d = 0;     // d_{k-l}(j')
  Integer b = -1;    // b_{k-l}(j')
};

LiftParams make_lift_params(long p, long nu, long k, const Integer& j);

struct LiftPolys {
  HomPoly E1, E0, P1, P0;
};

LiftPolys lift_polys(int n, const LiftParams& params);

// Minimum p-adic valuation over the coefficients.
Valuation min_valuation(const HomPoly& P, long p);

}  // namespace eisdenom
