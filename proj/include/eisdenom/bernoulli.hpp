#pragma once

#include <vector>

#include "eisdenom/rational.hpp"

namespace eisdenom {

// Dense univariate polynomial over Q; coefficient i multiplies x^i.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational operator()(const Rational& x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rational& s) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  // p(x + s)
  UniPoly shift(const Rational& s) const;
  UniPoly derivative() const;
  // Antiderivative vanishing at 0.
  UniPoly integral() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly monomial(int deg, const Rational& c = 1);

// B_t with B_1 = -1/2.
Rational bernoulli_number(long t);
UniPoly bernoulli_poly(long t);
// (B_t(x) - B_t)/t; equals sum_{j<x} j^(t-1) for integer x >= 0.
Rational btilde(long t, const Rational& x);

struct ZetaValue {
  Rational value;  // zeta(1-m)
  Integer numerator() const { return abs(value.get_num()); }
  Integer denominator() const { return value.get_den(); }
};
ZetaValue zeta_neg(long m);
inline Rational zeta_at(long s) { return zeta_neg(1 - s).value; }  // s <= 0

int kronecker(const Integer& a, const Integer& n);
bool is_fundamental_discriminant(const Integer& D);
Rational gen_bernoulli_quadratic(long k, const Integer& D);
Rational dirichlet_L_neg(long k, const Integer& D);

}  // namespace eisdenom
