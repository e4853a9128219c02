#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisdenom/modsym.hpp"

namespace eisdenom {

// x + y sqrt(D)
struct QuadNumber {
  Rational x = 0, y = 0;
  Integer D = 0;

  QuadNumber conj() const { return {x, -y, D}; }
  QuadNumber operator+(const QuadNumber& o) const;
  QuadNumber operator-(const QuadNumber& o) const;
  QuadNumber operator*(const QuadNumber& o) const;
  QuadNumber operator*(const Rational& s) const { return {x * s, y * s, D}; }
  QuadNumber operator/(const QuadNumber& o) const;
  bool operator==(const QuadNumber& o) const { return x == o.x && y == o.y && D == o.D; }
  Rational norm() const { return x * x - y * y * Rational(D); }
  // Sign under the real embedding sqrt(D) > 0.
  int sign() const;
  bool totally_positive() const { return sign() > 0 && conj().sign() > 0; }
};

std::string to_string(const QuadNumber& z);

struct QForm {
  Integer a, b, c;
  Integer disc() const { return b * b - 4 * a * c; }
  bool primitive() const { return gcd(gcd(a, b), c) == 1; }
  bool operator==(const QForm& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const QForm& o) const;
};

std::string to_string(const QForm& f);
// -(a X1^2 + b X1 X2 + c X2^2)
HomPoly form_poly(const QForm& f);
bool is_reduced(const QForm& f);
// One reduction step; proper equivalence. The matrix g with f'(X) = f(g X) is returned via g_out.
QForm rho(const QForm& f, Mat2* g_out = nullptr);

struct QuadOrder {
  Integer D, D0, f;  // D = f^2 D0
  static QuadOrder make(const Integer& D);
};

bool is_valid_discriminant(const Integer& D);

struct NarrowClass {
  Integer D;
  QForm rep;
  std::vector<QForm> cycle;
  QuadNumber alpha1, alpha2;
  Mat2 gamma0;
  Integer t, u;
  HomPoly N;  // N_{alpha1, alpha2}
};

std::vector<NarrowClass> narrow_classes(const Integer& D);
// Minimal t, u > 0 with t^2 - D u^2 = 4.
std::pair<Integer, Integer> fundamental_unit_tp(const Integer& D);
// Class data from any primitive form with a > 0, through the ideal Z a + Z (-b + sqrt D)/2.
NarrowClass class_from_form(const QForm& f);
// Class data from an oriented basis of a proper ideal of the order of discriminant D.
NarrowClass class_from_basis(const Integer& D, const QuadNumber& alpha1, const QuadNumber& alpha2);
// Index into narrow_classes(D) of the class containing f.
size_t class_index_of(const QForm& f);

SymbolChain zclass_cycle(const NarrowClass& A, int k);
Rational partial_zeta_neg(const NarrowClass& A, int k);

HomPoly q_gamma(const Mat2& g);
Rational rademacher(int k, const Mat2& g);

struct SharpnessWitness {
  bool found = false;
  Integer D;
  size_t class_index = 0;
  QForm form;
  Rational zeta;
  Integer J_zeta;
};

SharpnessWitness sharpness_search(int k, long p, long max_disc);

}  // namespace eisdenom
