#pragma once

#include <map>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "eisdenom/sympoly.hpp"

namespace eisdenom {

// a/c in P^1(Q), reduced, c >= 0, infinity = (1:0).
struct Cusp {
  Integer a = 1, c = 0;
  static Cusp make(const Integer& a, const Integer& c);
  static Cusp infinity() { return {1, 0}; }
  bool operator==(const Cusp& o) const { return a == o.a && c == o.c; }
};

// The point gamma * hnf * tau for the generic basepoint tau, where hnf is
// [[ha, hb], [0, hd]] with ha, hd > 0, 0 <= hb < hd and gcd(ha, hb, hd) = 1.
// gamma is only defined up to sign; it is stored with its first nonzero
// entry positive.
struct FormalPoint {
  Integer ha = 1, hb = 0, hd = 1;
  Mat2 gamma;
  static FormalPoint from_matrix(const Mat2& M);
  Mat2 hnf() const { return {ha, hb, 0, hd}; }
  Mat2 matrix() const { return gamma * hnf(); }
  bool in_base_orbit() const { return ha == 1 && hb == 0 && hd == 1; }
  bool operator==(const FormalPoint& o) const {
    return ha == o.ha && hb == o.hb && hd == o.hd && gamma == o.gamma;
  }
};

class PointRef {
 public:
  PointRef() : v_(FormalPoint{}) {}
  PointRef(const Cusp& c) : v_(c) {}
  PointRef(const FormalPoint& f) : v_(f) {}
  static PointRef formal(const Mat2& M) { return PointRef(FormalPoint::from_matrix(M)); }
  static PointRef base() { return formal(Mat2::identity()); }

  bool is_cusp() const { return std::holds_alternative<Cusp>(v_); }
  const Cusp& cusp() const { return std::get<Cusp>(v_); }
  const FormalPoint& point() const { return std::get<FormalPoint>(v_); }

  bool operator==(const PointRef& o) const { return v_ == o.v_; }
  bool operator!=(const PointRef& o) const { return !(*this == o); }
  bool operator<(const PointRef& o) const;

 private:
  std::variant<Cusp, FormalPoint> v_;
};

std::string to_string(const PointRef& x);

// Action of an integer matrix with positive determinant on points.
PointRef act(const Mat2& g, const PointRef& x);

// Normalizes gamma so its first nonzero entry is positive.
Mat2 sign_normalize(const Mat2& g);

struct Term {
  PointRef from, to;
  HomPoly poly;
  Rational coeff;
};

class SymbolChain {
 public:
  explicit SymbolChain(int n = 2);

  int weight() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add(const PointRef& from, const PointRef& to, const HomPoly& poly, const Rational& coeff = 1);
  void append(const SymbolChain& o, const Rational& scale = 1);

  SymbolChain operator+(const SymbolChain& o) const;
  SymbolChain operator-(const SymbolChain& o) const;
  SymbolChain operator*(const Rational& s) const;

  // Orients each term (from < to, swapping negates), merges equal terms and
  // drops zero terms. Two chains are syntactically equal iff their normal
  // forms coincide.
  SymbolChain normalized() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

SymbolChain act(const Mat2& g, const SymbolChain& ch);

SymbolChain hecke_Vp(const SymbolChain& ch, long p);
SymbolChain hecke_Up(const SymbolChain& ch, long p);
SymbolChain hecke_Tp(const SymbolChain& ch, long p);
// W_m = sum_{k=0}^m U_p^k V_p^(m-k)
SymbolChain hecke_W(const SymbolChain& ch, long p, long m);

// binom(A+B, B) - binom(A+B, B-1)
Integer hecke_power_coeff(long A, long B);

// Pieces g_i in SL2(Z) with sum_i g_i{0, oo} = {alpha, beta}.
std::vector<Mat2> manin_decompose(const Cusp& alpha, const Cusp& beta);

// Boundary pushed to Gamma-coinvariants, keyed by the HNF triple (a, b, d).
using HnfKey = std::tuple<Integer, Integer, Integer>;
std::map<HnfKey, HomPoly> boundary_class(const SymbolChain& ch);
bool is_cycle(const SymbolChain& ch);

// C~_{nu,k,j}(tau0, tau1); tau0 and tau1 are given as matrices acting on the
// basepoint.
SymbolChain build_ctilde(int n, const LiftParams& params, const Mat2& tau0, const Mat2& tau1);
// C_nu(tau) = {-1/tau, tau} (x) e_nu
SymbolChain build_cnu(int n, int nu);
SymbolChain build_lift(int n, long p, int nu, long m);

Valuation integrality_report(const SymbolChain& ch, long p);

}  // namespace eisdenom
