#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "eisdenom/modsym.hpp"

namespace eisdenom {

using Complex = std::complex<double>;

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated q-expansion of E_{n+2}: c_0 = 1, c_k = 2 sigma_{n+1}(k) / zeta(-1-n).
struct QSeries {
  int n = 2;
  long T = 0;
  std::vector<Rational> c;

  int weight() const { return n + 2; }
  Complex operator()(Complex z) const;
  // Upper bound for |sum_{k>T} c_k q^k| at Im z >= y.
  double tail_bound(double y) const;

 private:
  friend QSeries eisenstein_q(int n, long T);
  std::vector<double> cd_;
};

QSeries eisenstein_q(int n, long T);

struct NumericValue {
  Complex value;
  double error = 0;        // quadrature refinement difference plus truncation tail
  double min_height = 0;   // lowest Im over the integration paths
};

// Default generic basepoint with Im > 1.
inline const Complex kDefaultTau{0.21, 1.13};

// Position of a formal point for the basepoint tau. Cusps are rejected.
Complex point_value(const PointRef& x, Complex tau);

// Integral of E(z) P(z,1) dz along the straight segment z0 -> z1.
NumericValue integrate_segment(const QSeries& E, const HomPoly& P, Complex z0, Complex z1, double tol);

// Sum of the segment integrals of a chain. Meaningful (tau-independent) on cycles.
NumericValue numeric_pair_chain(const SymbolChain& ch, Complex tau = kDefaultTau, long T = 150,
                                double tol = 1e-10);

// Integral from tau to g tau of E_{n+2}(z) P(z,1) dz. Throws NumericError when
// the estimated error exceeds tol.
NumericValue numeric_pair(int n, const Mat2& g, const HomPoly& P, Complex tau = kDefaultTau,
                          long T = 150, double tol = 1e-10);

struct DesignatedIntegral {
  std::string name;
  Rational exact;
  NumericValue numeric;
  double abs_diff = 0;
  bool ok = false;
};

// The fixed oracle suite compared against the exact evaluators at tolerance tol.
std::vector<DesignatedIntegral> designated_integrals(long T = 150, double tol = 1e-8,
                                                     Complex tau = kDefaultTau);

}  // namespace eisdenom
