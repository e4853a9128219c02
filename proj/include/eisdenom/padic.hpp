#pragma once

#include <stdexcept>
#include <string>

#include "eisdenom/rational.hpp"

namespace eisdenom {

struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Residue class modulo p^r.
struct PadicInt {
  long p = 0;
  long r = 0;
  Integer residue = 0;
  bool operator==(const PadicInt& o) const { return p == o.p && r == o.r && residue == o.residue; }
  std::string to_string() const;
};

PadicInt make_padic(const Integer& x, long p, long r);
PadicInt teichmuller(const Integer& a, long p, long r);

// value + p^abs_prec Z_p; abs_prec == kInfinity marks an exact rational.
struct PadicApprox {
  long p = 0;
  Rational value = 0;
  Valuation abs_prec = kInfinity;

  static PadicApprox exact(const Rational& q, long p) { return {p, q, kInfinity}; }
  bool is_exact() const { return abs_prec == kInfinity; }
  // Throws PrecisionError if the valuation is hidden by the error term.
  Valuation valuation() const;
  // Membership in p^k Z_p, decided at the available precision.
  bool in_pkZp(long k) const;
  bool in_Zp() const { return in_pkZp(0); }

  PadicApprox operator+(const PadicApprox& o) const;
  PadicApprox operator-(const PadicApprox& o) const;
  PadicApprox operator*(const PadicApprox& o) const;
  PadicApprox operator/(const PadicApprox& o) const;
  PadicApprox operator-() const { return {p, -value, abs_prec}; }
};

// L_p(1-m, omega^a) for m >= 1, p >= 3. Exact when a = m mod (p-1), otherwise
// correct modulo p^r.
PadicApprox Lp_neg(long m, long a, long p, long r = 6);

struct CongruenceResult {
  bool holds = false;
  std::string detail;
};

// L(1-x,w^x) L(1-y,1) / L(1-x-y,w^x) in L(1-y,1) + Z_p / L(1-x-y,w^x)
CongruenceResult congruence_cor_case1(long x, long y, long p, long r = 6);
// L(1-x,1) L(1-y,1) / L(1-x-y,1) = -(p-1)/(px) - (p-1)/(py) = L(1-x,1) + L(1-y,1) mod Z_p
CongruenceResult congruence_cor_case2(long x, long y, long p, long r = 6);

long irregular_index(long p);

struct RationalInterval {
  Rational lo, hi;
};
// Rigorous rational enclosure of log(x) for an integer x >= 1.
RationalInterval log_enclosure(long x, int terms = 40);
bool skula_bound_ok(long p);

}  // namespace eisdenom
