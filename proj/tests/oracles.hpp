// Independent reference computations used by the unit tests.
#pragma once

#include <vector>

#include "eisdenom/rational.hpp"

namespace oracle {

using eisdenom::Integer;
using eisdenom::Rational;

// B_0..B_t from sum_{j<=m} binom(m+1, j) B_j = 0.
std::vector<Rational> bernoulli_recurrence(long t);
// B_t(x) from the binomial expansion with recurrence numbers.
Rational bernoulli_poly_eval(long t, const Rational& x);
// sum_{j=0}^{x-1} j^e
Integer power_sum(long x, long e);
// Kronecker symbol (D/n) for D = 0,1 mod 4 by factoring n.
int kronecker(long D, long n);
// D^(k-1) sum_{a=1}^{D} chi_D(a) B_k(a/D)
Rational gen_bernoulli(long k, long D);
// ord_p of a nonzero rational by repeated division.
long valuation(const Rational& q, long p);
// t, u > 0 minimal with t^2 - D u^2 = 4 by brute force over u.
std::pair<Integer, Integer> pell4(long D);
// Number of SL2(Z)-classes of primitive forms of discriminant D via reduced-form cycles,
// computed by a plain orbit search on (a, b, c) with |a|, |c| <= D.
long narrow_class_number(long D);

}  // namespace oracle
