#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace eisdenom {

using Integer = mpz_class;
// mpq_class keeps itself canonical through arithmetic; only raw construction
// from a numerator/denominator pair needs an explicit canonicalize().
using Rational = mpq_class;

using Valuation = long;
inline constexpr Valuation kInfinity = std::numeric_limits<long>::max();

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// "a/b" in lowest terms, "a" for integers.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

bool is_integer(const Rational& q);

Valuation padic_val(const Integer& z, const Integer& p);
Valuation padic_val(const Rational& q, const Integer& p);
inline Valuation padic_val(const Rational& q, long p) { return padic_val(q, Integer(p)); }

Integer binomial(long n, long k);
Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, long e);

bool is_prime(const Integer& n);
std::vector<long> primes_up_to(long bound);

// Floor of the square root for n >= 0.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

// Floor division and non-negative remainder.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);

long to_long(const Integer& z);

}  // namespace eisdenom
