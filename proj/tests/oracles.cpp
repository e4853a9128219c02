#include "oracles.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace oracle {

std::vector<Rational> bernoulli_recurrence(long t) {
  std::vector<Rational> B{Rational(1)};
  for (long m = 1; m <= t; ++m) {
    Rational s = 0;
    Integer binom = 1;  // binom(m+1, j)
    for (long j = 0; j < m; ++j) {
      s += Rational(binom) * B[j];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B.push_back(-s / Rational(m + 1));
  }
  return B;
}

Rational bernoulli_poly_eval(long t, const Rational& x) {
  auto B = bernoulli_recurrence(t);
  Rational s = 0, xp = 1;
  Integer binom = 1;  // binom(t, mu)
  for (long mu = 0; mu <= t; ++mu) {
    s += Rational(binom) * B[t - mu] * xp;
    xp *= x;
    binom = binom * (t - mu) / (mu + 1);
  }
  return s;
}

Integer power_sum(long x, long e) {
  Integer s = 0;
  for (long j = 0; j < x; ++j) {
    Integer pw = 1;
    for (long i = 0; i < e; ++i) pw *= j;
    s += pw;
  }
  return s;
}

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

long powmod(long b, long e, long m) {
  long r = 1 % m;
  b = mod(b, m);
  while (e > 0) {
    if (e & 1) r = static_cast<long>((__int128)r * b % m);
    b = static_cast<long>((__int128)b * b % m);
    e >>= 1;
  }
  return r;
}

int chi_prime(long D, long p) {
  if (p == 2) {
    if (D % 2 == 0) return 0;
    long r = mod(D, 8);
    return (r == 1 || r == 7) ? 1 : -1;
  }
  long a = mod(D, p);
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace

int kronecker(long D, long n) {
  if (n <= 0) throw std::domain_error("oracle::kronecker: n must be positive");
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      r *= chi_prime(D, p);
      n /= p;
    }
  }
  if (n > 1) r *= chi_prime(D, n);
  return r;
}

Rational gen_bernoulli(long k, long D) {
  Rational s = 0;
  for (long a = 1; a <= D; ++a) {
    int c = kronecker(D, a);
    if (!c) continue;
    Rational x(a, D);
    x.canonicalize();
    s += Rational(c) * bernoulli_poly_eval(k, x);
  }
  Rational Dk = 1;
  for (long i = 0; i < k - 1; ++i) Dk *= D;
  return Dk * s;
}

long valuation(const Rational& q, long p) {
  if (q == 0) throw std::domain_error("oracle::valuation: zero");
  Integer num = abs(q.get_num()), den = q.get_den();
  long v = 0;
  while (num % p == 0) num /= p, ++v;
  while (den % p == 0) den /= p, --v;
  return v;
}

namespace {

// Fundamental solution of x^2 - d y^2 = 1 from the continued fraction of sqrt(d).
std::pair<Integer, Integer> pell1(const Integer& d) {
  Integer a0 = sqrt(d);
  Integer m = 0, den = 1, a = a0;
  Integer p0 = 1, p1 = a0, q0 = 0, q1 = 1;
  while (p1 * p1 - d * q1 * q1 != 1) {
    m = den * a - m;
    den = (d - m * m) / den;
    a = (a0 + m) / den;
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    p0 = p1, p1 = p2, q0 = q1, q1 = q2;
  }
  return {p1, q1};
}

}  // namespace

std::pair<Integer, Integer> pell4(long D) {
  if (D % 4 == 0) {
    auto [x, y] = pell1(Integer(D / 4));
    return {2 * x, y};
  }
  // D = 1 mod 4: the minimal unit (t + u sqrt D)/2 is x + y sqrt D or its cube root.
  auto [x, y] = pell1(Integer(D));
  // Cube: y = u (D u^2 + 3) / 2, increasing in u.
  Integer lo = 1, hi = y;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (mid * (D * mid * mid + 3) / 2 < y) lo = mid + 1;
    else hi = mid;
  }
  Integer u = lo, t2 = D * u * u + 4;
  if (u * (D * u * u + 3) == 2 * y && mpz_perfect_square_p(t2.get_mpz_t())) return {sqrt(t2), u};
  return {2 * x, 2 * y};
}

long narrow_class_number(long D) {
  // Reduced in the sense a > 0, c > 0, b > a + c; each proper class holds one
  // cycle of such forms under [a,b,c] -> [c, 2cn - b, a - bn + c n^2].
  using Form = std::tuple<long, long, long>;
  auto reduced = [](long a, long b, long c) { return a > 0 && c > 0 && b > a + c; };
  std::set<Form> all;
  for (long b = 1; b <= (D + 1) / 2 + 1; ++b) {
    if (mod(b * b - D, 4) != 0) continue;
    long ac = (b * b - D) / 4;
    if (ac <= 0) continue;
    for (long a = 1; a <= ac; ++a) {
      if (ac % a) continue;
      long c = ac / a;
      if (!reduced(a, b, c)) continue;
      long g = std::gcd(std::gcd(a, b), c);
      if (g == 1) all.insert({a, b, c});
    }
  }
  long cycles = 0;
  std::set<Form> seen;
  for (const auto& f : all) {
    if (seen.count(f)) continue;
    ++cycles;
    Form cur = f;
    while (!seen.count(cur)) {
      seen.insert(cur);
      auto [a, b, c] = cur;
      bool moved = false;
      for (long n = 1; n < 4 * D + 4; ++n) {
        long b2 = 2 * c * n - b, c2 = a - b * n + c * n * n;
        if (reduced(c, b2, c2)) {
          cur = {c, b2, c2};
          moved = true;
          break;
        }
      }
      if (!moved) throw std::runtime_error("oracle::narrow_class_number: no successor");
    }
  }
  return cycles;
}

}  // namespace oracle
