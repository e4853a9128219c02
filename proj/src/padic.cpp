#include "eisdenom/padic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "eisdenom/bernoulli.hpp"

namespace eisdenom {

namespace {

Valuation sat_add(Valuation a, Valuation b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

void same_prime(const PadicApprox& a, const PadicApprox& b) {
  if (a.p != b.p) throw std::invalid_argument("PadicApprox: prime mismatch");
}

}  // namespace

std::string PadicInt::to_string() const {
  std::ostringstream os;
  os << residue << " + O(" << p << "^" << r << ")";
  return os.str();
}

PadicInt make_padic(const Integer& x, long p, long r) {
  if (r < 1) throw std::domain_error("PadicInt: precision must be positive");
  return {p, r, mod_floor(x, ipow(p, r))};
}

PadicInt teichmuller(const Integer& a, long p, long r) {
  if (p < 3 || !is_prime(p)) throw std::domain_error("teichmuller: p must be an odd prime");
  if (r < 1) throw std::domain_error("teichmuller: precision must be positive");
  if (a % p == 0) throw std::domain_error("teichmuller: p divides a");
  Integer mod = ipow(p, r);
  Integer e = ipow(p, r - 1);
  Integer base = mod_floor(a, mod);
  Integer out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return {p, r, out};
}

Valuation PadicApprox::valuation() const {
  Valuation v = padic_val(value, p);
  if (v < abs_prec) return v;
  if (is_exact()) return v;
  throw PrecisionError("valuation hidden by O(p^" + std::to_string(abs_prec) + ")");
}

bool PadicApprox::in_pkZp(long k) const {
  Valuation v = padic_val(value, p);
  if (abs_prec >= k) return v >= k;
  if (v < abs_prec) return false;
  throw PrecisionError("membership in p^" + std::to_string(k) + "Z_p needs more precision than O(p^" +
                       std::to_string(abs_prec) + ")");
}

PadicApprox PadicApprox::operator+(const PadicApprox& o) const {
  same_prime(*this, o);
  return {p, value + o.value, std::min(abs_prec, o.abs_prec)};
}

PadicApprox PadicApprox::operator-(const PadicApprox& o) const { return *this + (-o); }

PadicApprox PadicApprox::operator*(const PadicApprox& o) const {
  same_prime(*this, o);
  Valuation va = std::min(padic_val(value, p), abs_prec);
  Valuation vb = std::min(padic_val(o.value, p), o.abs_prec);
  Valuation prec = std::min({sat_add(va, o.abs_prec), sat_add(vb, abs_prec), sat_add(abs_prec, o.abs_prec)});
  return {p, value * o.value, prec};
}

PadicApprox PadicApprox::operator/(const PadicApprox& o) const {
  same_prime(*this, o);
  if (o.value == 0) throw PrecisionError("division by an approximation of zero");
  Valuation vb = o.valuation();
  PadicApprox inv{p, 1 / o.value, o.is_exact() ? kInfinity : o.abs_prec - 2 * vb};
  return *this * inv;
}

PadicApprox Lp_neg(long m, long a, long p, long r) {
  if (m < 1) throw std::domain_error("Lp_neg: m must be >= 1");
  if (p < 3 || !is_prime(p)) throw std::domain_error("Lp_neg: p must be an odd prime");
  if (r < 1) throw std::domain_error("Lp_neg: precision must be positive");
  const long q = p - 1;
  const long e = ((a - m) % q + q) % q;
  if (e == 0) {
    Rational val = Rational(1 - ipow(p, m - 1)) * zeta_neg(m).value;
    return PadicApprox::exact(val, p);
  }
  // eta = omega^e has conductor p, so the Euler factor is 1 and
  // L(1-m, eta) = -B_{m,eta}/m, B_{m,eta} = p^(m-1) sum_c eta(c) B_m(c/p).
  const long om = padic_val(Integer(m), Integer(p));
  const long R = r + 2 + om;
  const Integer mod = ipow(p, R);
  UniPoly Bm = bernoulli_poly(m);
  Rational pm1(ipow(p, m - 1));
  Rational sum = 0;
  Valuation min_term = kInfinity;
  for (long c = 1; c < p; ++c) {
    Integer w = teichmuller(c, p, R).residue;
    Integer eta;
    Integer ee(e);
    mpz_powm(eta.get_mpz_t(), w.get_mpz_t(), ee.get_mpz_t(), mod.get_mpz_t());
    Rational X = pm1 * Bm(make_rational(Integer(c), Integer(p)));
    min_term = std::min(min_term, padic_val(X, p));
    sum += Rational(eta) * X;
  }
  Valuation prec = (min_term == kInfinity ? 0 : min_term) + R - om;
  return {p, -sum / m, prec};
}

namespace {

CongruenceResult run_check(const std::function<bool()>& f) {
  try {
    bool ok = f();
    return {ok, ok ? "holds" : "fails"};
  } catch (const PrecisionError& e) {
    return {false, std::string("precision exhausted: ") + e.what()};
  }
}

}  // namespace

CongruenceResult congruence_cor_case1(long x, long y, long p, long r) {
  if (x < 1 || y < 1) throw std::domain_error("case1: x, y must be positive");
  if (x % (p - 1) == 0) throw std::domain_error("case1: needs x != 0 mod (p-1)");
  return run_check([&] {
    PadicApprox A = Lp_neg(x, x, p, r);
    PadicApprox B = Lp_neg(y, 0, p, r);
    PadicApprox C = Lp_neg(x + y, x, p, r);
    // Multiply the membership through by L(1-x-y, w^x).
    return (A * B - B * C).in_Zp();
  });
}

CongruenceResult congruence_cor_case2(long x, long y, long p, long r) {
  if (x < 1 || y < 1) throw std::domain_error("case2: x, y must be positive");
  return run_check([&] {
    PadicApprox X = Lp_neg(x, 0, p, r);
    PadicApprox Y = Lp_neg(y, 0, p, r);
    PadicApprox Z = Lp_neg(x + y, 0, p, r);
    PadicApprox Q = X * Y / Z;
    // Pole term R(s) = -(p-1)/(ps) of L_p(1-s, 1).
    PadicApprox R = PadicApprox::exact(-make_rational(p - 1, p * x) - make_rational(p - 1, p * y), p);
    return (Q - R).in_Zp() && (Q - X - Y).in_Zp();
  });
}

long irregular_index(long p) {
  if (p < 5 || !is_prime(p)) throw std::domain_error("irregular_index: p must be a prime >= 5");
  long d = 0;
  for (long t = 2; t <= p - 3; t += 2) {
    if (padic_val(bernoulli_number(t), p) >= 1) ++d;
  }
  return d;
}

namespace {

// log(y) for rational 1 <= y < 2 via 2 atanh((y-1)/(y+1)).
RationalInterval log_small(const Rational& y, int terms) {
  Rational z = (y - 1) / (y + 1);
  Rational z2 = z * z;
  Rational pw = z;
  Rational s = 0;
  for (int i = 0; i < terms; ++i) {
    s += pw / (2 * i + 1);
    pw *= z2;
  }
  Rational tail = pw / (Rational(2 * terms + 1) * (1 - z2));
  return {2 * s, 2 * (s + tail)};
}

}  // namespace

RationalInterval log_enclosure(long x, int terms) {
  if (x < 1) throw std::domain_error("log_enclosure: x must be >= 1");
  if (x == 1) return {0, 0};
  RationalInterval l2 = log_small(Rational(2), terms);  // z = 1/3
  long k = 0;
  while ((2L << k) <= x) ++k;  // 2^k <= x < 2^(k+1)
  RationalInterval ly = log_small(make_rational(Integer(x), ipow(2, k)), terms);
  return {l2.lo * k + ly.lo, l2.hi * k + ly.hi};
}

bool skula_bound_ok(long p) {
  if (p < 5 || !is_prime(p)) throw std::domain_error("skula_bound_ok: p must be a prime >= 5");
  // The bound is smallest when log2/logp is largest, so use its upper end.
  RationalInterval l2 = log_enclosure(2), lp = log_enclosure(p);
  Rational ratio_hi = l2.hi / lp.lo;
  Rational bound_lo = make_rational(p + 3, 4) - ratio_hi * make_rational(p - 1, 4);
  return Rational(irregular_index(p)) < bound_lo;
}

}  // namespace eisdenom
