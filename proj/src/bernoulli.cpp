#include "eisdenom/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace eisdenom {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + o * Rational(-1); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
  std::vector<Rational> r(c_);
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::shift(const Rational& s) const {
  // Horner in the ring Q[x]: acc = acc*(x+s) + c_i.
  UniPoly acc;
  UniPoly lin(std::vector<Rational>{s, 1});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UniPoly({*it});
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::integral() const {
  std::vector<Rational> r(c_.size() + 1);
  for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / static_cast<long>(i + 1);
  return UniPoly(std::move(r));
}

UniPoly monomial(int deg, const Rational& c) {
  std::vector<Rational> r(deg + 1);
  r[deg] = c;
  return UniPoly(std::move(r));
}

namespace {

std::mutex g_bern_mutex;
std::vector<Rational> g_bern_even;  // g_bern_even[k] = B_{2k}

// Tangent numbers T_1..T_N by the in-place integer recurrence; B_{2k} is
// (-1)^(k-1) 2k T_k / (4^k (4^k - 1)).
void extend_bernoulli(long kmax) {
  std::vector<Integer> T(kmax + 1);
  T[1] = 1;
  for (long k = 2; k <= kmax; ++k) T[k] = T[k - 1] * (k - 1);
  for (long k = 2; k <= kmax; ++k)
    for (long j = k; j <= kmax; ++j) T[j] = T[j - 1] * (j - k) + T[j] * (j - k + 2);
  g_bern_even.assign(kmax + 1, Rational(0));
  g_bern_even[0] = 1;
  for (long k = 1; k <= kmax; ++k) {
    Integer four_k = ipow(4, k);
    Integer num = T[k] * (2 * k);
    if (k % 2 == 0) num = -num;
    g_bern_even[k] = make_rational(num, four_k * (four_k - 1));
  }
}

}  // namespace

Rational bernoulli_number(long t) {
  if (t < 0) throw std::domain_error("bernoulli_number: t < 0");
  if (t == 1) return make_rational(-1, 2);
  if (t % 2 == 1) return 0;
  long k = t / 2;
  std::lock_guard<std::mutex> lock(g_bern_mutex);
  if (static_cast<long>(g_bern_even.size()) <= k) {
    long have = static_cast<long>(g_bern_even.size());
    extend_bernoulli(std::max({k, 2 * have, 32L}));
  }
  return g_bern_even[k];
}

UniPoly bernoulli_poly(long t) {
  std::vector<Rational> c(t + 1);
  for (long mu = 0; mu <= t; ++mu) c[mu] = Rational(binomial(t, mu)) * bernoulli_number(t - mu);
  return UniPoly(std::move(c));
}

Rational btilde(long t, const Rational& x) {
  if (t < 1) throw std::domain_error("btilde: t < 1");
  // (B_t(x) - B_t)/t = sum_{mu=1}^{t} binom(t,mu) B_{t-mu} x^mu / t
  Rational acc = 0;
  for (long mu = t; mu >= 1; --mu) {
    acc = acc * x + Rational(binomial(t, mu)) * bernoulli_number(t - mu);
  }
  return acc * x / t;
}

ZetaValue zeta_neg(long m) {
  if (m < 1) throw std::domain_error("zeta_neg: m < 1");
  return ZetaValue{-bernoulli_number(m) / m};
}

int kronecker(const Integer& a, const Integer& n) { return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t()); }

namespace {
bool squarefree(Integer m) {
  m = abs(m);
  for (Integer q = 2; q * q <= m; ++q) {
    if (m % (q * q) == 0) return false;
  }
  return true;
}
}  // namespace

bool is_fundamental_discriminant(const Integer& D) {
  if (D == 0 || D == 1) return false;
  Integer r = mod_floor(D, 4);
  if (r == 1) return squarefree(D);
  if (r != 0) return false;
  Integer m = D / 4;
  Integer r4 = mod_floor(m, 4);
  return (r4 == 2 || r4 == 3) && squarefree(m);
}

Rational gen_bernoulli_quadratic(long k, const Integer& D) {
  if (D <= 0 || !is_fundamental_discriminant(D))
    throw std::domain_error("gen_bernoulli_quadratic: D must be a positive fundamental discriminant");
  UniPoly B = bernoulli_poly(k);
  Rational sum = 0;
  for (Integer a = 1; a <= D; ++a) {
    int chi = kronecker(D, a);
    if (chi == 0) continue;
    sum += Rational(chi) * B(make_rational(a, D));
  }
  return sum * Rational(ipow(D, k - 1));
}

Rational dirichlet_L_neg(long k, const Integer& D) { return -gen_bernoulli_quadratic(k, D) / k; }

}  // namespace eisdenom
