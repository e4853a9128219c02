#include "eisdenom/sympoly.hpp"

#include <sstream>
#include <stdexcept>

namespace eisdenom {

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inv_sl2() const {
  if (!is_sl2()) throw std::domain_error("inv_sl2: determinant is not 1");
  return adj();
}

std::string to_string(const Mat2& g) {
  std::ostringstream os;
  os << "[[" << g.a << "," << g.b << "],[" << g.c << "," << g.d << "]]";
  return os.str();
}

HomPoly::HomPoly(int n, Basis basis) : n_(n), basis_(basis), c_(n + 1, Rational(0)) {
  if (n < 0) throw std::domain_error("HomPoly: negative weight");
}

HomPoly::HomPoly(int n, std::vector<Rational> coeffs, Basis basis) : n_(n), basis_(basis), c_(std::move(coeffs)) {
  if (n < 0) throw std::domain_error("HomPoly: negative weight");
  if (static_cast<int>(c_.size()) != n + 1) throw std::invalid_argument("HomPoly: need n+1 coefficients");
}

HomPoly HomPoly::e(int n, int nu) {
  HomPoly P(n, Basis::primary);
  P.c_.at(nu) = 1;
  return P;
}

HomPoly HomPoly::e_flat(int n, int nu) {
  HomPoly P(n, Basis::dual);
  P.c_.at(nu) = 1;
  return P;
}

bool HomPoly::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

void HomPoly::check_compatible(const HomPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("HomPoly: weight mismatch");
  if (basis_ != o.basis_) throw std::invalid_argument("HomPoly: basis mismatch");
}

HomPoly& HomPoly::operator+=(const HomPoly& o) {
  check_compatible(o);
  for (int i = 0; i <= n_; ++i) c_[i] += o.c_[i];
  return *this;
}

HomPoly& HomPoly::operator-=(const HomPoly& o) {
  check_compatible(o);
  for (int i = 0; i <= n_; ++i) c_[i] -= o.c_[i];
  return *this;
}

HomPoly& HomPoly::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool HomPoly::operator==(const HomPoly& o) const { return n_ == o.n_ && basis_ == o.basis_ && c_ == o.c_; }

std::string to_string(const HomPoly& P) {
  std::ostringstream os;
  os << (P.basis() == Basis::primary ? "M" : "M*") << P.weight() << "[";
  for (int i = 0; i <= P.weight(); ++i) os << (i ? ", " : "") << to_string(P[i]);
  os << "]";
  return os.str();
}

namespace {

using IVec = std::vector<Integer>;

IVec mul_ivec(const IVec& x, const IVec& y) {
  IVec r(x.size() + y.size() - 1, Integer(0));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  }
  return r;
}

}  // namespace

std::vector<std::vector<Integer>> action_matrix(const Mat2& g, int n) {
  // Linear forms as X1-degree coefficient vectors: dX1 - bX2 and -cX1 + aX2.
  IVec L1{-g.b, g.d};
  IVec L2{g.a, -g.c};
  std::vector<IVec> pw1(n + 1), pw2(n + 1);
  pw1[0] = pw2[0] = IVec{Integer(1)};
  for (int i = 1; i <= n; ++i) {
    pw1[i] = mul_ivec(pw1[i - 1], L1);
    pw2[i] = mul_ivec(pw2[i - 1], L2);
  }
  std::vector<std::vector<Integer>> A(n + 1, std::vector<Integer>(n + 1, Integer(0)));
  for (int mu = 0; mu <= n; ++mu) {
    IVec col = mul_ivec(pw1[mu], pw2[n - mu]);
    for (int r = 0; r <= n; ++r) A[r][mu] = col[r];
  }
  return A;
}

HomPoly act(const Mat2& g, const HomPoly& P) {
  if (g.det() <= 0) throw std::domain_error("act: determinant must be positive");
  const int n = P.weight();
  HomPoly out(n, P.basis());
  if (P.basis() == Basis::primary) {
    auto A = action_matrix(g, n);
    for (int mu = 0; mu <= n; ++mu) {
      if (P[mu] == 0) continue;
      for (int r = 0; r <= n; ++r)
        if (A[r][mu] != 0) out[r] += P[mu] * A[r][mu];
    }
  } else {
    auto A = action_matrix(g.adj(), n);
    for (int mu = 0; mu <= n; ++mu) {
      Rational s = 0;
      for (int r = 0; r <= n; ++r)
        if (A[r][mu] != 0 && P[r] != 0) s += P[r] * A[r][mu];
      out[mu] = s;
    }
  }
  return out;
}

Rational pair_dual(const HomPoly& dual, const HomPoly& primary) {
  if (dual.basis() != Basis::dual || primary.basis() != Basis::primary)
    throw std::invalid_argument("pair_dual: expects (dual, primary)");
  if (dual.weight() != primary.weight()) throw std::invalid_argument("pair_dual: weight mismatch");
  Rational s = 0;
  for (int i = 0; i <= dual.weight(); ++i)
    if (dual[i] != 0 && primary[i] != 0) s += dual[i] * primary[i];
  return s;
}

HomPoly poly_mul(const HomPoly& P, const HomPoly& Q) {
  if (P.basis() != Basis::primary || Q.basis() != Basis::primary)
    throw std::invalid_argument("poly_mul: primary polynomials only");
  HomPoly R(P.weight() + Q.weight());
  for (int i = 0; i <= P.weight(); ++i) {
    if (P[i] == 0) continue;
    for (int j = 0; j <= Q.weight(); ++j) R[i + j] += P[i] * Q[j];
  }
  return R;
}

HomPoly poly_pow(const HomPoly& P, int k) {
  if (k < 0) throw std::domain_error("poly_pow: negative exponent");
  HomPoly R(0, std::vector<Rational>{Rational(1)});
  for (int i = 0; i < k; ++i) R = poly_mul(R, P);
  return R;
}

UniPoly dehomogenize(const HomPoly& P) { return UniPoly(P.coeffs()); }

HomPoly dual_to_monomials(const HomPoly& dual) {
  if (dual.basis() != Basis::dual) throw std::invalid_argument("dual_to_monomials: dual input expected");
  const int n = dual.weight();
  HomPoly out(n);
  for (int mu = 0; mu <= n; ++mu) {
    Rational w(binomial(n, mu));
    if (mu % 2) w = -w;
    out[mu] = dual[n - mu] * w;
  }
  return out;
}

HomPoly dual_from_monomials(const HomPoly& poly) {
  if (poly.basis() != Basis::primary) throw std::invalid_argument("dual_from_monomials: monomial input expected");
  const int n = poly.weight();
  HomPoly out(n, Basis::dual);
  for (int mu = 0; mu <= n; ++mu) {
    Rational w(binomial(n, mu));
    if (mu % 2) w = -w;
    out[n - mu] = poly[mu] / w;
  }
  return out;
}

namespace {
void check_dagger_input(const HomPoly& P) {
  if (P.basis() != Basis::primary) throw std::invalid_argument("dagger: primary polynomial expected");
  if (P[P.weight()] != 0) throw std::domain_error("dagger: X1^n coefficient must vanish");
}
}  // namespace

HomPoly dagger(const HomPoly& P) {
  check_dagger_input(P);
  const int n = P.weight();
  HomPoly out(n);
  for (int mu = 0; mu < n; ++mu) {
    if (P[mu] == 0) continue;
    Rational s = P[mu] / (mu + 1);
    for (int i = 1; i <= mu + 1; ++i) out[i] += s * Rational(binomial(mu + 1, i)) * bernoulli_number(mu + 1 - i);
  }
  return out;
}

HomPoly ddagger(const HomPoly& P) {
  check_dagger_input(P);
  const int n = P.weight();
  HomPoly out(n);
  for (int mu = 0; mu < n; ++mu) {
    if (P[mu] == 0) continue;
    Rational s = P[mu] / (mu + 1);
    out[mu + 1] += s;
    out[0] -= s * bernoulli_number(mu + 1);
  }
  return out;
}

LiftParams make_lift_params(long p, long nu, long k, const Integer& j) {
  if (!is_prime(p)) throw std::domain_error("LiftParams: p must be prime");
  if (k < 0) throw std::domain_error("LiftParams: k must be >= 0");
  Integer pk = ipow(p, k);
  if (j < 0 || j >= pk) throw std::domain_error("LiftParams: need 0 <= j < p^k");
  LiftParams lp;
  lp.p = p;
  lp.nu = nu;
  lp.k = k;
  lp.j = j;
  lp.l = (j == 0) ? k : std::min<long>(padic_val(j, Integer(p)), k);
  lp.jprime = j / ipow(p, lp.l);
  long N = k - lp.l;
  if (N > 0) {
    Integer pN = ipow(p, N);
    Integer dd;
    if (mpz_invert(dd.get_mpz_t(), lp.jprime.get_mpz_t(), pN.get_mpz_t()) == 0)
      throw std::logic_error("LiftParams: j' not invertible");
    lp.d = mod_floor(dd, pN);
    lp.b = (lp.jprime * lp.d - 1) / pN;
  } else {
    lp.d = 0;
    lp.b = -1;
  }
  return lp;
}

LiftPolys lift_polys(int n, const LiftParams& lp) {
  if (lp.nu < 1 || lp.nu > n - 1) throw std::domain_error("lift_polys: need 1 <= nu <= n-1");
  const long nu = lp.nu;
  Integer pk = ipow(lp.p, lp.k);
  Integer pl = ipow(lp.p, lp.l);
  Integer pkl = ipow(lp.p, lp.k - lp.l);
  LiftPolys out{HomPoly(n), HomPoly(n), HomPoly(n), HomPoly(n)};
  for (long i = 0; i <= nu; ++i) {
    out.E1[i] = Rational(binomial(nu, i) * ipow(pk, i) * ipow(-lp.j, nu - i));
  }
  Integer lead = ipow(pl, nu);
  if (nu % 2 == 0) lead = -lead;  // (-1)^(nu+1)
  for (long i = 0; i <= n - nu; ++i) {
    out.E0[i] = Rational(lead * binomial(n - nu, i) * ipow(pkl, i) * ipow(lp.d, n - nu - i));
  }
  out.P1 = dagger(out.E1);
  out.P0 = dagger(out.E0);
  return out;
}

Valuation min_valuation(const HomPoly& P, long p) {
  Valuation m = kInfinity;
  for (const auto& x : P.coeffs()) m = std::min(m, padic_val(x, p));
  return m;
}

}  // namespace eisdenom
