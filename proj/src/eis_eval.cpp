#include "eisdenom/eis_eval.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "eisdenom/linalg.hpp"

namespace eisdenom {

namespace {

void check_nu(int n, int nu) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("weight n must be even and >= 2");
  if (nu < 1 || nu > n - 1) throw std::domain_error("need 1 <= nu <= n-1");
}

// Matrix of the dual action of g on dual coordinates.
RMatrix dual_matrix(const Mat2& g, int n) {
  auto A = action_matrix(g.adj(), n);
  RMatrix D(n + 1, RVector(n + 1));
  for (int mu = 0; mu <= n; ++mu)
    for (int r = 0; r <= n; ++r) D[mu][r] = Rational(A[r][mu]);
  return D;
}

RMatrix mat_mul(const RMatrix& X, const RMatrix& Y) {
  size_t k = Y.size(), m = Y[0].size();
  RMatrix Z(X.size(), RVector(m));
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t t = 0; t < k; ++t) {
      if (X[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) Z[i][j] += X[i][t] * Y[t][j];
    }
  return Z;
}

RMatrix identity(int size) {
  RMatrix I(size, RVector(size));
  for (int i = 0; i < size; ++i) I[i][i] = 1;
  return I;
}

RMatrix mat_add(const RMatrix& X, const RMatrix& Y) {
  RMatrix Z = X;
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < X[i].size(); ++j) Z[i][j] += Y[i][j];
  return Z;
}

// Rows of the relations (1+S)u = 0 and (1+U+U^2)(u + S v) = 0 in the
// unknowns (u_0..u_n, v_0..v_n).
RMatrix relation_rows(int n) {
  const int sz = n + 1;
  RMatrix DS = dual_matrix(Mat2::S(), n);
  RMatrix DU = dual_matrix(Mat2::S() * Mat2::T(), n);
  RMatrix M = mat_add(mat_add(identity(sz), DU), mat_mul(DU, DU));
  RMatrix MS = mat_mul(M, DS);
  RMatrix rows;
  RMatrix onePlusS = mat_add(identity(sz), DS);
  for (int i = 0; i < sz; ++i) {
    RVector r(2 * sz);
    for (int j = 0; j < sz; ++j) r[j] = onePlusS[i][j];
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < sz; ++i) {
    RVector r(2 * sz);
    for (int j = 0; j < sz; ++j) {
      r[j] = M[i][j];
      r[sz + j] = MS[i][j];
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

Cocycle cocycle_from_vector(int n, const RVector& x) {
  Cocycle c;
  c.n = n;
  c.u = HomPoly(n, RVector(x.begin(), x.begin() + n + 1), Basis::dual);
  c.v = HomPoly(n, RVector(x.begin() + n + 1, x.end()), Basis::dual);
  return c;
}

long coboundary_rank(int n) {
  const int sz = n + 1;
  RMatrix DS = dual_matrix(Mat2::S(), n);
  RMatrix DT = dual_matrix(Mat2::T(), n);
  RMatrix B(2 * sz, RVector(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      B[i][j] = DS[i][j] - (i == j ? 1 : 0);
      B[sz + i][j] = DT[i][j] - (i == j ? 1 : 0);
    }
  return matrix_rank(B);
}

EisCocycle solve_eisenstein(int n) {
  const int sz = n + 1;
  RMatrix rows = relation_rows(n);
  RVector rhs(rows.size());
  {
    RVector r(2 * sz);
    r[sz + 0] = 1;  // <v, e_0> = 1
    rows.push_back(r);
    rhs.push_back(1);
  }
  for (int nu = 1; nu <= n - 1; ++nu) {
    LiftPolys lp = lift_polys(n, make_lift_params(2, nu, 0, 0));
    HomPoly P = lp.P1 + lp.P0;
    RVector r(2 * sz);
    r[nu] = -1;
    for (int i = 0; i < sz; ++i) r[sz + i] = -P[i];
    rows.push_back(r);
    rhs.push_back(D_value(n, nu));
  }
  LinearSolution sol = solve_linear(rows, rhs);
  if (!sol.consistent) throw std::logic_error("eisenstein_cocycle: inconsistent linear system");
  EisCocycle c;
  static_cast<Cocycle&>(c) = cocycle_from_vector(n, sol.x);
  c.system_rank = sol.rank;
  c.kernel_dim = static_cast<long>(sol.kernel.size());
  c.coboundary_dim = coboundary_rank(n);
  return c;
}

// phi(T^q) via power sums: (T^i c)_mu = sum_{r<=mu} binom(mu,r) i^(mu-r) c_r.
HomPoly phi_T_power(const Cocycle& c, const Integer& q) {
  const int n = c.n;
  if (q == 0) return HomPoly(n, Basis::dual);
  if (q < 0) return -act(Mat2::T(q), phi_T_power(c, -q));
  Rational Q(q);
  std::vector<Rational> S(n + 1);
  for (int e = 0; e <= n; ++e) S[e] = btilde(e + 1, Q);
  HomPoly out(n, Basis::dual);
  for (int mu = 0; mu <= n; ++mu) {
    Rational s = 0;
    for (int r = 0; r <= mu; ++r)
      if (c.v[r] != 0) s += Rational(binomial(mu, r)) * S[mu - r] * c.v[r];
    out[mu] = s;
  }
  return out;
}

}  // namespace

Rational D_value(int n, int nu) {
  check_nu(n, nu);
  Rational a = zeta_at(-nu), b = zeta_at(nu - n), c = zeta_at(-1 - n);
  return a * b / c - a - b;
}

const EisCocycle& eisenstein_cocycle(int n) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("eisenstein_cocycle: n must be even and >= 2");
  static std::mutex mtx;
  static std::map<int, std::unique_ptr<EisCocycle>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, std::make_unique<EisCocycle>(solve_eisenstein(n))).first;
  return *it->second;
}

std::vector<Cocycle> cocycle_space_basis(int n) {
  RMatrix rows = relation_rows(n);
  LinearSolution sol = solve_linear(rows, RVector(rows.size()));
  std::vector<Cocycle> out;
  for (const auto& k : sol.kernel) out.push_back(cocycle_from_vector(n, k));
  return out;
}

Cocycle coboundary(const HomPoly& b) {
  if (b.basis() != Basis::dual) throw std::invalid_argument("coboundary: dual vector expected");
  Cocycle c;
  c.n = b.weight();
  c.u = act(Mat2::S(), b) - b;
  c.v = act(Mat2::T(), b) - b;
  return c;
}

HomPoly cocycle_eval(const Cocycle& c, const Mat2& g0) {
  if (!g0.is_sl2()) throw std::domain_error("cocycle_eval: element of SL2(Z) expected");
  HomPoly acc(c.n, Basis::dual);
  Mat2 prefix = Mat2::identity();
  Mat2 g = g0;
  // Invariant: phi(g0) = acc + prefix . phi(g).
  while (g.c != 0) {
    // g = T^q S g'' with g'' = S^-1 T^-q g; |a - q c| < |c| makes progress.
    Integer q = floor_div(g.a, g.c);
    HomPoly step = phi_T_power(c, q) + act(Mat2::T(q), c.u);
    acc += act(prefix, step);
    prefix = prefix * Mat2::T(q) * Mat2::S();
    Mat2 r = Mat2::T(-q) * g;
    g = Mat2{r.c, r.d, -r.a, -r.b};
  }
  // g = +-T^b; phi(-h) = phi(h) because phi(-I) = 0.
  Integer b = g.a > 0 ? g.b : -g.b;
  acc += act(prefix, phi_T_power(c, b));
  return acc;
}

HomPoly cocycle_eval_word(const Cocycle& c, const std::vector<std::pair<char, long>>& word) {
  HomPoly acc(c.n, Basis::dual);
  Mat2 prefix = Mat2::identity();
  for (const auto& [letter, e] : word) {
    Mat2 g;
    HomPoly val(c.n, Basis::dual);
    if (letter == 'T') {
      g = Mat2::T(e);
      val = phi_T_power(c, e);
    } else if (letter == 'S') {
      long r = ((e % 4) + 4) % 4;
      g = Mat2::identity();
      for (long i = 0; i < r; ++i) g = g * Mat2::S();
      // phi(S^r): 0, u, 0, u for r = 0..3
      if (r % 2 == 1) val = c.u;
    } else {
      throw std::invalid_argument("cocycle_eval_word: letters are S and T");
    }
    acc += act(prefix, val);
    prefix = prefix * g;
  }
  return acc;
}

Rational pair_chain_raw(const Cocycle& c, const SymbolChain& ch) {
  if (ch.weight() != c.n) throw std::invalid_argument("pair_cycle: weight mismatch");
  std::map<std::vector<Integer>, HomPoly> memo;
  auto F = [&](const PointRef& x) -> const HomPoly& {
    if (x.is_cusp()) throw std::domain_error("pair_cycle: cusp endpoints are not supported");
    const Mat2& g = x.point().gamma;
    std::vector<Integer> key{g.a, g.b, g.c, g.d};
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, cocycle_eval(c, g)).first;
    return it->second;
  };
  Rational s = 0;
  for (const auto& t : ch.terms()) {
    s += t.coeff * (pair_dual(F(t.to), t.poly) - pair_dual(F(t.from), t.poly));
  }
  return s;
}

Rational pair_cycle(const Cocycle& c, const SymbolChain& ch) {
  if (!is_cycle(ch)) throw std::domain_error("pair_cycle: chain is not a cycle");
  return pair_chain_raw(c, ch);
}

bool homologous(const SymbolChain& a, const SymbolChain& b) {
  SymbolChain diff = a - b;
  if (!is_cycle(diff)) return false;
  for (const auto& c : cocycle_space_basis(a.weight()))
    if (pair_chain_raw(c, diff) != 0) return false;
  return true;
}

std::vector<Rational> W_terms(int n, long p, int nu, long kmax) {
  check_nu(n, nu);
  const Rational ratio = zeta_at(-nu) * zeta_at(nu - n) / zeta_at(-1 - n);
  const Integer P(p);
  const Rational one_minus_pn1 = Rational(1 - ipow(P, n + 1));
  const Integer p_nnu = ipow(P, n - nu);
  const long sign_nu = (nu % 2 == 0) ? 1 : -1;
  auto B = [](long t) { return bernoulli_number(t); };

  std::vector<Rational> out;
  for (long k = 0; k <= kmax; ++k) {
    const Rational pk(ipow(P, k));
    // Main analytic term.
    Rational W1 = (Rational(1 - ipow(P, (n + 1) * (k + 1))) - Rational(1 - ipow(P, (n + 1) * k)) * Rational(p_nnu)) /
                  one_minus_pn1 * ratio;
    // j-sum of E1^ddagger(j/p^k, 1).
    Rational W2 = Rational(sign_nu) / (nu + 1) / pk * btilde(nu + 2, pk);
    for (int mu = 0; mu <= nu; ++mu) {
      Rational t = Rational(binomial(nu, mu)) * rpow(pk, mu) * B(mu + 1) / (mu + 1) * btilde(nu - mu + 1, pk);
      if (mu % 2 == 1) t = -t;
      W2 += Rational(-sign_nu) * t;
    }
    // j-sum of E0^ddagger(-d/p^(k-l), 1); j = 0 contributes the isolated term.
    Rational W3 = 0;
    {
      Rational s = 0;
      for (long lp = 0; lp < k; ++lp) {
        Rational hi(ipow(P, k - lp)), lo(ipow(P, k - lp - 1));
        s += rpow(Rational(P), lp * (nu + 1)) *
             (btilde(n - nu + 2, hi) - Rational(ipow(P, n - nu + 1)) * btilde(n - nu + 2, lo));
      }
      W3 += Rational(sign_nu) / (n - nu + 1) / pk * s;
    }
    W3 += Rational(sign_nu) * rpow(pk, nu) * B(n - nu + 1) / (n - nu + 1);
    for (int mu = 0; mu <= n - nu; ++mu) {
      Rational inner = 0;
      for (long lp = 0; lp < k; ++lp) {
        Rational hi(ipow(P, k - lp)), lo(ipow(P, k - lp - 1));
        inner += rpow(Rational(P), lp * (nu - mu)) *
                 (btilde(n - nu - mu + 1, hi) - Rational(ipow(P, n - nu - mu)) * btilde(n - nu - mu + 1, lo));
      }
      W3 += Rational(sign_nu) * Rational(binomial(n - nu, mu)) * rpow(pk, mu) * B(mu + 1) / (mu + 1) * inner;
    }
    out.push_back(W1 - W2 - W3);
  }
  return out;
}

namespace {
std::vector<Rational> W_sequence(int n, long p, int nu, long mmax) {
  auto w = W_terms(n, p, nu, mmax);
  Rational f(ipow(p, n - nu));
  std::vector<Rational> W(mmax + 1);
  for (long m = 0; m <= mmax; ++m) W[m] = (m ? W[m - 1] * f : Rational(0)) + w[m];
  return W;
}
}  // namespace

Rational W_series(int n, long p, int nu, long m) {
  if (m < 0) throw std::domain_error("W_series: m must be >= 0");
  return W_sequence(n, p, nu, m)[m];
}

std::vector<Rational> pair_lift_sequence(int n, long p, int nu, long mmax) {
  if (mmax < 0) throw std::domain_error("pair_lift: m must be >= 0");
  auto W = W_sequence(n, p, nu, mmax);
  std::vector<Rational> out(mmax + 1);
  for (long m = 0; m <= mmax; ++m) {
    Rational s = 0;
    for (long A = 0; 2 * A <= m; ++A)
      s += Rational(hecke_power_coeff(m - A, A) * ipow(p, (n + 1) * A)) * W[m - 2 * A];
    out[m] = s;
  }
  return out;
}

Rational pair_lift(int n, long p, int nu, long m) { return pair_lift_sequence(n, p, nu, m)[m]; }

Rational Dp_value(int n, int nu, long p) {
  check_nu(n, nu);
  if (!is_prime(p)) throw std::domain_error("Dp_value: p must be prime");
  Integer P(p);
  Rational L1 = Rational(1 - ipow(P, nu)) * zeta_at(-nu);
  Rational L2 = Rational(1 - ipow(P, n - nu)) * zeta_at(nu - n);
  Rational L3 = Rational(1 - ipow(P, n + 1)) * zeta_at(-1 - n);
  return L1 * L2 / L3 - L1 - L2;
}

Rational lift_limit(int n, long p, int nu) {
  Integer P(p);
  return Rational(1 - ipow(P, n + 1)) / (Rational(1 - ipow(P, nu)) * Rational(1 - ipow(P, n - nu))) *
         Dp_value(n, nu, p);
}

long delta_p_nu(int n, int nu, long p) {
  Valuation v = padic_val(Dp_value(n, nu, p), p);
  if (v == kInfinity || v >= 0) return 0;
  return -v;
}

long delta_p(int n, long p) {
  long m = 0;
  for (int nu = 1; nu <= n - 1; ++nu) m = std::max(m, delta_p_nu(n, nu, p));
  return m;
}

DenominatorReport denominator_eis(int n, long prime_bound) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("denominator_eis: n must be even and >= 2");
  DenominatorReport rep;
  rep.n = n;
  ZetaValue z = zeta_neg(n + 2);
  rep.N = z.numerator();
  rep.J = z.denominator();
  Integer rest = rep.N;
  for (long p : primes_up_to(prime_bound)) {
    PrimeReport pr;
    pr.p = p;
    pr.delta = delta_p(n, p);
    pr.ord_N = padic_val(rep.N, Integer(p));
    pr.match = (pr.delta == pr.ord_N);
    rep.all_match = rep.all_match && pr.match;
    rest /= ipow(p, pr.ord_N);
    rep.per_prime.push_back(pr);
  }
  rep.uncovered = rest;
  return rep;
}

HomPoly hecke_dual_eval(const Cocycle& c, long p, const Mat2& g) {
  HomPoly out(c.n, Basis::dual);
  auto add = [&](const Mat2& delta) {
    FormalPoint fp = FormalPoint::from_matrix(delta * g);
    out += act(delta.adj(), cocycle_eval(c, fp.gamma));
  };
  add(Mat2::diag(p, 1));
  for (long j = 0; j < p; ++j) add(Mat2{1, j, 0, p});
  return out;
}

std::optional<HomPoly> coboundary_preimage(const HomPoly& x, const HomPoly& y) {
  const int n = x.weight();
  const int sz = n + 1;
  RMatrix DS = dual_matrix(Mat2::S(), n);
  RMatrix DT = dual_matrix(Mat2::T(), n);
  RMatrix A(2 * sz, RVector(sz));
  RVector rhs(2 * sz);
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      A[i][j] = DS[i][j] - (i == j ? 1 : 0);
      A[sz + i][j] = DT[i][j] - (i == j ? 1 : 0);
    }
    rhs[i] = x[i];
    rhs[sz + i] = y[i];
  }
  LinearSolution sol = solve_linear(A, rhs);
  if (!sol.consistent) return std::nullopt;
  return HomPoly(n, sol.x, Basis::dual);
}

bool hecke_eigen_check(int n, long p) {
  const EisCocycle& c = eisenstein_cocycle(n);
  Rational lambda(1 + ipow(p, n + 1));
  HomPoly x = hecke_dual_eval(c, p, Mat2::S()) - c.u * lambda;
  HomPoly y = hecke_dual_eval(c, p, Mat2::T()) - c.v * lambda;
  auto b = coboundary_preimage(x, y);
  if (!b) return false;
  Cocycle cb = coboundary(*b);
  return cb.u == x && cb.v == y;
}

}  // namespace eisdenom
