#include "eisdenom/modsym.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eisdenom {

Cusp Cusp::make(const Integer& a, const Integer& c) {
  if (a == 0 && c == 0) throw std::domain_error("Cusp: (0:0) is not a point");
  Integer g = gcd(a, c);
  Integer x = a / g, y = c / g;
  if (y < 0 || (y == 0 && x < 0)) {
    x = -x;
    y = -y;
  }
  return {x, y};
}

Mat2 sign_normalize(const Mat2& g) {
  const Integer* first = g.a != 0 ? &g.a : (g.c != 0 ? &g.c : (g.b != 0 ? &g.b : &g.d));
  return *first < 0 ? -g : g;
}

FormalPoint FormalPoint::from_matrix(const Mat2& M0) {
  if (M0.det() <= 0) throw std::domain_error("FormalPoint: determinant must be positive");
  Integer g0 = gcd(gcd(M0.a, M0.b), gcd(M0.c, M0.d));
  Mat2 M{M0.a / g0, M0.b / g0, M0.c / g0, M0.d / g0};
  // Clear the lower-left entry: rows (x, y; -c/g, a/g) with xa + yc = g.
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), M.a.get_mpz_t(), M.c.get_mpz_t());
  Mat2 ginv{x, y, -M.c / g, M.a / g};
  Mat2 H = ginv * M;
  Mat2 gamma = ginv.inv_sl2();
  // Reduce the upper-right entry into [0, d).
  Integer q = floor_div(H.b, H.d);
  H = Mat2::T(-q) * H;
  gamma = gamma * Mat2::T(q);
  FormalPoint fp;
  fp.ha = H.a;
  fp.hb = H.b;
  fp.hd = H.d;
  fp.gamma = sign_normalize(gamma);
  return fp;
}

namespace {

std::vector<Integer> key_of(const PointRef& x) {
  if (x.is_cusp()) return {0, x.cusp().a, x.cusp().c};
  const auto& f = x.point();
  return {1, f.ha, f.hb, f.hd, f.gamma.a, f.gamma.b, f.gamma.c, f.gamma.d};
}

}  // namespace

bool PointRef::operator<(const PointRef& o) const { return key_of(*this) < key_of(o); }

std::string to_string(const PointRef& x) {
  std::ostringstream os;
  if (x.is_cusp()) {
    if (x.cusp().c == 0) return "oo";
    os << x.cusp().a << "/" << x.cusp().c;
  } else {
    const auto& f = x.point();
    os << to_string(f.gamma) << "*[[" << f.ha << "," << f.hb << "],[0," << f.hd << "]]tau";
  }
  return os.str();
}

PointRef act(const Mat2& g, const PointRef& x) {
  if (g.det() <= 0) throw std::domain_error("act: determinant must be positive");
  if (x.is_cusp()) {
    const auto& c = x.cusp();
    return Cusp::make(g.a * c.a + g.b * c.c, g.c * c.a + g.d * c.c);
  }
  return PointRef::formal(g * x.point().matrix());
}

SymbolChain::SymbolChain(int n) : n_(n) {
  if (n < 0 || n % 2 != 0) throw std::domain_error("SymbolChain: weight must be even and non-negative");
}

void SymbolChain::add(const PointRef& from, const PointRef& to, const HomPoly& poly, const Rational& coeff) {
  if (poly.weight() != n_ || poly.basis() != Basis::primary)
    throw std::invalid_argument("SymbolChain::add: polynomial must be primary of the chain weight");
  if (coeff == 0 || poly.is_zero()) return;
  terms_.push_back({from, to, poly, coeff});
}

void SymbolChain::append(const SymbolChain& o, const Rational& scale) {
  if (o.n_ != n_) throw std::invalid_argument("SymbolChain::append: weight mismatch");
  if (scale == 0) return;
  for (const auto& t : o.terms_) terms_.push_back({t.from, t.to, t.poly, t.coeff * scale});
}

SymbolChain SymbolChain::operator+(const SymbolChain& o) const {
  SymbolChain r(*this);
  r.append(o);
  return r;
}

SymbolChain SymbolChain::operator-(const SymbolChain& o) const {
  SymbolChain r(*this);
  r.append(o, -1);
  return r;
}

SymbolChain SymbolChain::operator*(const Rational& s) const {
  SymbolChain r(n_);
  r.append(*this, s);
  return r;
}

SymbolChain SymbolChain::normalized() const {
  std::map<std::pair<std::vector<Integer>, std::vector<Integer>>, std::pair<std::pair<PointRef, PointRef>, HomPoly>>
      acc;
  for (const auto& t : terms_) {
    PointRef x = t.from, y = t.to;
    Rational c = t.coeff;
    if (y < x) {
      std::swap(x, y);
      c = -c;
    }
    if (x == y) continue;  // {x, x} = 0
    auto key = std::make_pair(key_of(x), key_of(y));
    auto it = acc.find(key);
    if (it == acc.end()) it = acc.emplace(key, std::make_pair(std::make_pair(x, y), HomPoly(n_))).first;
    it->second.second += t.poly * c;
  }
  SymbolChain out(n_);
  for (const auto& [key, val] : acc) out.add(val.first.first, val.first.second, val.second);
  return out;
}

SymbolChain act(const Mat2& g, const SymbolChain& ch) {
  SymbolChain out(ch.weight());
  for (const auto& t : ch.terms()) out.add(act(g, t.from), act(g, t.to), act(g, t.poly), t.coeff);
  return out;
}

SymbolChain hecke_Vp(const SymbolChain& ch, long p) { return act(Mat2::diag(p, 1), ch); }

SymbolChain hecke_Up(const SymbolChain& ch, long p) {
  SymbolChain out(ch.weight());
  for (long j = 0; j < p; ++j) out.append(act(Mat2{1, j, 0, p}, ch));
  return out;
}

SymbolChain hecke_Tp(const SymbolChain& ch, long p) { return hecke_Vp(ch, p) + hecke_Up(ch, p); }

SymbolChain hecke_W(const SymbolChain& ch, long p, long m) {
  if (m < 0) throw std::domain_error("hecke_W: m must be >= 0");
  // V^(m-k) first, then U^k.
  SymbolChain out(ch.weight());
  std::vector<SymbolChain> vpow{ch};
  for (long i = 1; i <= m; ++i) vpow.push_back(hecke_Vp(vpow.back(), p));
  for (long k = 0; k <= m; ++k) {
    SymbolChain term = vpow[m - k];
    for (long i = 0; i < k; ++i) term = hecke_Up(term, p);
    out.append(term);
  }
  return out;
}

Integer hecke_power_coeff(long A, long B) {
  if (A < 0 || B < 0) throw std::domain_error("hecke_power_coeff: negative argument");
  return binomial(A + B, B) - binomial(A + B, B - 1);
}

namespace {

// Pieces for {oo, a/c}, in path order.
std::vector<Mat2> manin_from_infinity(const Cusp& x) {
  std::vector<Mat2> out;
  if (x.c == 0) return out;
  Integer pm1 = 1, qm1 = 0;  // p_{k-1}, q_{k-1}
  Integer pk, qk;
  Integer num = x.a, den = x.c;
  Integer pm2 = 0, qm2 = 1;  // p_{k-2}, q_{k-2}
  while (den != 0) {
    Integer q = floor_div(num, den);
    Integer r = num - q * den;
    pk = q * pm1 + pm2;
    qk = q * qm1 + qm2;
    Mat2 g{pk, pm1, qk, qm1};
    if (g.det() < 0) g = Mat2{-pk, pm1, -qk, qm1};
    out.push_back(sign_normalize(g));
    pm2 = pm1;
    qm2 = qm1;
    pm1 = pk;
    qm1 = qk;
    num = den;
    den = r;
  }
  return out;
}

}  // namespace

std::vector<Mat2> manin_decompose(const Cusp& alpha, const Cusp& beta) {
  if (alpha == beta) return {};
  std::vector<Mat2> out;
  auto back = manin_from_infinity(alpha);
  for (auto it = back.rbegin(); it != back.rend(); ++it) out.push_back(sign_normalize(*it * Mat2::S()));
  auto fwd = manin_from_infinity(beta);
  out.insert(out.end(), fwd.begin(), fwd.end());
  return out;
}

std::map<HnfKey, HomPoly> boundary_class(const SymbolChain& ch) {
  std::map<HnfKey, HomPoly> acc;
  auto push = [&](const PointRef& x, const HomPoly& P, const Rational& c) {
    if (x.is_cusp()) throw std::domain_error("boundary_class: cusp endpoints are not supported");
    const auto& f = x.point();
    HomPoly Q = act(f.gamma.adj(), P) * c;
    HnfKey key{f.ha, f.hb, f.hd};
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, Q);
    } else {
      it->second += Q;
    }
  };
  for (const auto& t : ch.terms()) {
    push(t.to, t.poly, t.coeff);
    push(t.from, t.poly, -t.coeff);
  }
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second.is_zero()) {
      it = acc.erase(it);
    } else {
      ++it;
    }
  }
  return acc;
}

bool is_cycle(const SymbolChain& ch) { return boundary_class(ch).empty(); }

SymbolChain build_ctilde(int n, const LiftParams& lp, const Mat2& tau0, const Mat2& tau1) {
  LiftPolys lift = lift_polys(n, lp);
  Integer pk = ipow(lp.p, lp.k);
  Mat2 g{1, lp.j, 0, pk};
  SymbolChain ch(n);
  ch.add(PointRef::formal(g * Mat2::S() * tau0), PointRef::formal(g * tau1), lift.E1);
  Mat2 x1 = g * tau1;
  ch.add(PointRef::formal(x1), PointRef::formal(Mat2::T() * x1), lift.P1, -1);
  Mat2 x0 = Mat2{ipow(lp.p, lp.l), -lp.d, 0, ipow(lp.p, lp.k - lp.l)} * tau0;
  ch.add(PointRef::formal(x0), PointRef::formal(Mat2::T() * x0), lift.P0, -1);
  return ch;
}

SymbolChain build_cnu(int n, int nu) {
  SymbolChain ch(n);
  ch.add(PointRef::formal(Mat2::S()), PointRef::base(), HomPoly::e(n, nu));
  return ch;
}

SymbolChain build_lift(int n, long p, int nu, long m) {
  if (nu < 1 || nu > n - 1) throw std::domain_error("build_lift: need 1 <= nu <= n-1");
  if (m < 0) throw std::domain_error("build_lift: m must be >= 0");
  SymbolChain out(n);
  for (long A = 0; 2 * A <= m; ++A) {
    Integer outer = hecke_power_coeff(m - A, A) * ipow(p, (n + 1) * A);
    for (long k = 0; k <= m - 2 * A; ++k) {
      long e = m - 2 * A - k;
      Integer pe = ipow(p, e);
      Rational weight(outer * ipow(p, (n - nu) * e));
      Mat2 tau0 = Mat2::diag(1, pe);  // tau / p^e
      Mat2 tau1 = Mat2::diag(pe, 1);  // p^e tau
      Integer pk = ipow(p, k);
      for (Integer j = 0; j < pk; ++j) {
        out.append(build_ctilde(n, make_lift_params(p, nu, k, j), tau0, tau1), weight);
      }
    }
  }
  return out;
}

Valuation integrality_report(const SymbolChain& ch, long p) {
  Valuation m = kInfinity;
  for (const auto& t : ch.terms()) {
    Valuation cv = padic_val(t.coeff, p);
    Valuation pv = min_valuation(t.poly, p);
    if (pv != kInfinity) m = std::min(m, cv + pv);
  }
  return m;
}

}  // namespace eisdenom
