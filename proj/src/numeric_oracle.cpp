#include "eisdenom/numeric_oracle.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "eisdenom/eis_eval.hpp"
#include "eisdenom/parallel.hpp"
#include "eisdenom/quadfield.hpp"

namespace eisdenom {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

class KahanSum {
 public:
  void add(Complex x) {
    Complex y = x - comp_;
    Complex t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  Complex value() const { return sum_; }

 private:
  Complex sum_{0, 0}, comp_{0, 0};
};

// 10-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
constexpr std::array<double, 5> kGLx = {0.1488743389816312108848260, 0.4333953941292471907992659,
                                        0.6794095682990244062343274, 0.8650633666889845107320967,
                                        0.9739065285171717200779640};
constexpr std::array<double, 5> kGLw = {0.2955242247147528701738930, 0.2692667193099963550912269,
                                        0.2190863625159820439955349, 0.1494513491505805931457763,
                                        0.0666713443086881375935688};

Integer sigma(long k, long e) {
  Integer s = 0;
  for (long d = 1; d * d <= k; ++d) {
    if (k % d) continue;
    s += ipow(d, e);
    if (d * d != k) s += ipow(k / d, e);
  }
  return s;
}

Complex eval_poly(const std::vector<double>& coeffs, Complex z) {
  Complex r{0, 0};
  for (size_t i = coeffs.size(); i-- > 0;) r = r * z + coeffs[i];
  return r;
}

Complex gl_panels(const QSeries& E, const std::vector<double>& P, Complex z0, Complex z1, long panels) {
  Complex h = (z1 - z0) / static_cast<double>(panels);
  KahanSum acc;
  for (long i = 0; i < panels; ++i) {
    Complex mid = z0 + h * (i + 0.5);
    Complex half = h * 0.5;
    for (size_t j = 0; j < kGLx.size(); ++j) {
      for (double s : {-1.0, 1.0}) {
        Complex z = mid + half * (s * kGLx[j]);
        acc.add(half * kGLw[j] * E(z) * eval_poly(P, z));
      }
    }
  }
  return acc.value();
}

double max_abs_poly(const std::vector<double>& P, Complex z0, Complex z1) {
  double m = 0;
  for (int i = 0; i <= 16; ++i) m = std::max(m, std::abs(eval_poly(P, z0 + (z1 - z0) * (i / 16.0))));
  return m;
}

}  // namespace

QSeries eisenstein_q(int n, long T) {
  if (n < 2 || n % 2) throw std::domain_error("eisenstein_q: n must be even and >= 2");
  if (T < 1) throw std::domain_error("eisenstein_q: T must be >= 1");
  QSeries E;
  E.n = n;
  E.T = T;
  Rational scale = Rational(2) / zeta_neg(n + 2).value;
  E.c.reserve(T + 1);
  E.c.push_back(1);
  for (long k = 1; k <= T; ++k) E.c.push_back(scale * Rational(sigma(k, n + 1)));
  E.cd_.reserve(E.c.size());
  for (const auto& x : E.c) E.cd_.push_back(x.get_d());
  return E;
}

Complex QSeries::operator()(Complex z) const {
  Complex q = std::exp(Complex(0, kTwoPi) * z);
  Complex qk{1, 0};
  KahanSum acc;
  for (size_t k = 0; k < cd_.size(); ++k) {
    acc.add(cd_[k] * qk);
    qk *= q;
  }
  return acc.value();
}

double QSeries::tail_bound(double y) const {
  // sigma_{n+1}(k) <= zeta(n+1) k^(n+1) <= 2 k^(n+1)
  Rational s = Rational(2) / zeta_neg(n + 2).value;
  double scale = std::abs(s.get_d());
  double total = 0;
  for (long k = T + 1; k < T + 100000; ++k) {
    double term = 2 * scale * std::exp((n + 1) * std::log(double(k)) - kTwoPi * k * y);
    total += term;
    if (k > T + 10 && term < 1e-30 * (total + 1e-300)) break;
  }
  return total;
}

Complex point_value(const PointRef& x, Complex tau) {
  if (x.is_cusp()) throw NumericError("point_value: cusps are not integrable endpoints");
  Mat2 M = x.point().matrix();
  return (M.a.get_d() * tau + M.b.get_d()) / (M.c.get_d() * tau + M.d.get_d());
}

NumericValue integrate_segment(const QSeries& E, const HomPoly& P, Complex z0, Complex z1, double tol) {
  if (P.weight() != E.n) throw std::domain_error("integrate_segment: weight mismatch");
  if (P.basis() != Basis::primary) throw std::domain_error("integrate_segment: primary polynomial expected");
  std::vector<double> Pd;
  for (const auto& c : P.coeffs()) Pd.push_back(c.get_d());
  double ymin = std::min(z0.imag(), z1.imag());
  if (!(ymin > 0)) throw NumericError("integrate_segment: path leaves the upper half plane");

  NumericValue out;
  out.min_height = ymin;
  long panels = std::max<long>(2, static_cast<long>(std::ceil(4 * std::abs(z1 - z0) / ymin)));
  Complex coarse = gl_panels(E, Pd, z0, z1, panels);
  for (int it = 0; it < 12; ++it) {
    panels *= 2;
    Complex fine = gl_panels(E, Pd, z0, z1, panels);
    double diff = std::abs(fine - coarse);
    coarse = fine;
    if (diff < tol * 1e-2 || it == 11) {
      out.value = fine;
      out.error = diff;
      break;
    }
  }
  out.error += std::abs(z1 - z0) * max_abs_poly(Pd, z0, z1) * E.tail_bound(ymin);
  return out;
}

NumericValue numeric_pair_chain(const SymbolChain& ch, Complex tau, long T, double tol) {
  if (!(tau.imag() > 0)) throw std::domain_error("numeric_pair_chain: Im tau must be positive");
  QSeries E = eisenstein_q(ch.weight(), T);
  const auto& terms = ch.terms();
  std::vector<NumericValue> parts(terms.size());
  parallel_for(terms.size(), [&](size_t i) {
    const Term& t = terms[i];
    parts[i] = integrate_segment(E, t.poly, point_value(t.from, tau), point_value(t.to, tau), tol);
  });
  NumericValue out;
  out.min_height = std::numeric_limits<double>::infinity();
  KahanSum acc;
  for (size_t i = 0; i < terms.size(); ++i) {
    double w = terms[i].coeff.get_d();
    acc.add(w * parts[i].value);
    out.error += std::abs(w) * parts[i].error;
    out.min_height = std::min(out.min_height, parts[i].min_height);
  }
  out.value = acc.value();
  return out;
}

NumericValue numeric_pair(int n, const Mat2& g, const HomPoly& P, Complex tau, long T, double tol) {
  if (!g.is_sl2()) throw std::domain_error("numeric_pair: element of SL2(Z) expected");
  if (act(g, P) != P) throw std::domain_error("numeric_pair: {tau, g tau} (x) P is not a cycle");
  SymbolChain ch(n);
  ch.add(PointRef::base(), PointRef::formal(g), P);
  NumericValue v = numeric_pair_chain(ch, tau, T, tol);
  if (v.error > tol) throw NumericError("numeric_pair: estimated error " + std::to_string(v.error) +
                                        " exceeds tolerance");
  return v;
}

std::vector<DesignatedIntegral> designated_integrals(long T, double tol, Complex tau) {
  struct Case {
    std::string name;
    SymbolChain chain;
    Rational exact;
  };
  std::vector<Case> cases;
  auto ctilde = [](int n, int nu) {
    return build_ctilde(n, make_lift_params(2, nu, 0, 0), Mat2::identity(), Mat2::identity());
  };
  auto rad_chain = [](int k, const Mat2& g) {
    SymbolChain ch(2 * k - 2);
    ch.add(PointRef::base(), PointRef::formal(g), poly_pow(q_gamma(g), k - 1));
    return ch;
  };

  {
    SymbolChain ch(2);
    ch.add(PointRef::base(), PointRef::formal(Mat2::T()), HomPoly::e(2, 0));
    cases.push_back({"translation n=2", ch, Rational(1)});
  }
  cases.push_back({"C~_1 n=2", ctilde(2, 1), D_value(2, 1)});
  cases.push_back({"C~_1 n=4", ctilde(4, 1), D_value(4, 1)});
  cases.push_back({"C~_3 n=4", ctilde(4, 3), D_value(4, 3)});
  cases.push_back({"C~_1 n=6", ctilde(6, 1), D_value(6, 1)});
  cases.push_back({"C~_5 n=10", ctilde(10, 5), D_value(10, 5)});
  {
    Mat2 g{2, 1, 1, 1};
    cases.push_back({"Rademacher k=2 [[2,1],[1,1]]", rad_chain(2, g),
                     rademacher(2, g) / Rational(zeta_neg(4).numerator())});
    Mat2 h{4, 3, 1, 1};
    cases.push_back({"Rademacher k=3 [[4,3],[1,1]]", rad_chain(3, h),
                     rademacher(3, h) / Rational(zeta_neg(6).numerator())});
  }
  cases.push_back({"W^(1) lift n=2 p=2 nu=1", build_lift(2, 2, 1, 1), W_series(2, 2, 1, 1)});
  {
    NarrowClass A = narrow_classes(5).front();
    NarrowClass inv = class_from_form(QForm{A.rep.a, -A.rep.b, A.rep.c});
    Rational z = zeta_neg(4).value;  // zeta(-3), k = 2
    cases.push_back({"partial zeta D=5 k=2", zclass_cycle(inv, 2), partial_zeta_neg(A, 2) / z});
  }

  std::vector<DesignatedIntegral> out(cases.size());
  for (size_t i = 0; i < cases.size(); ++i) {
    DesignatedIntegral& r = out[i];
    r.name = cases[i].name;
    r.exact = cases[i].exact;
    r.numeric = numeric_pair_chain(cases[i].chain, tau, T, tol * 1e-2);
    r.abs_diff = std::abs(r.numeric.value - Complex(r.exact.get_d(), 0));
    r.ok = r.abs_diff < tol;
  }
  return out;
}

}  // namespace eisdenom
