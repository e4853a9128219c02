#include "eisdenom/quadfield.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "eisdenom/eis_eval.hpp"
#include "eisdenom/parallel.hpp"

namespace eisdenom {

namespace {

void same_field(const QuadNumber& a, const QuadNumber& b) {
  if (a.D != b.D) throw std::invalid_argument("QuadNumber: different fields");
}

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// x < sqrt(D) and x > sqrt(D) for integer x, D > 0 non-square.
bool lt_sqrt(const Integer& x, const Integer& D) { return x < 0 || x * x < D; }
bool gt_sqrt(const Integer& x, const Integer& D) { return x > 0 && x * x > D; }

}  // namespace

QuadNumber QuadNumber::operator+(const QuadNumber& o) const {
  same_field(*this, o);
  return {x + o.x, y + o.y, D};
}

QuadNumber QuadNumber::operator-(const QuadNumber& o) const {
  same_field(*this, o);
  return {x - o.x, y - o.y, D};
}

QuadNumber QuadNumber::operator*(const QuadNumber& o) const {
  same_field(*this, o);
  return {x * o.x + y * o.y * Rational(D), x * o.y + y * o.x, D};
}

QuadNumber QuadNumber::operator/(const QuadNumber& o) const {
  same_field(*this, o);
  Rational nrm = o.norm();
  if (nrm == 0) throw std::domain_error("QuadNumber: division by zero");
  QuadNumber num = *this * o.conj();
  return {num.x / nrm, num.y / nrm, D};
}

int QuadNumber::sign() const {
  int sx = sgn(x), sy = sgn(y);
  if (sy == 0) return sx;
  if (sx == 0 || sx == sy) return sy;
  // Opposite signs: the larger of x^2 and y^2 D wins.
  Rational x2 = x * x, yD = y * y * Rational(D);
  return x2 > yD ? sx : sy;
}

std::string to_string(const QuadNumber& z) {
  return to_string(z.x) + (z.y < 0 ? " - " : " + ") + to_string(Rational(abs(z.y))) + "*sqrt(" + z.D.get_str() + ")";
}

bool QForm::operator<(const QForm& o) const {
  if (a != o.a) return a < o.a;
  if (b != o.b) return b < o.b;
  return c < o.c;
}

std::string to_string(const QForm& f) {
  std::ostringstream os;
  os << "(" << f.a << "," << f.b << "," << f.c << ")";
  return os.str();
}

HomPoly form_poly(const QForm& f) {
  return HomPoly(2, {Rational(-f.c), Rational(-f.b), Rational(-f.a)});
}

bool is_reduced(const QForm& f) {
  Integer D = f.disc();
  Integer aa = 2 * abs(f.a);
  return f.b > 0 && lt_sqrt(f.b, D) && gt_sqrt(aa + f.b, D) && lt_sqrt(aa - f.b, D);
}

QForm rho(const QForm& f, Mat2* g_out) {
  const Integer D = f.disc();
  const Integer c = f.c;
  const Integer ac = abs(c);
  Integer r;
  if (c * c > D) {
    r = mod_floor(-f.b, 2 * ac);
    if (r > ac) r -= 2 * ac;
  } else {
    Integer s = isqrt(D);
    r = s - mod_floor(s + f.b, 2 * ac);
  }
  Integer shift = (r + f.b) / (2 * c);
  if (g_out) *g_out = Mat2::S() * Mat2::T(shift);
  return {c, r, (r * r - D) / (4 * c)};
}

bool is_valid_discriminant(const Integer& D) {
  if (D <= 0 || is_square(D)) return false;
  Integer r = mod_floor(D, 4);
  return r == 0 || r == 1;
}

QuadOrder QuadOrder::make(const Integer& D) {
  if (!is_valid_discriminant(D)) throw std::domain_error("invalid discriminant " + D.get_str());
  for (Integer f = isqrt(D); f >= 1; --f) {
    if (D % (f * f) != 0) continue;
    Integer D0 = D / (f * f);
    if (is_fundamental_discriminant(D0)) return {D, D0, f};
  }
  throw std::logic_error("QuadOrder: no fundamental discriminant found");
}

namespace {

void check_disc(const Integer& D) {
  if (!is_valid_discriminant(D)) throw std::domain_error("invalid discriminant " + D.get_str());
}

QForm reduce(QForm f, Mat2* g_acc = nullptr) {
  Mat2 G = Mat2::identity();
  for (int guard = 0; !is_reduced(f); ++guard) {
    if (guard > 100000) throw std::logic_error("reduce: no convergence");
    Mat2 g;
    f = rho(f, &g);
    G = G * g;
  }
  if (g_acc) *g_acc = G;
  return f;
}

std::vector<QForm> reduced_forms(const Integer& D) {
  std::vector<QForm> out;
  Integer s = isqrt(D);
  for (Integer b = 1; b <= s; ++b) {
    if ((b * b - D) % 4 != 0) continue;
    Integer m = (D - b * b) / 4;  // -ac > 0
    for (Integer a0 = 1; a0 <= m; ++a0) {
      if (m % a0 != 0) continue;
      for (int sg : {1, -1}) {
        QForm f{a0 * sg, b, -m / (a0 * sg)};
        if (f.primitive() && is_reduced(f)) out.push_back(f);
      }
    }
  }
  return out;
}

std::vector<QForm> cycle_of(const QForm& start, Mat2* automorph = nullptr) {
  std::vector<QForm> cyc{start};
  Mat2 G = Mat2::identity();
  QForm f = start;
  while (true) {
    Mat2 g;
    f = rho(f, &g);
    G = G * g;
    if (f == start) break;
    cyc.push_back(f);
  }
  if (automorph) *automorph = G;
  return cyc;
}

struct ClassTable {
  std::vector<NarrowClass> classes;
  std::map<std::tuple<Integer, Integer, Integer>, size_t> index;
};

const ClassTable& class_table(const Integer& D) {
  static std::mutex mtx;
  static std::map<Integer, std::unique_ptr<ClassTable>> cache;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(D);
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<ClassTable>();
  std::set<QForm> seen;
  for (const auto& f : reduced_forms(D)) {
    if (seen.count(f)) continue;
    auto cyc = cycle_of(f);
    for (const auto& g : cyc) seen.insert(g);
    QForm rep;
    bool have = false;
    for (const auto& g : cyc)
      if (g.a > 0 && (!have || g < rep)) {
        rep = g;
        have = true;
      }
    if (!have) throw std::logic_error("class without a form of positive leading coefficient");
    NarrowClass A = class_from_form(rep);
    table->classes.push_back(std::move(A));
  }
  std::sort(table->classes.begin(), table->classes.end(),
            [](const NarrowClass& x, const NarrowClass& y) { return x.rep < y.rep; });
  for (size_t i = 0; i < table->classes.size(); ++i)
    for (const auto& g : table->classes[i].cycle) table->index[{g.a, g.b, g.c}] = i;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(D);
  if (it == cache.end()) it = cache.emplace(D, std::move(table)).first;
  return *it->second;
}

}  // namespace

std::pair<Integer, Integer> fundamental_unit_tp(const Integer& D) {
  check_disc(D);
  Integer b0 = mod_floor(D, 2);
  QForm principal{1, b0, (b0 * b0 - D) / 4};
  QForm f = reduce(principal);
  Mat2 G;
  cycle_of(f, &G);
  // G is a proper automorph of f: +-[[(t - bu)/2, -cu], [au, (t + bu)/2]].
  Integer t = abs(G.trace());
  Integer u = abs(G.c / f.a);
  if (t * t - D * u * u != 4) throw std::logic_error("fundamental_unit_tp: automorph check failed");
  return {t, u};
}

NarrowClass class_from_basis(const Integer& D, const QuadNumber& alpha1, const QuadNumber& alpha2) {
  check_disc(D);
  if (alpha1.D != D || alpha2.D != D) throw std::invalid_argument("class_from_basis: basis outside Q(sqrt D)");
  QuadNumber delta = alpha1 * alpha2.conj() - alpha1.conj() * alpha2;
  if (delta.x != 0 || delta.y <= 0) throw std::domain_error("class_from_basis: basis is not positively oriented");
  Rational Na = delta.y;
  auto [t, u] = fundamental_unit_tp(D);
  QuadNumber eps{make_rational(t, 2), make_rational(u, 2), D};

  // Coordinates of beta in the basis (alpha1, alpha2).
  Rational det = alpha1.x * alpha2.y - alpha2.x * alpha1.y;
  auto coords = [&](const QuadNumber& beta) {
    Rational s = (beta.x * alpha2.y - alpha2.x * beta.y) / det;
    Rational r = (alpha1.x * beta.y - beta.x * alpha1.y) / det;
    return std::make_pair(s, r);
  };
  auto [g11, g12] = coords(eps * alpha1);
  auto [g21, g22] = coords(eps * alpha2);
  for (const auto* q : {&g11, &g12, &g21, &g22})
    if (!is_integer(*q)) throw std::domain_error("class_from_basis: basis does not span a proper ideal");

  NarrowClass A;
  A.D = D;
  A.alpha1 = alpha1;
  A.alpha2 = alpha2;
  A.t = t;
  A.u = u;
  A.gamma0 = Mat2{g11.get_num(), g12.get_num(), g21.get_num(), g22.get_num()};
  // N = -(1/Na)(alpha2 X1 - alpha1 X2)(alpha2' X1 - alpha1' X2)
  QuadNumber x1x1 = alpha2 * alpha2.conj();
  QuadNumber x1x2 = alpha2 * alpha1.conj() + alpha1 * alpha2.conj();
  QuadNumber x2x2 = alpha1 * alpha1.conj();
  A.N = HomPoly(2, {-x2x2.x / Na, x1x2.x / Na, -x1x1.x / Na});
  A.rep = QForm{-A.N[2].get_num(), -A.N[1].get_num(), -A.N[0].get_num()};
  for (int i = 0; i <= 2; ++i)
    if (!is_integer(A.N[i])) throw std::logic_error("class_from_basis: non-integral norm form");
  if (A.gamma0.det() != 1 || A.gamma0.trace() != t) throw std::logic_error("class_from_basis: bad automorph");
  if (q_gamma(A.gamma0) != A.N) throw std::logic_error("class_from_basis: N differs from Q_gamma0");
  A.cycle = cycle_of(reduce(A.rep));
  std::sort(A.cycle.begin(), A.cycle.end());
  return A;
}

NarrowClass class_from_form(const QForm& f) {
  if (f.a <= 0) throw std::domain_error("class_from_form: leading coefficient must be positive");
  if (!f.primitive()) throw std::domain_error("class_from_form: form must be primitive");
  Integer D = f.disc();
  QuadNumber alpha1{make_rational(-f.b, 2), make_rational(1, 2), D};
  QuadNumber alpha2{Rational(f.a), 0, D};
  return class_from_basis(D, alpha1, alpha2);
}

std::vector<NarrowClass> narrow_classes(const Integer& D) {
  check_disc(D);
  return class_table(D).classes;
}

size_t class_index_of(const QForm& f) {
  const auto& table = class_table(f.disc());
  QForm g = reduce(f);
  auto it = table.index.find({g.a, g.b, g.c});
  if (it == table.index.end()) throw std::logic_error("class_index_of: reduced form not found");
  return it->second;
}

SymbolChain zclass_cycle(const NarrowClass& A, int k) {
  if (k < 2) throw std::domain_error("zclass_cycle: k must be >= 2");
  SymbolChain ch(2 * k - 2);
  ch.add(PointRef::base(), PointRef::formal(A.gamma0), poly_pow(A.N, k - 1));
  return ch;
}

Rational partial_zeta_neg(const NarrowClass& A, int k) {
  if (k < 2) throw std::domain_error("partial_zeta_neg: k must be >= 2");
  NarrowClass inv = class_from_form(QForm{A.rep.a, -A.rep.b, A.rep.c});
  Rational pairing = pair_cycle(eisenstein_cocycle(2 * k - 2), zclass_cycle(inv, k));
  Rational z = zeta_neg(2 * k).value;
  return (k % 2 == 0 ? z : -z) * pairing;
}

HomPoly q_gamma(const Mat2& g) {
  if (!g.is_sl2()) throw std::domain_error("q_gamma: element of SL2(Z) expected");
  if (g.trace() == 0) throw std::domain_error("q_gamma: trace 0 is excluded");
  Integer amd = g.a - g.d;
  Integer h = gcd(gcd(g.c, amd), g.b);
  if (h == 0) throw std::domain_error("q_gamma: +-identity has no fixed form");
  Rational s = make_rational(g.trace() > 0 ? -1 : 1, 1) / Rational(h);
  // s * (c X1^2 - (a-d) X1 X2 - b X2^2)
  return HomPoly(2, {s * Rational(-g.b), s * Rational(-amd), s * Rational(g.c)});
}

Rational rademacher(int k, const Mat2& g) {
  if (k < 2) throw std::domain_error("rademacher: k must be >= 2");
  HomPoly Q = q_gamma(g);
  SymbolChain ch(2 * k - 2);
  ch.add(PointRef::base(), PointRef::formal(g), poly_pow(Q, k - 1));
  return Rational(zeta_neg(2 * k).numerator()) * pair_cycle(eisenstein_cocycle(2 * k - 2), ch);
}

SharpnessWitness sharpness_search(int k, long p, long max_disc) {
  if (k < 2) throw std::domain_error("sharpness_search: k must be >= 2");
  if (!is_prime(p)) throw std::domain_error("sharpness_search: p must be prime");
  std::vector<long> discs;
  for (long D = 5; D <= max_disc; ++D)
    if (is_valid_discriminant(D)) discs.push_back(D);
  const Integer J = zeta_neg(2 * k).denominator();
  const size_t batch = 8 * worker_count();
  for (size_t start = 0; start < discs.size(); start += batch) {
    size_t len = std::min(batch, discs.size() - start);
    std::vector<std::optional<SharpnessWitness>> found(len);
    parallel_for(len, [&](size_t i) {
      Integer D = discs[start + i];
      auto classes = narrow_classes(D);
      for (size_t c = 0; c < classes.size(); ++c) {
        Rational z = partial_zeta_neg(classes[c], k);
        Rational jz = z * Rational(J);
        if (padic_val(jz, p) == 0) {
          found[i] = SharpnessWitness{true, D, c, classes[c].rep, z, jz.get_num()};
          return;
        }
      }
    });
    for (auto& w : found)
      if (w) return *w;
  }
  return SharpnessWitness{};
}

}  // namespace eisdenom
