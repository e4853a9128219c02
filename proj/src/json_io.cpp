#include "eisdenom/json_io.hpp"

#include <stdexcept>

namespace eisdenom {

namespace {

Json int_json(const Integer& z) { return z.get_str(); }

Integer int_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  return Integer(j.get<std::string>());
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Mat2& g) { return Json::array({int_json(g.a), int_json(g.b), int_json(g.c), int_json(g.d)}); }

Json to_json(const HomPoly& P) {
  Json coeffs = Json::array();
  for (const auto& c : P.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"weight", P.weight()},
              {"basis", P.basis() == Basis::primary ? "primary" : "dual"},
              {"coeffs", coeffs}};
}

Json to_json(const PointRef& x) {
  if (x.is_cusp()) return x.cusp().a.get_str() + "/" + x.cusp().c.get_str();
  const FormalPoint& f = x.point();
  return Json{{"hnf", Json::array({int_json(f.ha), int_json(f.hb), int_json(f.hd)})}, {"gamma", to_json(f.gamma)}};
}

Json to_json(const SymbolChain& ch) {
  Json terms = Json::array();
  for (const auto& t : ch.terms()) {
    terms.push_back(Json{{"from", to_json(t.from)},
                         {"to", to_json(t.to)},
                         {"poly", to_json(t.poly)},
                         {"coeff", to_json(t.coeff)}});
  }
  return Json{{"weight", ch.weight()}, {"terms", terms}};
}

Json to_json(const DenominatorReport& r) {
  Json rows = Json::array();
  for (const auto& pr : r.per_prime) {
    rows.push_back(Json{{"p", pr.p}, {"delta_p", pr.delta}, {"ord_p_N", pr.ord_N}, {"match", pr.match}});
  }
  return Json{{"n", r.n},
              {"N", int_json(r.N)},
              {"J", int_json(r.J)},
              {"uncovered", int_json(r.uncovered)},
              {"all_match", r.all_match},
              {"per_prime", rows}};
}

Json to_json(const QForm& f) { return Json::array({int_json(f.a), int_json(f.b), int_json(f.c)}); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Mat2 mat2_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("matrix: expected 4 entries");
  return {int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]), int_from_json(j[3])};
}

HomPoly hompoly_from_json(const Json& j) {
  int n = j.at("weight").get<int>();
  std::string tag = j.at("basis").get<std::string>();
  if (tag != "primary" && tag != "dual") throw std::invalid_argument("polynomial: unknown basis " + tag);
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
  return HomPoly(n, std::move(c), tag == "primary" ? Basis::primary : Basis::dual);
}

PointRef point_from_json(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("cusp: expected a/c");
    return Cusp::make(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  }
  const Json& h = j.at("hnf");
  Mat2 H{int_from_json(h.at(0)), int_from_json(h.at(1)), 0, int_from_json(h.at(2))};
  Mat2 g = j.contains("gamma") ? mat2_from_json(j.at("gamma")) : Mat2::identity();
  if (!g.is_sl2()) throw std::invalid_argument("formal point: gamma must lie in SL2(Z)");
  return PointRef::formal(g * H);
}

SymbolChain chain_from_json(const Json& j) {
  SymbolChain ch(j.at("weight").get<int>());
  for (const auto& t : j.at("terms")) {
    ch.add(point_from_json(t.at("from")), point_from_json(t.at("to")), hompoly_from_json(t.at("poly")),
           rational_from_json(t.at("coeff")));
  }
  return ch;
}

}  // namespace eisdenom
