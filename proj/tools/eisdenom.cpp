// eisdenom: command-line reports over the eisdenom library.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "eisdenom/acceptance.hpp"
#include "eisdenom/eis_eval.hpp"
#include "eisdenom/json_io.hpp"
#include "eisdenom/padic.hpp"
#include "eisdenom/quadfield.hpp"

using namespace eisdenom;

namespace {

constexpr long kMaxM = 720;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A report is a flat set of header fields plus a table of rows.
struct Report {
  std::string command;
  Json params = Json::object();
  Json summary = Json::object();
  Json rows = Json::array();
  bool ok = true;
};

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    Json j{{"schema", 1}, {"command", r.command}, {"params", r.params}, {"summary", r.summary},
           {"rows", r.rows}, {"ok", r.ok}};
    os << j.dump(2) << "\n";
  } else if (format == "csv") {
    if (!r.rows.empty()) {
      bool first = true;
      for (auto it = r.rows[0].begin(); it != r.rows[0].end(); ++it) {
        os << (first ? "" : ",") << csv_escape(it.key());
        first = false;
      }
      os << "\n";
      for (const auto& row : r.rows) {
        first = true;
        for (auto it = row.begin(); it != row.end(); ++it) {
          os << (first ? "" : ",") << csv_escape(cell(it.value()));
          first = false;
        }
        os << "\n";
      }
    } else {
      bool first = true;
      for (auto it = r.summary.begin(); it != r.summary.end(); ++it) {
        os << (first ? "" : ",") << csv_escape(it.key());
        first = false;
      }
      os << "\n";
      first = true;
      for (auto it = r.summary.begin(); it != r.summary.end(); ++it) {
        os << (first ? "" : ",") << csv_escape(cell(it.value()));
        first = false;
      }
      os << "\n";
    }
  } else {
    os << r.command;
    for (auto it = r.params.begin(); it != r.params.end(); ++it) os << " " << it.key() << "=" << cell(it.value());
    os << "\n";
    for (auto it = r.summary.begin(); it != r.summary.end(); ++it)
      os << "  " << it.key() << ": " << cell(it.value()) << "\n";
    for (const auto& row : r.rows) {
      os << "  -";
      for (auto it = row.begin(); it != row.end(); ++it) os << " " << it.key() << "=" << cell(it.value());
      os << "\n";
    }
    os << (r.ok ? "ok" : "FAILED") << "\n";
  }
  return os.str();
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

void check_even_n(int n) { require(n >= 2 && n % 2 == 0, "n must be an even integer >= 2"); }
void check_prime(long p) { require(p >= 2 && is_prime(p), "p must be prime"); }
void check_nu(int n, int nu) { require(nu >= 1 && nu <= n - 1, "nu must satisfy 1 <= nu <= n-1"); }
void check_m(long m) { require(m >= 0 && m <= kMaxM, "m must satisfy 0 <= m <= 720"); }

Mat2 parse_gamma(const std::string& s) {
  std::vector<Integer> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.emplace_back(item);
    } catch (const std::exception&) {
      throw UsageError("gamma: '" + item + "' is not an integer");
    }
  }
  require(v.size() == 4, "gamma must be four comma-separated integers a,b,c,d");
  return {v[0], v[1], v[2], v[3]};
}

Report cmd_zeta(long m) {
  require(m >= 1, "m must be >= 1");
  Report r{"zeta"};
  r.params["m"] = m;
  ZetaValue z = zeta_neg(m);
  r.summary["s"] = 1 - m;
  r.summary["zeta"] = to_string(z.value);
  r.summary["N"] = z.numerator().get_str();
  r.summary["J"] = z.denominator().get_str();
  return r;
}

Report cmd_denominator(int n, long bound) {
  check_even_n(n);
  require(bound >= 2, "prime-bound must be >= 2");
  Report r{"denominator"};
  r.params["n"] = n;
  r.params["prime_bound"] = bound;
  DenominatorReport d = denominator_eis(n, bound);
  Json j = to_json(d);
  r.summary["N"] = j["N"];
  r.summary["J"] = j["J"];
  r.summary["uncovered"] = j["uncovered"];
  r.summary["all_match"] = d.all_match;
  r.rows = j["per_prime"];
  r.ok = d.all_match;
  return r;
}

Report cmd_dp(int n, int nu, long p) {
  check_even_n(n);
  check_nu(n, nu);
  check_prime(p);
  Report r{"dp"};
  r.params["n"] = n;
  r.params["nu"] = nu;
  r.params["p"] = p;
  Rational D = Dp_value(n, nu, p);
  r.summary["D_p"] = to_string(D);
  Valuation v = padic_val(D, p);
  r.summary["ord_p"] = v == kInfinity ? Json("inf") : Json(v);
  r.summary["delta_p_nu"] = delta_p_nu(n, nu, p);
  return r;
}

Report cmd_pair_lift(int n, long p, int nu, long m) {
  check_even_n(n);
  check_prime(p);
  check_nu(n, nu);
  check_m(m);
  Report r{"pair-lift"};
  r.params["n"] = n;
  r.params["p"] = p;
  r.params["nu"] = nu;
  r.params["m"] = m;
  Rational limit = lift_limit(n, p, nu);
  std::vector<Rational> seq = pair_lift_sequence(n, p, nu, m);
  r.summary["limit"] = to_string(limit);
  for (long i = 0; i <= m; ++i) {
    Valuation v = padic_val(seq[i] - limit, p);
    r.rows.push_back(Json{{"m", i},
                          {"pair_lift", to_string(seq[i])},
                          {"ord_p_diff", v == kInfinity ? Json("inf") : Json(v)}});
  }
  return r;
}

Report cmd_rademacher(int k, const Mat2& g) {
  require(k >= 2, "k must be >= 2");
  require(g.is_sl2(), "gamma must have determinant 1");
  require(g.trace() != 0, "gamma must have nonzero trace");
  require(g != Mat2::identity() && g != -Mat2::identity(), "gamma must not be +-identity");
  Report r{"rademacher"};
  r.params["k"] = k;
  r.params["gamma"] = to_json(g);
  Rational psi = rademacher(k, g);
  r.summary["Q_gamma"] = to_json(q_gamma(g))["coeffs"];
  r.summary["psi"] = to_string(psi);
  r.summary["integral"] = is_integer(psi);
  r.ok = is_integer(psi);
  return r;
}

Report cmd_partial_zeta(long D, int k) {
  require(k >= 2, "k must be >= 2");
  require(is_valid_discriminant(D), "disc must be a positive non-square integer = 0,1 mod 4");
  Report r{"partial-zeta"};
  r.params["disc"] = D;
  r.params["k"] = k;
  Integer J = zeta_neg(2 * k).denominator();
  auto classes = narrow_classes(D);
  r.summary["h_plus"] = classes.size();
  r.summary["J"] = J.get_str();
  for (size_t i = 0; i < classes.size(); ++i) {
    Rational z = partial_zeta_neg(classes[i], k);
    Rational Jz = Rational(J) * z;
    r.rows.push_back(Json{{"class", i}, {"form", to_string(classes[i].rep)}, {"value", to_string(z)},
                          {"J_zeta", to_string(Jz)}});
    if (!is_integer(Jz)) r.ok = false;
  }
  return r;
}

Report cmd_sharpness(int k, long p, long max_disc) {
  require(k >= 2, "k must be >= 2");
  check_prime(p);
  require(max_disc >= 5, "max-disc must be >= 5");
  Report r{"sharpness"};
  r.params["k"] = k;
  r.params["p"] = p;
  r.params["max_disc"] = max_disc;
  SharpnessWitness w = sharpness_search(k, p, max_disc);
  r.summary["found"] = w.found;
  if (w.found) {
    r.summary["D"] = w.D.get_str();
    r.summary["class"] = w.class_index;
    r.summary["form"] = to_string(w.form);
    r.summary["zeta"] = to_string(w.zeta);
    r.summary["J_zeta"] = w.J_zeta.get_str();
  }
  return r;
}

Report cmd_lift_verify(int n, long p, int nu, long m, bool dump_chain) {
  check_even_n(n);
  check_prime(p);
  check_nu(n, nu);
  check_m(m);
  Report r{"lift-verify"};
  r.params["n"] = n;
  r.params["p"] = p;
  r.params["nu"] = nu;
  r.params["m"] = m;
  SymbolChain ch = build_lift(n, p, nu, m);
  bool cyc = is_cycle(ch);
  Valuation v = integrality_report(ch, p);
  r.summary["terms"] = ch.size();
  r.summary["is_cycle"] = cyc;
  r.summary["min_valuation"] = v == kInfinity ? Json("inf") : Json(v);
  r.summary["pairing"] = to_string(pair_cycle(eisenstein_cocycle(n), ch));
  r.summary["closed_form"] = to_string(pair_lift(n, p, nu, m));
  r.ok = cyc && (m < n || v >= 0) && r.summary["pairing"] == r.summary["closed_form"];
  if (dump_chain) r.summary["chain"] = to_json(ch);
  return r;
}

Report cmd_irregular(long max_p) {
  require(max_p >= 5, "max-p must be >= 5");
  Report r{"irregular"};
  r.params["max_p"] = max_p;
  for (long p : primes_up_to(max_p)) {
    if (p < 5) continue;
    bool ok = skula_bound_ok(p);
    r.rows.push_back(Json{{"p", p}, {"d", irregular_index(p)}, {"skula_bound", ok}});
    if (!ok) r.ok = false;
  }
  return r;
}

int emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eisenstein class denominators, p-adic lifts, Rademacher symbols and partial zeta values"};
  app.require_subcommand(0, 1);
  std::string format = "text", out;
  bool selftest = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out, "Write the report to this file");
  app.add_flag("--selftest", selftest, "Run the acceptance suite and print a pass/fail matrix");

  long m = 1, prime_bound = 1000, p = 2, max_disc = 400, disc = 5, max_p = 100;
  int n = 2, nu = 1, k = 2;
  std::string gamma;
  bool dump_chain = false;

  auto* zeta = app.add_subcommand("zeta", "zeta(1-m) with numerator and denominator");
  zeta->add_option("--m", m, "m >= 1")->required();

  auto* den = app.add_subcommand("denominator", "Denominator of the Eisenstein class with per-prime check");
  den->add_option("--n", n, "even weight parameter")->required();
  den->add_option("--prime-bound", prime_bound, "largest prime checked");

  auto* dp = app.add_subcommand("dp", "D_p(n, nu) and its defect");
  dp->add_option("--n", n)->required();
  dp->add_option("--nu", nu)->required();
  dp->add_option("--p", p)->required();

  auto* pl = app.add_subcommand("pair-lift", "Pairings of the lifted Hecke cycles for m' = 0..m");
  pl->add_option("--n", n)->required();
  pl->add_option("--p", p)->required();
  pl->add_option("--nu", nu)->required();
  pl->add_option("--m", m)->required();

  auto* rad = app.add_subcommand("rademacher", "Higher Rademacher symbol Psi_k(gamma)");
  rad->add_option("--k", k)->required();
  rad->add_option("--gamma", gamma, "a,b,c,d")->required();

  auto* pz = app.add_subcommand("partial-zeta", "Partial zeta values zeta(A, 1-k) over narrow classes");
  pz->add_option("--disc", disc)->required();
  pz->add_option("--k", k)->required();

  auto* sh = app.add_subcommand("sharpness", "First class with ord_p(J_2k zeta(A,1-k)) = 0");
  sh->add_option("--k", k)->required();
  sh->add_option("--p", p)->required();
  sh->add_option("--max-disc", max_disc);

  auto* lv = app.add_subcommand("lift-verify", "Build the lifted cycle and check cycle, integrality and pairing");
  lv->add_option("--n", n)->required();
  lv->add_option("--p", p)->required();
  lv->add_option("--m", m)->required();
  lv->add_option("--nu", nu);
  lv->add_flag("--dump-chain", dump_chain, "Include the chain in the report");

  auto* irr = app.add_subcommand("irregular", "Index of irregularity and the Skula bound");
  irr->add_option("--max-p", max_p)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (selftest) {
    auto results = run_acceptance();
    bool ok = true;
    for (const auto& r : results) ok = ok && r.pass;
    int rc = emit(format_results(results), out);
    return rc ? rc : (ok ? 0 : 1);
  }
  if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }

  try {
    Report r;
    if (*zeta) r = cmd_zeta(m);
    else if (*den) r = cmd_denominator(n, prime_bound);
    else if (*dp) r = cmd_dp(n, nu, p);
    else if (*pl) r = cmd_pair_lift(n, p, nu, m);
    else if (*rad) r = cmd_rademacher(k, parse_gamma(gamma));
    else if (*pz) r = cmd_partial_zeta(disc, k);
    else if (*sh) r = cmd_sharpness(k, p, max_disc);
    else if (*lv) r = cmd_lift_verify(n, p, nu, m, dump_chain);
    else if (*irr) r = cmd_irregular(max_p);
    int rc = emit(render(r, format), out);
    return rc ? rc : (r.ok ? 0 : 1);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
