#pragma once

#include <optional>
#include <vector>

#include "eisdenom/modsym.hpp"

namespace eisdenom {

// A 1-cocycle on SL2(Z) with values in the dual module, stored on the
// generators: u = phi(S), v = phi(T).
struct Cocycle {
  int n = 2;
  HomPoly u, v;
};

struct EisCocycle : Cocycle {
  long system_rank = 0;  // rank of the linear system that pinned it
  long kernel_dim = 0;   // equals the coboundary dimension when the class is unique
  long coboundary_dim = 0;
};

Rational D_value(int n, int nu);

const EisCocycle& eisenstein_cocycle(int n);

// Basis of all cocycles (u, v) satisfying the group relations.
std::vector<Cocycle> cocycle_space_basis(int n);
// Coboundary of a dual vector b: g -> g.b - b.
Cocycle coboundary(const HomPoly& b);

HomPoly cocycle_eval(const Cocycle& c, const Mat2& g);
// Same value computed letter by letter from an explicit S/T word; used to
// check independence of the decomposition.
HomPoly cocycle_eval_word(const Cocycle& c, const std::vector<std::pair<char, long>>& word);

Rational pair_cycle(const Cocycle& c, const SymbolChain& ch);
// Pairing of an arbitrary chain with the additive extension F(y) - F(x),
// F(gamma H tau) = phi(gamma). Only meaningful on cycles.
Rational pair_chain_raw(const Cocycle& c, const SymbolChain& ch);

// Equality of chains in the Gamma-coinvariants (MS (x) M_n)_Gamma.
bool homologous(const SymbolChain& a, const SymbolChain& b);

// Per-k summands of the W-series: W^(m) = sum_k p^((n-nu)(m-k)) w_k.
std::vector<Rational> W_terms(int n, long p, int nu, long kmax);
Rational W_series(int n, long p, int nu, long m);
Rational pair_lift(int n, long p, int nu, long m);
// pair_lift for every m in [0, mmax], sharing the W computation.
std::vector<Rational> pair_lift_sequence(int n, long p, int nu, long mmax);
// (1-p^(n+1)) / ((1-p^nu)(1-p^(n-nu))) * D_p(n, nu)
Rational lift_limit(int n, long p, int nu);

Rational Dp_value(int n, int nu, long p);
long delta_p_nu(int n, int nu, long p);
long delta_p(int n, long p);

struct PrimeReport {
  long p = 0;
  long delta = 0;
  Valuation ord_N = 0;
  bool match = false;
};

struct DenominatorReport {
  int n = 0;
  Integer N, J;
  std::vector<PrimeReport> per_prime;
  Integer uncovered = 1;  // part of N supported on primes above the bound
  bool all_match = true;
};

DenominatorReport denominator_eis(int n, long prime_bound);

// psi = phi|T'_p evaluated on g, via the coset matrices diag(p,1), [[1,j],[0,p]].
HomPoly hecke_dual_eval(const Cocycle& c, long p, const Mat2& g);
// Solves (S-1)b = x, (T-1)b = y; returns b when (x, y) is a coboundary.
std::optional<HomPoly> coboundary_preimage(const HomPoly& x, const HomPoly& y);
// True iff phi|T'_p - (1 + p^(n+1)) phi is a coboundary.
bool hecke_eigen_check(int n, long p);

}  // namespace eisdenom
