#pragma once

#include <string>
#include <vector>

#include "dpow/graph.hpp"
#include "dpow/kernels.hpp"
#include "dpow/rational.hpp"

namespace dpow {

enum class DensityMethod { brute, optimized };

struct DensityReport {
  Rational value;
  std::vector<int> witness;  // sorted, >= 2 vertices
  DensityMethod method = DensityMethod::brute;
};

/// Default vertex cap for the exhaustive scans (2^20 subsets).
inline constexpr int kDefaultBruteCap = 20;

/// e_G / (v_G - 1).
Rational one_density(const Graph& g);
/// Induced edge count of a vertex subset.
std::int64_t induced_edges(const Graph& g, const std::vector<int>& vertices);

/// Maximum 1-density over induced subgraphs on >= 2 vertices. Ties go to the
/// smallest witness, then the lexicographically least one.
DensityReport max_density_brute(const Graph& g, int cap = kDefaultBruteCap, Exec exec = Exec::parallel);

/// Same value as max_density_brute, no vertex cap: Dinkelbach iteration on
/// lambda = p/q, each step a max-closure min-cut on the edge-selection
/// network with one vertex forced in (which rules out |S| < 2).
DensityReport max_density_opt(const Graph& g);

struct BalanceReport {
  bool strictly_balanced = false;
  Rational whole;                 // d_G
  Rational best_proper;           // max d_H over proper induced H, v_H >= 2
  std::vector<int> witness;       // proper subset attaining best_proper
};

/// Strict balance over proper vertex subsets of size >= 2 (proper spanning
/// subgraphs are strictly sparser whenever e_G > 0). Needs v_G >= 2.
BalanceReport is_strictly_balanced(const Graph& g, int cap = kDefaultBruteCap, Exec exec = Exec::parallel);

/// d_t of B(ell, r, t) from the edge-count quotient.
Rational d_t_formula(int ell, int r, int t);
/// The same quantity as f(ell) - (ell-1)(r(r+1)-ell) / (2 ell (t ell - 1)).
Rational d_t_rewritten(int ell, int r, int t);
/// (C(ell,2) + C(r+1,2)) / ell, the t -> infinity limit of d_t.
Rational braid_density_limit(int ell, int r);

/// log Psi_G = v log n + e log p, and log Phi_G = min over subgraphs with
/// e_H > 0. For p < 1 the minimiser over a fixed vertex set keeps every
/// induced edge, so the scan is over (k, max induced edges at size k).
struct PsiPhiReport {
  double log_psi = 0;
  double log_phi = 0;
  int argmin_vertices = 0;
  std::int64_t argmin_edges = 0;
  std::vector<int> argmin;  // vertex set of one minimiser
};
PsiPhiReport psi_phi(const Graph& g, double n, double p, int cap = kDefaultBruteCap);
/// Same, with log p given directly (avoids underflow for tiny p).
PsiPhiReport psi_phi_log(const Graph& g, double log_n, double log_p, int cap = kDefaultBruteCap);

// Balance polynomials for braids. f covers 0 <= x <= r, g and h cover r+1 <= x <= ell-1,
// with 2g = (ell - x) h identically.
mpz_class appendix_b_f(int ell, int r, int t, int x);
mpz_class appendix_b_g(int ell, int r, int t, int x);
mpz_class appendix_b_h(int ell, int r, int t, int x);

struct AppendixBRow {
  int x = 0;
  char which = 'f';  // 'f' or 'g'
  mpz_class value;   // f(x) or g(x)
  mpz_class h;       // h(x) when which == 'g'
  bool positive = false;
};

struct AppendixBReport {
  bool all_positive = false;
  bool factorisation_holds = false;  // 2g == (ell-x) h at every x
  bool h_increasing = false;
  std::vector<AppendixBRow> rows;
};

/// Requires t >= 2, r < ell - 1, r(r+1) > ell; throws std::domain_error
/// otherwise.
AppendixBReport verify_appendix_b(int ell, int r, int t);

/// Every braid with ell <= ell_max, t in [2, t_max], t*ell <= v_max: the
/// brute-force maximum density is d_t when ell < r(r+1) (and the braid is
/// strictly balanced), ell/2 otherwise.
struct BraidDensityRow {
  int ell = 0, r = 0, t = 0;
  Rational brute;
  Rational expected;
  bool balanced_regime = false;  // ell < r(r+1)
  bool strictly_balanced = false;
  bool pass = false;
};
struct BraidDensityReport {
  std::vector<BraidDensityRow> rows;
  bool all_pass = true;
};
BraidDensityReport verify_braid_densities(int ell_max = 7, int t_max = 4, int v_max = 20, Exec exec = Exec::parallel);

/// verify_appendix_b over r+1 < ell < r(r+1), ell <= ell_max, 2 <= t <= t_max,
/// plus f(ell, r, t, 0) == 0 on the boundary ell = r(r+1).
struct AppendixBCase {
  int ell = 0, r = 0, t = 0;
  bool pass = false;
};
struct AppendixBSweep {
  std::vector<AppendixBCase> interior;
  std::vector<AppendixBCase> boundary;
  bool all_pass = true;
};
AppendixBSweep verify_appendix_b_range(int ell_max = 12, int t_max = 6);

std::string to_string(DensityMethod m);

}  // namespace dpow
