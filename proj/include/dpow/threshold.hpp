#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpow/rational.hpp"

namespace dpow {

/// (C(ell,2) + C(m-ell+1,2)) / ell for 1 <= ell <= m.
Rational f_m(int m, int ell);
/// ell + (m^2+m)/(2 ell) - m - 1; identical to f_m.
Rational f_m_expanded(int m, int ell);

/// lambda_m^2 = (m^2+m)/2 is an integer; floor and ceil of lambda_m come
/// from an exact integer square root.
struct LambdaBounds {
  std::int64_t lambda_sq = 0;
  int floor = 0;
  int ceil = 0;
};
LambdaBounds lambda_bounds(int m);

/// Minimiser of f_m over {floor, ceil} of lambda_m; floor on ties.
int ell_m(int m);

enum class Regime { classic, over };

struct ThresholdRecord {
  int m = 0;
  Rational lambda_sq;
  int ell_m = 0;
  Rational f_at_ell;
  Rational alpha;  // threshold is n^(-1/alpha)
  Regime regime = Regime::over;
};

/// Smallest ell in [1, m] with ell >= (m-ell)(m-ell+1).
int clique_regime_ell(int m);

/// Admissible ell for the over-threshold bound: m/2 <= ell <= m-1 and ell < (m-ell)(m-ell+1),
/// each with f_m(ell).
std::vector<std::pair<int, Rational>> theorem12_valid_ells(int m);

/// alpha_m: classic thresholds (m in {2,3,4,8}) are n^(-2/ell) with ell from
/// clique_regime_ell; over-thresholds use the best admissible f_m(ell),
/// which is f_m(ell_m) for m = 7 and m >= 10.
ThresholdRecord over_threshold_exponent(int m);

struct Prop13Row {
  int m = 0;
  int ell = 0;
  int r = 0;
  std::int64_t r_r1 = 0;  // r(r+1)
  bool holds = false;     // ell < r(r+1)
  bool required = false;  // m == 7 or m >= 10
};

struct Prop13Report {
  std::vector<Prop13Row> rows;
  bool all_required_hold = true;
  std::vector<int> failures;  // every m in range where the inequality fails
};

Prop13Report verify_prop13(int m_lo, int m_hi);

/// Same-side edge lower bound f(ell_m) L - 2 m^2.
Rational lemma32_bound(int m, int L);

// ---- table reproduction ----------------------------------------------------

struct Table3Row {
  int m = 0;
  int ell = 0;  // clique_regime_ell(m)
  int r = 0;
  std::optional<Rational> f_ell;       // f(ell), m >= 5
  std::optional<Rational> f_ell_prev;  // f(ell-1), m >= 5
  std::optional<int> circled;          // ell_m when it is ell or ell-1
  Rational prior_upper;                // exponent 2/ell of the clique-regime bound
  std::optional<Rational> upper;       // 1/min admissible f, m >= 5
  std::optional<Rational> lower;       // 1/f(ell_m), m >= 5
  Rational threshold;                  // 1/alpha_m
};

struct Table4Row {
  int m = 0;
  std::int64_t lambda_sq = 0;
  int floor = 0;
  int ceil = 0;
  Rational f_floor;
  Rational f_ceil;
  int ell_m = 0;
  int r = 0;
  std::int64_t r_r1 = 0;
};

struct Discrepancy {
  std::string table;
  int m = 0;
  std::string column;
  std::string printed;
  std::string computed;
  bool known_erratum = false;
};

struct TablesReport {
  std::vector<ThresholdRecord> table1;  // m = 2..m_max
  std::vector<Table3Row> table3;        // m = 2..10
  std::vector<Table4Row> table4;        // m in {7, 10..14}
  std::vector<Discrepancy> discrepancies;
  std::size_t fixtures_checked = 0;

  /// True when every mismatch against the printed values is a documented
  /// misprint (the computed value is kept either way).
  bool ok() const;
};

/// Recomputes the three tables and compares them with the printed values.
TablesReport emit_tables(int m_max = 10);

std::string to_string(Regime r);

}  // namespace dpow
