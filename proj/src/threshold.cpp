#include "dpow/threshold.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace dpow {

Rational f_m(int m, int ell) {
  if (m < 1 || ell < 1 || ell > m)
    throw std::invalid_argument("f_m(ell) needs 1 <= ell <= m (m=" + std::to_string(m) + ", ell=" + std::to_string(ell) + ")");
  return Rational(choose2(ell) + choose2(m - ell + 1), ell);
}

Rational f_m_expanded(int m, int ell) {
  if (m < 1 || ell < 1 || ell > m) throw std::invalid_argument("f_m(ell) needs 1 <= ell <= m");
  const std::int64_t mm = m;
  return Rational(ell) + Rational(mm * mm + mm, 2 * std::int64_t{ell}) - Rational(mm + 1);
}

LambdaBounds lambda_bounds(int m) {
  if (m < 1) throw std::invalid_argument("lambda_m needs m >= 1");
  LambdaBounds b;
  b.lambda_sq = (std::int64_t{m} * m + m) / 2;
  b.floor = static_cast<int>(isqrt(b.lambda_sq));
  b.ceil = std::int64_t{b.floor} * b.floor == b.lambda_sq ? b.floor : b.floor + 1;
  return b;
}

int ell_m(int m) {
  if (m < 2) throw std::invalid_argument("ell_m needs m >= 2");
  const auto b = lambda_bounds(m);
  // ceil(lambda_m) <= m for m >= 2, so both candidates are in f's domain
  return f_m(m, b.ceil) < f_m(m, b.floor) ? b.ceil : b.floor;
}

int clique_regime_ell(int m) {
  for (int ell = 1; ell <= m; ++ell) {
    const std::int64_t r = m - ell;
    if (ell >= r * (r + 1)) return ell;
  }
  return m;
}

std::vector<std::pair<int, Rational>> theorem12_valid_ells(int m) {
  if (m < 2) throw std::invalid_argument("theorem12_valid_ells needs m >= 2");
  std::vector<std::pair<int, Rational>> out;
  for (int ell = (m + 1) / 2; ell <= m - 1; ++ell) {
    const std::int64_t r = m - ell;
    if (ell < r * (r + 1)) out.emplace_back(ell, f_m(m, ell));
  }
  return out;
}

namespace {

bool classic(int m) { return m == 2 || m == 3 || m == 4 || m == 8; }

Rational best_admissible_f(int m) {
  const auto valid = theorem12_valid_ells(m);
  if (valid.empty()) throw std::logic_error("no admissible ell for m=" + std::to_string(m));
  Rational best = valid.front().second;
  for (const auto& [ell, f] : valid) best = std::min(best, f);
  return best;
}

}  // namespace

std::string to_string(Regime r) { return r == Regime::classic ? "classic" : "over-threshold"; }

ThresholdRecord over_threshold_exponent(int m) {
  if (m < 2) throw std::invalid_argument("threshold exponent needs m >= 2");
  ThresholdRecord rec;
  rec.m = m;
  rec.lambda_sq = Rational(lambda_bounds(m).lambda_sq);
  rec.ell_m = ell_m(m);
  rec.f_at_ell = f_m(m, rec.ell_m);
  if (classic(m)) {
    rec.regime = Regime::classic;
    rec.alpha = Rational(clique_regime_ell(m), 2);
  } else {
    rec.regime = Regime::over;
    rec.alpha = (m == 7 || m >= 10) ? rec.f_at_ell : best_admissible_f(m);
  }
  return rec;
}

Prop13Report verify_prop13(int m_lo, int m_hi) {
  if (m_lo < 2 || m_hi < m_lo) throw std::invalid_argument("verify_prop13 needs 2 <= m_lo <= m_hi");
  Prop13Report rep;
  for (int m = m_lo; m <= m_hi; ++m) {
    Prop13Row row;
    row.m = m;
    row.ell = ell_m(m);
    row.r = m - row.ell;
    row.r_r1 = std::int64_t{row.r} * (row.r + 1);
    row.holds = row.ell < row.r_r1;
    row.required = m == 7 || m >= 10;
    if (!row.holds) rep.failures.push_back(m);
    if (row.required && !row.holds) rep.all_required_hold = false;
    rep.rows.push_back(row);
  }
  return rep;
}

Rational lemma32_bound(int m, int L) {
  if (m < 2 || L < 1) throw std::invalid_argument("lemma32_bound needs m >= 2 and L >= 1");
  return f_m(m, ell_m(m)) * Rational(L) - Rational(2 * std::int64_t{m} * m);
}

// ---- table reproduction ----------------------------------------------------

namespace {

struct PrintedTable3 {
  int m, ell, r;
  const char* f_ell;       // "" where the table prints n/a
  const char* f_ell_prev;
  int circled;             // 0 where nothing is circled
  const char* prior_upper;
  const char* upper;       // "" where the table prints --
  const char* lower;
  const char* threshold;
};

// Values as printed in the summary table for 2 <= m <= 10 (exponents of
// n^-x). The m = 10 row's f(ell-1) = 27/4 and the exponents 4/27 contradict
// f_10(7) = 27/7; they are kept here verbatim so the report can flag them.
constexpr std::array<PrintedTable3, 9> kPrintedTable3{{
    {2, 2, 0, "", "", 0, "1", "", "", "1"},
    {3, 2, 1, "", "", 0, "1", "", "", "1"},
    {4, 3, 1, "", "", 0, "2/3", "", "", "2/3"},
    {5, 4, 1, "7/4", "2", 4, "1/2", "1/2", "4/7", "1/2"},
    {6, 5, 1, "11/5", "9/4", 5, "2/5", "4/9", "5/11", "4/9"},
    {7, 6, 1, "8/3", "13/5", 5, "1/3", "5/13", "5/13", "5/13"},
    {8, 6, 2, "3", "16/5", 6, "1/3", "5/16", "1/3", "1/3"},
    {9, 7, 2, "24/7", "7/2", 7, "2/7", "2/7", "7/24", "2/7"},
    {10, 8, 2, "31/8", "27/4", 7, "1/4", "4/27", "4/27", "4/27"},
}};

struct PrintedTable4 {
  int m;
  std::int64_t lambda_sq;
  int floor, ceil;
  const char* f_floor;
  const char* f_ceil;
  int ell, r;
  std::int64_t r_r1;
};

constexpr std::array<PrintedTable4, 6> kPrintedTable4{{
    {7, 28, 5, 6, "13/5", "8/3", 5, 2, 6},
    {10, 55, 7, 8, "27/7", "31/8", 7, 3, 12},
    {11, 66, 8, 9, "17/4", "13/3", 8, 3, 12},
    {12, 78, 8, 9, "19/4", "14/3", 9, 3, 12},
    {13, 91, 9, 10, "46/9", "51/10", 10, 3, 12},
    {14, 105, 10, 11, "11/2", "61/11", 10, 4, 20},
}};

constexpr std::array<const char*, 8> kPrintedAlpha{"1", "1", "3/2", "2", "9/4", "13/5", "3", "7/2"};  // m = 2..9

bool is_known_erratum(const std::string& table, int m, const std::string& column) {
  return table == "table3" && m == 10 &&
         (column == "f(ell-1)" || column == "upper" || column == "lower" || column == "threshold");
}

class Checker {
 public:
  explicit Checker(TablesReport& rep) : rep_(rep) {}

  void rational(const std::string& table, int m, const std::string& column, const char* printed,
                const std::optional<Rational>& computed) {
    ++rep_.fixtures_checked;
    const std::string p = printed;
    if (p.empty() && !computed) return;
    const bool same = !p.empty() && computed && Rational::parse(p) == *computed;
    if (!same) push(table, m, column, p.empty() ? "n/a" : p, computed ? computed->str() : "n/a");
  }

  void integer(const std::string& table, int m, const std::string& column, std::int64_t printed, std::int64_t computed) {
    ++rep_.fixtures_checked;
    if (printed != computed) push(table, m, column, std::to_string(printed), std::to_string(computed));
  }

 private:
  void push(const std::string& table, int m, const std::string& column, std::string printed, std::string computed) {
    rep_.discrepancies.push_back(
        {table, m, column, std::move(printed), std::move(computed), is_known_erratum(table, m, column)});
  }
  TablesReport& rep_;
};

Table3Row compute_table3_row(int m) {
  Table3Row row;
  row.m = m;
  row.ell = clique_regime_ell(m);
  row.r = m - row.ell;
  row.prior_upper = Rational(2, row.ell);
  const auto rec = over_threshold_exponent(m);
  row.threshold = rec.alpha.reciprocal();
  if (m >= 5) {
    // below m = 5 the clique-regime bounds already match and the remaining
    // columns are not used
    row.f_ell = f_m(m, row.ell);
    row.f_ell_prev = f_m(m, row.ell - 1);
    const int lm = ell_m(m);
    if (lm == row.ell || lm == row.ell - 1) row.circled = lm;
    row.upper = best_admissible_f(m).reciprocal();
    row.lower = f_m(m, lm).reciprocal();
  }
  return row;
}

Table4Row compute_table4_row(int m) {
  Table4Row row;
  row.m = m;
  const auto b = lambda_bounds(m);
  row.lambda_sq = b.lambda_sq;
  row.floor = b.floor;
  row.ceil = b.ceil;
  row.f_floor = f_m(m, b.floor);
  row.f_ceil = f_m(m, b.ceil);
  row.ell_m = ell_m(m);
  row.r = m - row.ell_m;
  row.r_r1 = std::int64_t{row.r} * (row.r + 1);
  return row;
}

}  // namespace

bool TablesReport::ok() const {
  return std::all_of(discrepancies.begin(), discrepancies.end(), [](const Discrepancy& d) { return d.known_erratum; });
}

TablesReport emit_tables(int m_max) {
  if (m_max < 2) throw std::invalid_argument("emit_tables needs m_max >= 2");
  TablesReport rep;
  Checker check(rep);

  for (int m = 2; m <= m_max; ++m) rep.table1.push_back(over_threshold_exponent(m));
  for (int m = 2; m <= 9; ++m)
    check.rational("table1", m, "alpha", kPrintedAlpha[m - 2], over_threshold_exponent(m).alpha);

  for (const auto& p : kPrintedTable3) {
    const auto row = compute_table3_row(p.m);
    check.integer("table3", p.m, "ell", p.ell, row.ell);
    check.integer("table3", p.m, "r", p.r, row.r);
    check.rational("table3", p.m, "f(ell)", p.f_ell, row.f_ell);
    check.rational("table3", p.m, "f(ell-1)", p.f_ell_prev, row.f_ell_prev);
    check.integer("table3", p.m, "circled", p.circled, row.circled.value_or(0));
    check.rational("table3", p.m, "prior_upper", p.prior_upper, row.prior_upper);
    check.rational("table3", p.m, "upper", p.upper, row.upper);
    check.rational("table3", p.m, "lower", p.lower, row.lower);
    check.rational("table3", p.m, "threshold", p.threshold, row.threshold);
    rep.table3.push_back(row);
  }

  for (const auto& p : kPrintedTable4) {
    const auto row = compute_table4_row(p.m);
    check.integer("table4", p.m, "lambda^2", p.lambda_sq, row.lambda_sq);
    check.integer("table4", p.m, "floor", p.floor, row.floor);
    check.integer("table4", p.m, "ceil", p.ceil, row.ceil);
    check.rational("table4", p.m, "f(floor)", p.f_floor, row.f_floor);
    check.rational("table4", p.m, "f(ceil)", p.f_ceil, row.f_ceil);
    check.integer("table4", p.m, "ell_m", p.ell, row.ell_m);
    check.integer("table4", p.m, "r_m", p.r, row.r);
    check.integer("table4", p.m, "r_m(r_m+1)", p.r_r1, row.r_r1);
    rep.table4.push_back(row);
  }
  return rep;
}

}  // namespace dpow
