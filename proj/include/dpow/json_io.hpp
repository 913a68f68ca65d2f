#pragma once

// nlohmann::json conversions for every report type the CLI prints. Rationals
// travel as "p/q" strings, GMP integers as decimal strings.

#include <optional>

#include <json.hpp>

#include "dpow/braid.hpp"
#include "dpow/density.hpp"
#include "dpow/graph.hpp"
#include "dpow/hamsearch.hpp"
#include "dpow/montecarlo.hpp"
#include "dpow/pathlemma.hpp"
#include "dpow/rational.hpp"
#include "dpow/threshold.hpp"

NLOHMANN_JSON_NAMESPACE_BEGIN

template <>
struct adl_serializer<dpow::Rational> {
  static void to_json(json& j, const dpow::Rational& r) { j = r.str(); }
  static void from_json(const json& j, dpow::Rational& r) {
    if (j.is_number_integer()) r = dpow::Rational(j.get<std::int64_t>());
    else r = dpow::Rational::parse(j.get<std::string>());
  }
};

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& z) { j = z.get_str(); }
  static void from_json(const json& j, mpz_class& z) { z = mpz_class(j.get<std::string>()); }
};

template <class T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) j = *v;
    else j = nullptr;
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) v.reset();
    else v = j.get<T>();
  }
};

NLOHMANN_JSON_NAMESPACE_END

namespace dpow {

using json = nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(Side, {{Side::A, "A"}, {Side::B, "B"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Verdict, {{Verdict::found, "Found"},
                                       {Verdict::not_found, "NotFound"},
                                       {Verdict::unknown, "Unknown"}})
NLOHMANN_JSON_SERIALIZE_ENUM(DensityMethod, {{DensityMethod::brute, "brute"}, {DensityMethod::optimized, "optimized"}})
NLOHMANN_JSON_SERIALIZE_ENUM(Regime, {{Regime::classic, "classic"}, {Regime::over, "over-threshold"}})
NLOHMANN_JSON_SERIALIZE_ENUM(StepKind, {{StepKind::initiation_split, "initiation-split"},
                                        {StepKind::initiation_merge, "initiation-merge"},
                                        {StepKind::case1, "case1"},
                                        {StepKind::case2, "case2"},
                                        {StepKind::case2_merge, "case2-merge"},
                                        {StepKind::case3, "case3"}})
NLOHMANN_JSON_SERIALIZE_ENUM(BaseGraph::Kind, {{BaseGraph::Kind::geps, "geps"},
                                               {BaseGraph::Kind::complete, "complete"},
                                               {BaseGraph::Kind::empty, "empty"},
                                               {BaseGraph::Kind::file, "file"}})

void to_json(json& j, const Graph& g);
void from_json(const json& j, Graph& g);

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BraidParams, ell, r, t, s)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(DensityReport, value, witness, method)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BalanceReport, strictly_balanced, whole, best_proper, witness)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(PsiPhiReport, log_psi, log_phi, argmin_vertices, argmin_edges, argmin)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AppendixBRow, x, which, value, h, positive)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AppendixBReport, all_positive, factorisation_holds, h_increasing, rows)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BraidDensityRow, ell, r, t, brute, expected, balanced_regime, strictly_balanced, pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(BraidDensityReport, rows, all_pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AppendixBCase, ell, r, t, pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(AppendixBSweep, interior, boundary, all_pass)

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ThresholdRecord, m, lambda_sq, ell_m, f_at_ell, alpha, regime)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Prop13Row, m, ell, r, r_r1, holds, required)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Prop13Report, rows, all_required_hold, failures)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Table3Row, m, ell, r, f_ell, f_ell_prev, circled, prior_upper, upper, lower, threshold)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Table4Row, m, lambda_sq, floor, ceil, f_floor, f_ceil, ell_m, r, r_r1)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Discrepancy, table, m, column, printed, computed, known_erratum)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TablesReport, table1, table3, table4, discrepancies, fixtures_checked)

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SegmentList, sizes, first)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NormalizeStep, kind, segment, before, after, edges_before, edges_after)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(NormalizeResult, m, input, output, transcript, steps, original_edges, normalized_edges)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Lemma32Row, L, valid, min_edges, bound, argmin, pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Lemma32Report, m, rows, all_pass)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(StructureSuiteReport, m, L_max, admitted, counterexample)

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SearchOutcome, verdict, witness, nodes_expanded)

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ExponentGrid, alpha, mu)
void to_json(json& j, const BaseGraph& b);
void from_json(const json& j, BaseGraph& b);
/// {"n", "m", "base", "p_grid": [..] | {"alpha", "mu"}, "trials", "seed", "budget"}
void to_json(json& j, const ExperimentConfig& c);
void from_json(const json& j, ExperimentConfig& c);
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SweepRow, p, found, not_found, unknown, mean_kcliques)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SweepResult, config, rows, verdicts, wall_seconds)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CliqueStats, n, m, trials, p, empirical_mean, std_error, first_moment)

ExperimentConfig read_config_file(const std::string& path);

}  // namespace dpow
