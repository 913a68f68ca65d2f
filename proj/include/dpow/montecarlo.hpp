#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dpow/graph.hpp"
#include "dpow/hamsearch.hpp"
#include "dpow/rational.hpp"

namespace dpow {

struct BaseGraph {
  enum class Kind { geps, complete, empty, file };
  Kind kind = Kind::empty;
  Rational eps;      // geps
  std::string path;  // file
};
std::string to_string(BaseGraph::Kind k);

/// p = n^(-alpha-mu) for each mu.
struct ExponentGrid {
  Rational alpha;
  std::vector<Rational> mu;
};

struct ExperimentConfig {
  int n = 0;
  int m = 2;
  BaseGraph base;
  std::vector<double> p_list;          // explicit grid, used when exponent is empty
  std::optional<ExponentGrid> exponent;
  int trials = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSearchBudget;

  std::vector<double> probabilities() const;
  /// Throws std::invalid_argument on a broken config; returns cost warnings.
  std::vector<std::string> validate() const;
};

Graph build_base(const ExperimentConfig& cfg);

/// The G(n,p) part of trial `trial`: pair {u,v} is present iff its uniform
/// from stream trial+1 is < p, so the edge set grows with p for a fixed
/// trial.
Graph trial_sample(int n, double p, std::uint64_t seed, std::uint64_t trial);

struct SweepRow {
  double p = 0;
  std::uint64_t found = 0;
  std::uint64_t not_found = 0;
  std::uint64_t unknown = 0;
  double mean_kcliques = 0;  // mean number of K_{m+1} in the G(n,p) part
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<SweepRow> rows;
  /// verdicts[p_index][trial]
  std::vector<std::vector<Verdict>> verdicts;
  double wall_seconds = 0;
};

/// Trials run on `workers` OpenMP threads (0 picks worker_count()); the
/// result other than wall_seconds does not depend on it.
SweepResult run_sweep(const ExperimentConfig& cfg, int workers = 0);

struct CliqueStats {
  int n = 0, m = 0, trials = 0;
  double p = 0;
  double empirical_mean = 0;
  double std_error = 0;
  double first_moment = 0;  // C(n, m+1) p^C(m+1, 2)
};
CliqueStats clique_stats(int n, double p, int m, int trials, std::uint64_t seed);

struct CsvRow {
  double p = 0, found_frac = 0, notfound_frac = 0, unknown_frac = 0, mean_kcliques = 0;
};
void write_csv(std::ostream& os, const SweepResult& r);
void emit_csv(const SweepResult& r, const std::string& path);
std::vector<CsvRow> read_csv(std::istream& is);

}  // namespace dpow
