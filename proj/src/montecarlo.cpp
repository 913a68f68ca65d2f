#include "dpow/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dpow/kernels.hpp"
#include "dpow/philox.hpp"

namespace dpow {

std::string to_string(BaseGraph::Kind k) {
  switch (k) {
    case BaseGraph::Kind::geps: return "geps";
    case BaseGraph::Kind::complete: return "complete";
    case BaseGraph::Kind::empty: return "empty";
    case BaseGraph::Kind::file: return "file";
  }
  return "?";
}

std::vector<double> ExperimentConfig::probabilities() const {
  if (!exponent) return p_list;
  std::vector<double> out;
  const double log_n = std::log(static_cast<double>(n));
  for (const auto& mu : exponent->mu) out.push_back(std::exp(-(exponent->alpha + mu).to_double() * log_n));
  return out;
}

namespace {

// Rough size, per m, beyond which the exact search tends to hit its budget
// near the threshold.
int comfortable_n(int m) {
  switch (m) {
    case 1: return 80;
    case 2: return 60;
    case 3: return 36;
    default: return 24;
  }
}

}  // namespace

std::vector<std::string> ExperimentConfig::validate() const {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n < m + 2) throw std::invalid_argument("n must be >= m + 2");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (exponent && !p_list.empty()) throw std::invalid_argument("give either an explicit p grid or an exponent grid, not both");
  for (double p : probabilities())
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("grid probability outside [0,1]: " + std::to_string(p));
  if (base.kind == BaseGraph::Kind::geps) GepsParams{n, base.eps}.validate();
  if (base.kind == BaseGraph::Kind::file && base.path.empty()) throw std::invalid_argument("file base needs a path");

  std::vector<std::string> warnings;
  if (n > comfortable_n(m))
    warnings.push_back("n = " + std::to_string(n) + " is large for exact search at m = " + std::to_string(m) +
                       "; expect Unknown outcomes");
  if (budget < std::uint64_t(n) * 100) warnings.push_back("search budget is small; expect Unknown outcomes");
  return warnings;
}

Graph build_base(const ExperimentConfig& cfg) {
  switch (cfg.base.kind) {
    case BaseGraph::Kind::geps: return g_eps({cfg.n, cfg.base.eps});
    case BaseGraph::Kind::complete: return complete_graph(cfg.n);
    case BaseGraph::Kind::empty: return Graph(cfg.n);
    case BaseGraph::Kind::file: {
      Graph g = read_edge_list_file(cfg.base.path);
      if (g.n() != cfg.n) throw std::invalid_argument("base graph file has " + std::to_string(g.n()) + " vertices, config says " + std::to_string(cfg.n));
      return g;
    }
  }
  throw std::logic_error("unhandled base kind");
}

Graph trial_sample(int n, double p, std::uint64_t seed, std::uint64_t trial) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  Graph g(n);
  const PairUniforms uniform(seed, trial + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform(u, v) < p) g.add_edge(u, v);
  return g;
}

SweepResult run_sweep(const ExperimentConfig& cfg, int workers) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const Graph base = build_base(cfg);
  const auto grid = cfg.probabilities();
  const std::size_t P = grid.size();
  const int T = cfg.trials, n = cfg.n;

  std::vector<Verdict> verdict(P * T, Verdict::unknown);
  std::vector<std::uint64_t> cliques(P * T, 0);
  std::string error;
  const int threads = workers > 0 ? workers : worker_count();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int t = 0; t < T; ++t) {
    try {
      const PairUniforms uniform(cfg.seed, static_cast<std::uint64_t>(t) + 1);
      std::vector<double> u_pair;
      u_pair.reserve(static_cast<std::size_t>(choose2(n)));
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) u_pair.push_back(uniform(u, v));
      for (std::size_t k = 0; k < P; ++k) {
        Graph sample(n);
        std::size_t idx = 0;
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (u_pair[idx++] < grid[k]) sample.add_edge(u, v);
        const auto outcome = contains_ham_power(graph_union(base, sample), cfg.m, cfg.budget);
        verdict[k * T + t] = outcome.verdict;
        cliques[k * T + t] = count_cliques(sample, cfg.m + 1);
      }
    } catch (const std::exception& e) {
#pragma omp critical(dpow_sweep_error)
      if (error.empty()) error = e.what();
    }
  }
  if (!error.empty()) throw std::runtime_error("sweep trial failed: " + error);

  SweepResult res;
  res.config = cfg;
  res.verdicts.assign(P, std::vector<Verdict>(static_cast<std::size_t>(T)));
  for (std::size_t k = 0; k < P; ++k) {
    SweepRow row;
    row.p = grid[k];
    std::uint64_t clique_sum = 0;
    for (int t = 0; t < T; ++t) {
      const Verdict v = verdict[k * T + t];
      res.verdicts[k][t] = v;
      (v == Verdict::found ? row.found : v == Verdict::not_found ? row.not_found : row.unknown) += 1;
      clique_sum += cliques[k * T + t];
    }
    row.mean_kcliques = static_cast<double>(clique_sum) / T;
    res.rows.push_back(row);
  }
  res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

CliqueStats clique_stats(int n, double p, int m, int trials, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  if (trials < 1 || m < 1 || n < 1) throw std::invalid_argument("clique_stats needs n, m, trials >= 1");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic, 4) num_threads(worker_count())
  for (int t = 0; t < trials; ++t) counts[t] = count_cliques(trial_sample(n, p, seed, static_cast<std::uint64_t>(t)), m + 1);

  CliqueStats s;
  s.n = n;
  s.m = m;
  s.trials = trials;
  s.p = p;
  double sum = 0, sq = 0;
  for (auto c : counts) {
    sum += static_cast<double>(c);
    sq += static_cast<double>(c) * static_cast<double>(c);
  }
  s.empirical_mean = sum / trials;
  const double var = trials > 1 ? (sq - sum * sum / trials) / (trials - 1) : 0.0;
  s.std_error = std::sqrt(std::max(var, 0.0) / trials);
  s.first_moment = binomial(n, m + 1).get_d() * std::pow(p, static_cast<double>(choose2(m + 1)));
  return s;
}

namespace {

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const SweepResult& r) {
  os << "p,found_frac,notfound_frac,unknown_frac,mean_kcliques\n";
  for (const auto& row : r.rows) {
    const double total = static_cast<double>(row.found + row.not_found + row.unknown);
    os << fmt12(row.p) << ',' << fmt12(row.found / total) << ',' << fmt12(row.not_found / total) << ','
       << fmt12(row.unknown / total) << ',' << fmt12(row.mean_kcliques) << '\n';
  }
}

void emit_csv(const SweepResult& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_csv(out, r);
  if (!out) throw std::runtime_error("write failed for " + path);
}

std::vector<CsvRow> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "p,found_frac,notfound_frac,unknown_frac,mean_kcliques")
    throw std::runtime_error("unexpected CSV header");
  std::vector<CsvRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    CsvRow row;
    double* fields[] = {&row.p, &row.found_frac, &row.notfound_frac, &row.unknown_frac, &row.mean_kcliques};
    for (int i = 0; i < 5; ++i) {
      std::string cell;
      if (!std::getline(ss, cell, i < 4 ? ',' : '\n')) throw std::runtime_error("short CSV row: " + line);
      *fields[i] = std::stod(cell);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dpow
