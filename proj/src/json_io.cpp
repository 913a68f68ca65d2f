#include "dpow/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace dpow {

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j = json{{"n", g.n()}, {"edges", std::move(edges)}};
}

void from_json(const json& j, Graph& g) {
  g = Graph(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
}

void to_json(json& j, const BaseGraph& b) {
  j = json{{"kind", b.kind}};
  if (b.kind == BaseGraph::Kind::geps) j["eps"] = b.eps;
  if (b.kind == BaseGraph::Kind::file) j["path"] = b.path;
}

void from_json(const json& j, BaseGraph& b) {
  b = BaseGraph{};
  const auto kind = j.is_string() ? j.get<std::string>() : j.at("kind").get<std::string>();
  b.kind = json(kind).get<BaseGraph::Kind>();
  if (to_string(b.kind) != kind) throw std::invalid_argument("unknown base kind '" + kind + "'");
  if (b.kind == BaseGraph::Kind::geps) {
    if (j.is_string()) throw std::invalid_argument("geps base needs an eps");
    b.eps = j.at("eps").get<Rational>();
  }
  if (b.kind == BaseGraph::Kind::file) {
    if (j.is_string()) throw std::invalid_argument("file base needs a path");
    b.path = j.at("path").get<std::string>();
  }
}

void to_json(json& j, const ExperimentConfig& c) {
  j = json{{"n", c.n}, {"m", c.m}, {"base", c.base}, {"trials", c.trials}, {"seed", c.seed}, {"budget", c.budget}};
  if (c.exponent) j["p_grid"] = *c.exponent;
  else j["p_grid"] = c.p_list;
}

void from_json(const json& j, ExperimentConfig& c) {
  c = ExperimentConfig{};
  c.n = j.at("n").get<int>();
  c.m = j.at("m").get<int>();
  c.base = j.at("base").get<BaseGraph>();
  const auto& grid = j.at("p_grid");
  if (grid.is_object()) {
    c.exponent = grid.get<ExponentGrid>();
  } else {
    for (const auto& p : grid) c.p_list.push_back(p.is_string() ? Rational::parse(p.get<std::string>()).to_double() : p.get<double>());
  }
  c.trials = j.value("trials", 1);
  c.seed = j.value("seed", std::uint64_t{0});
  c.budget = j.value("budget", kDefaultSearchBudget);
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config " + path + " is not valid JSON: " + e.what());
  }
  return j.get<ExperimentConfig>();
}

}  // namespace dpow
