#include "dpow/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "dpow/json_io.hpp"

namespace dpow::cli {

namespace {

struct Result {
  int code = kOk;
  json body;
  std::string text;
  std::string failure;  // counterexample / reason, printed to err on failure
};

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

Graph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  return read_edge_list_file(path);
}

void write_graph(const Graph& g, const std::string& emit, const std::string& path, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!path.empty()) {
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    os = &file;
  }
  if (emit == "dot") write_dot(*os, g);
  else write_edge_list(*os, g);
}

// ---- verify suites ---------------------------------------------------------

Result verify_lemma32(const std::vector<std::pair<int, int>>& configs) {
  Result res;
  res.body = json::array();
  std::ostringstream text;
  for (auto [m, L_max] : configs) {
    const auto rep = check_lemma32_exhaustive(m, L_max);
    res.body.push_back(rep);
    text << "lemma32 m=" << m << " L<=" << L_max << ": " << (rep.all_pass ? "pass" : "FAIL") << "\n";
    for (const auto& row : rep.rows) {
      text << "  L=" << row.L << " valid=" << row.valid << " min=" << row.min_edges << " bound=" << row.bound
           << " argmin=" << row.argmin << (row.pass ? "" : "  <-- violated") << "\n";
      if (!row.pass && res.failure.empty())
        res.failure = "m=" + std::to_string(m) + " L=" + std::to_string(row.L) + " labeling " + row.argmin + " has " +
                      std::to_string(row.min_edges) + " same-side edges < " + row.bound.str();
    }
    if (!rep.all_pass) res.code = kCheckFailed;
  }
  res.text = text.str();
  return res;
}

Result verify_prop13_suite(int m_lo, int m_hi) {
  Result res;
  const auto rep = verify_prop13(m_lo, m_hi);
  res.body = rep;
  std::ostringstream text;
  text << "prop13 m=" << m_lo << ".." << m_hi << ": " << (rep.all_required_hold ? "pass" : "FAIL") << "\n";
  text << "  inequality fails for m = " << join(rep.failures, ", ") << "\n";
  res.text = text.str();
  if (!rep.all_required_hold) {
    res.code = kCheckFailed;
    for (const auto& row : rep.rows)
      if (row.required && !row.holds) {
        res.failure = "m=" + std::to_string(row.m) + ": ell_m=" + std::to_string(row.ell) + " >= r(r+1)=" + std::to_string(row.r_r1);
        break;
      }
  }
  return res;
}

std::string table_text(const TablesReport& rep) {
  std::ostringstream t;
  t << "Table 1 (thresholds n^(-1/alpha_m))\n";
  t << "  m  lambda^2  ell_m  f(ell_m)  alpha  regime\n";
  for (const auto& r : rep.table1)
    t << "  " << r.m << "  " << r.lambda_sq << "  " << r.ell_m << "  " << r.f_at_ell << "  " << r.alpha << "  "
      << to_string(r.regime) << "\n";
  auto opt = [](const std::optional<Rational>& r) { return r ? r->str() : std::string("--"); };
  t << "Table 3 (exponents)\n";
  t << "  m  ell  r  f(ell)  f(ell-1)  circled  prior  upper  lower  threshold\n";
  for (const auto& r : rep.table3)
    t << "  " << r.m << "  " << r.ell << "  " << r.r << "  " << opt(r.f_ell) << "  " << opt(r.f_ell_prev) << "  "
      << (r.circled ? std::to_string(*r.circled) : "--") << "  " << r.prior_upper << "  " << opt(r.upper) << "  "
      << opt(r.lower) << "  " << r.threshold << "\n";
  t << "Table 4\n";
  t << "  m  lambda^2  floor  ceil  f(floor)  f(ceil)  ell_m  r_m  r_m(r_m+1)\n";
  for (const auto& r : rep.table4)
    t << "  " << r.m << "  " << r.lambda_sq << "  " << r.floor << "  " << r.ceil << "  " << r.f_floor << "  " << r.f_ceil
      << "  " << r.ell_m << "  " << r.r << "  " << r.r_r1 << "\n";
  t << "fixtures checked: " << rep.fixtures_checked << "\n";
  for (const auto& d : rep.discrepancies)
    t << (d.known_erratum ? "  flagged misprint: " : "  MISMATCH: ") << d.table << " m=" << d.m << " " << d.column
      << " printed " << d.printed << ", computed " << d.computed << " (computed value kept)\n";
  return t.str();
}

// CSV or markdown rendering of the three tables.
std::string table_grid(const TablesReport& rep, bool csv) {
  std::ostringstream t;
  auto row = [&](const std::vector<std::string>& cells) {
    if (csv) {
      for (std::size_t i = 0; i < cells.size(); ++i) t << (i ? "," : "") << cells[i];
    } else {
      t << "|";
      for (const auto& c : cells) t << " " << c << " |";
    }
    t << "\n";
  };
  auto header = [&](const std::string& title, const std::vector<std::string>& cells) {
    t << (csv ? "# " : "### ") << title << "\n";
    if (!csv) t << "\n";
    row(cells);
    if (!csv) row(std::vector<std::string>(cells.size(), "---"));
  };
  auto opt = [](const std::optional<Rational>& r) { return r ? r->str() : std::string(); };
  header("table1", {"m", "lambda_sq", "ell_m", "f_ell_m", "alpha", "regime"});
  for (const auto& r : rep.table1)
    row({std::to_string(r.m), r.lambda_sq.str(), std::to_string(r.ell_m), r.f_at_ell.str(), r.alpha.str(), to_string(r.regime)});
  t << "\n";
  header("table3", {"m", "ell", "r", "f_ell", "f_ell_prev", "circled", "prior_upper", "upper", "lower", "threshold"});
  for (const auto& r : rep.table3)
    row({std::to_string(r.m), std::to_string(r.ell), std::to_string(r.r), opt(r.f_ell), opt(r.f_ell_prev),
         r.circled ? std::to_string(*r.circled) : "", r.prior_upper.str(), opt(r.upper), opt(r.lower), r.threshold.str()});
  t << "\n";
  header("table4", {"m", "lambda_sq", "floor", "ceil", "f_floor", "f_ceil", "ell_m", "r_m", "r_m_r_m_plus_1"});
  for (const auto& r : rep.table4)
    row({std::to_string(r.m), std::to_string(r.lambda_sq), std::to_string(r.floor), std::to_string(r.ceil), r.f_floor.str(),
         r.f_ceil.str(), std::to_string(r.ell_m), std::to_string(r.r), std::to_string(r.r_r1)});
  if (!rep.discrepancies.empty()) {
    t << "\n";
    header("discrepancies", {"table", "m", "column", "printed", "computed", "known_erratum"});
    for (const auto& d : rep.discrepancies)
      row({d.table, std::to_string(d.m), d.column, d.printed, d.computed, d.known_erratum ? "yes" : "no"});
  }
  return t.str();
}

Result tables_suite(int m_max) {
  Result res;
  const auto rep = emit_tables(m_max);
  res.body = rep;
  res.text = table_text(rep);
  if (!rep.ok()) {
    res.code = kCheckFailed;
    for (const auto& d : rep.discrepancies)
      if (!d.known_erratum) {
        res.failure = d.table + " m=" + std::to_string(d.m) + " " + d.column + ": printed " + d.printed + ", computed " + d.computed;
        break;
      }
  }
  return res;
}

Result appendix_b_suite(int ell_max, int t_max) {
  Result res;
  const auto rep = verify_appendix_b_range(ell_max, t_max);
  res.body = rep;
  std::ostringstream text;
  text << "appendix-b ell<=" << ell_max << " t<=" << t_max << ": " << (rep.all_pass ? "pass" : "FAIL") << " ("
       << rep.interior.size() << " interior cases, " << rep.boundary.size() << " boundary cases)\n";
  for (const auto& c : rep.interior)
    if (!c.pass && res.failure.empty())
      res.failure = "positivity fails at (ell,r,t)=(" + std::to_string(c.ell) + "," + std::to_string(c.r) + "," + std::to_string(c.t) + ")";
  for (const auto& c : rep.boundary)
    if (!c.pass && res.failure.empty())
      res.failure = "f(ell,r,t,0) != 0 on the boundary (ell,r,t)=(" + std::to_string(c.ell) + "," + std::to_string(c.r) + "," + std::to_string(c.t) + ")";
  res.text = text.str();
  if (!rep.all_pass) res.code = kCheckFailed;
  return res;
}

Result balanced_suite(int ell_max, int t_max, int v_max) {
  Result res;
  const auto rep = verify_braid_densities(ell_max, t_max, v_max);
  res.body = rep;
  std::ostringstream text;
  text << "balanced ell<=" << ell_max << " t<=" << t_max << " v<=" << v_max << ": " << (rep.all_pass ? "pass" : "FAIL")
       << " (" << rep.rows.size() << " braids)\n";
  for (const auto& r : rep.rows) {
    text << "  B(" << r.ell << "," << r.r << "," << r.t << ") m_B=" << r.brute << " expected=" << r.expected
         << (r.balanced_regime ? (r.strictly_balanced ? " strictly balanced" : " NOT strictly balanced") : "") << "\n";
    if (!r.pass && res.failure.empty())
      res.failure = "B(" + std::to_string(r.ell) + "," + std::to_string(r.r) + "," + std::to_string(r.t) + "): m_B=" +
                    r.brute.str() + ", expected " + r.expected.str();
  }
  res.text = text.str();
  if (!rep.all_pass) res.code = kCheckFailed;
  return res;
}

Result structure_suite(int m, int L_max) {
  Result res;
  const auto rep = m == 6 ? verify_m6_exhaustive(L_max) : verify_m9_exhaustive(L_max);
  res.body = rep;
  std::ostringstream text;
  text << "m" << m << " L<=" << L_max << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.admitted
       << " clique-free labelings)\n";
  res.text = text.str();
  if (!rep.pass()) {
    res.code = kCheckFailed;
    res.failure = "labeling " + *rep.counterexample + " breaks the m=" + std::to_string(m) + " edge bounds";
  }
  return res;
}

// ---- printing --------------------------------------------------------------

int finish(const std::string& command, const Result& r, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    json envelope{{"command", command}, {"exit_code", r.code}, {"result", r.body}};
    if (!r.failure.empty()) envelope["failure"] = r.failure;
    out << envelope.dump(2) << "\n";
  } else {
    out << r.text;
  }
  if (!r.failure.empty()) err << "counterexample: " << r.failure << "\n";
  return r.code;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braids, densities, thresholds and Hamiltonian-power search"};
  app.name("dpow");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  int threads = 0;
  app.add_option("--format", format, "Output format (csv/markdown apply to threshold-table)")
      ->check(CLI::IsMember({"text", "json", "csv", "markdown"}));
  app.add_option("--threads", threads, "OpenMP worker count (speed only)")->check(CLI::NonNegativeNumber);

  // braid
  BraidParams bp;
  std::string emit = "edges", out_path;
  auto* c_braid = app.add_subcommand("braid", "Emit B(ell, r, t) or s disjoint copies");
  c_braid->add_option("--ell", bp.ell)->required();
  c_braid->add_option("--r", bp.r)->required();
  c_braid->add_option("--t", bp.t)->required();
  c_braid->add_option("--s", bp.s);
  c_braid->add_option("--emit", emit)->check(CLI::IsMember({"edges", "dot"}));
  c_braid->add_option("--out", out_path, "Write the graph here instead of stdout");

  // gen
  std::string kind;
  int gen_n = 0, gen_m = 1;
  std::string gen_eps = "1/8";
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  auto* c_gen = app.add_subcommand("gen", "Generate a graph");
  c_gen->add_option("kind", kind)->required()->check(CLI::IsMember({"complete", "path", "cycle", "geps", "gnp", "bridge"}));
  c_gen->add_option("--n", gen_n, "Vertex count (bridge width for 'bridge')")->required();
  c_gen->add_option("--m", gen_m, "Power for path/cycle");
  c_gen->add_option("--eps", gen_eps, "Patch fraction for geps, as p/q");
  c_gen->add_option("--p", gen_p, "Edge probability for gnp");
  c_gen->add_option("--seed", gen_seed);
  c_gen->add_option("--emit", emit)->check(CLI::IsMember({"edges", "dot"}));
  c_gen->add_option("--out", out_path);

  // density
  std::string input;
  std::string method = "auto";
  int cap = kDefaultBruteCap;
  bool balanced = false;
  std::vector<double> phi;
  bool max_only = false;
  auto* c_density = app.add_subcommand("density", "Maximum 1-density, strict balance, Psi/Phi");
  c_density->add_option("--input", input, "Edge-list file ('-' for stdin)")->required();
  c_density->add_option("--method", method)->check(CLI::IsMember({"auto", "brute", "opt", "both"}));
  c_density->add_option("--cap", cap, "Vertex cap for exhaustive scans");
  c_density->add_flag("--balanced", balanced, "Also decide strict balance");
  c_density->add_flag("--max", max_only, "Maximum density only (the default report)");
  c_density->add_option("--phi", phi, "Evaluate log Psi / log Phi at scale n and probability p")->expected(2);

  // threshold-table
  int m_max = 10;
  auto* c_table = app.add_subcommand("threshold-table", "Recompute the threshold tables");
  c_table->add_option("--m-max", m_max)->check(CLI::Range(2, 10000));

  // normalize
  int norm_m = 0;
  std::string labels, sizes, first = "A";
  bool track = false, show_transcript = false;
  auto* c_norm = app.add_subcommand("normalize", "Normalise the segments of a partitioned m-path");
  c_norm->add_option("--m", norm_m)->required()->check(CLI::Range(2, 1000));
  auto* o_labels = c_norm->add_option("--labels", labels, "A/B string, one letter per path vertex");
  auto* o_sizes = c_norm->add_option("--sizes", sizes, "Comma-separated segment sizes");
  o_labels->excludes(o_sizes);
  c_norm->add_option("--first", first, "Side of the first segment with --sizes")->check(CLI::IsMember({"A", "B"}));
  c_norm->add_flag("--track-edges", track, "Record the same-side edge count at every step");
  c_norm->add_flag("--transcript", show_transcript, "Print every modifying step");

  // verify
  auto* c_verify = app.add_subcommand("verify", "Finite verification suites");
  c_verify->require_subcommand(1);
  int v_m = 0, v_L = 0;
  auto* v_lemma = c_verify->add_subcommand("lemma32", "Exhaustive same-side edge bound");
  v_lemma->add_option("--m", v_m);
  v_lemma->add_option("--L-max,--lmax", v_L);
  int p_lo = 2, p_hi = 200;
  auto* v_prop = c_verify->add_subcommand("prop13", "ell_m < r(r+1) for m = 7 and m >= 10");
  v_prop->add_option("--m-min", p_lo)->check(CLI::Range(2, 1000000));
  v_prop->add_option("--m-max", p_hi)->check(CLI::Range(2, 1000000));
  auto* v_tables = c_verify->add_subcommand("tables", "Tables against the printed fixtures");
  int ab_ell = 12, ab_t = 6;
  auto* v_ab = c_verify->add_subcommand("appendix-b", "Positivity of the balance polynomials");
  v_ab->add_option("--ell-max", ab_ell)->check(CLI::Range(2, 200));
  v_ab->add_option("--t-max", ab_t)->check(CLI::Range(2, 200));
  int bal_ell = 7, bal_t = 4, bal_v = 20;
  auto* v_bal = c_verify->add_subcommand("balanced", "Braid densities and strict balance");
  v_bal->add_option("--ell-max", bal_ell)->check(CLI::Range(2, 20));
  v_bal->add_option("--t-max", bal_t)->check(CLI::Range(2, 20));
  v_bal->add_option("--v-max", bal_v)->check(CLI::Range(2, kernels::kSubsetHardCap));
  int m6_L = 18, m9_L = 16;
  auto* v_m6 = c_verify->add_subcommand("m6", "m = 6 far-edge bounds");
  v_m6->add_option("--L-max,--lmax", m6_L)->check(CLI::Range(1, 30));
  auto* v_m9 = c_verify->add_subcommand("m9", "m = 9 far-edge bounds");
  v_m9->add_option("--L-max,--lmax", m9_L)->check(CLI::Range(1, 30));
  auto* v_all = c_verify->add_subcommand("all", "Every suite at its default caps");

  // search
  int s_m = 0;
  std::uint64_t budget = kDefaultSearchBudget;
  std::string witness_out;
  auto* c_search = app.add_subcommand("search", "Decide whether a graph contains the m-th power of a Hamiltonian cycle");
  c_search->add_option("--input", input)->required();
  c_search->add_option("--m", s_m)->required()->check(CLI::PositiveNumber);
  c_search->add_option("--budget", budget, "Node-expansion limit");
  c_search->add_option("--witness-out", witness_out, "Write the cyclic order here");

  // sweep
  std::string config_path;
  auto* c_sweep = app.add_subcommand("sweep", "Monte Carlo containment sweep");
  c_sweep->add_option("--config", config_path)->required();
  c_sweep->add_option("--out", out_path, "CSV output (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  if (threads > 0) set_worker_count(threads);
  const bool as_json = format == "json";

  try {
    if (c_braid->parsed()) {
      bp.validate();
      const Graph g = s_braids(bp);
      if (as_json) {
        Result r;
        r.body = json{{"params", bp}, {"graph", g}};
        return finish("braid", r, true, out, err);
      }
      write_graph(g, emit, out_path, out);
      return kOk;
    }

    if (c_gen->parsed()) {
      Graph g;
      if (kind == "complete") g = complete_graph(gen_n);
      else if (kind == "path") g = path_power(gen_n, gen_m);
      else if (kind == "cycle") g = cycle_power(gen_n, gen_m);
      else if (kind == "geps") g = g_eps({gen_n, Rational::parse(gen_eps)});
      else if (kind == "gnp") g = sample_gnp(gen_n, gen_p, gen_seed);
      else g = bridge(gen_n);
      if (as_json) {
        Result r;
        r.body = g;
        return finish("gen", r, true, out, err);
      }
      write_graph(g, emit, out_path, out);
      return kOk;
    }

    if (c_density->parsed()) {
      const Graph g = load_graph(input);
      Result r;
      std::ostringstream text;
      const bool small = g.n() <= cap;
      const bool do_brute = method == "brute" || method == "both" || (method == "auto" && small);
      const bool do_opt = method != "brute";
      std::optional<DensityReport> brute, opt;
      if (do_brute) brute = max_density_brute(g, cap);
      if (do_opt) opt = max_density_opt(g);
      r.body = json{{"n", g.n()}, {"e", g.edge_count()}, {"d", g.n() >= 2 ? json(one_density(g)) : json(nullptr)},
                    {"brute", brute}, {"opt", opt}};
      text << "n=" << g.n() << " e=" << g.edge_count();
      if (g.n() >= 2) text << " d_G=" << one_density(g);
      text << "\n";
      if (brute) text << "m_G (brute) = " << brute->value << " witness {" << join(brute->witness) << "}\n";
      if (opt) text << "m_G (opt)   = " << opt->value << " witness {" << join(opt->witness) << "}\n";
      if (brute && opt && brute->value != opt->value) {
        r.code = kCheckFailed;
        r.failure = "brute force gives " + brute->value.str() + ", optimisation gives " + opt->value.str();
      }
      if (balanced) {
        const auto b = is_strictly_balanced(g, cap);
        r.body["balance"] = b;
        text << (b.strictly_balanced ? "strictly balanced" : "not strictly balanced") << ": d_G=" << b.whole
             << ", best proper=" << b.best_proper << "\n";
      }
      if (!phi.empty()) {
        const auto pp = psi_phi(g, phi[0], phi[1], cap);
        r.body["psi_phi"] = pp;
        text << "log Psi=" << pp.log_psi << " log Phi=" << pp.log_phi << " at v_H=" << pp.argmin_vertices
             << " e_H=" << pp.argmin_edges << "\n";
      }
      r.text = text.str();
      return finish("density", r, as_json, out, err);
    }

    if (c_table->parsed()) {
      Result r = tables_suite(m_max);
      if (format == "csv" || format == "markdown") r.text = table_grid(r.body.get<TablesReport>(), format == "csv");
      return finish("threshold-table", r, as_json, out, err);
    }

    if (c_norm->parsed()) {
      SegmentList input_segments;
      if (!labels.empty()) {
        input_segments = segments(PartitionedPath::from_string(norm_m, labels));
      } else if (!sizes.empty()) {
        input_segments.sizes = parse_int_list(sizes);
        input_segments.first = first == "B" ? Side::B : Side::A;
      } else {
        err << "error: normalize needs --labels or --sizes\n";
        return kUsage;
      }
      const auto res = normalize(norm_m, input_segments, {true, track});
      const bool valid_input = to_path(norm_m, input_segments).valid();
      Result r;
      r.body = res;
      std::ostringstream text;
      auto fmt = [](const SegmentList& s) {
        return std::string(1, to_char(s.first)) + ":[" + join(s.sizes, ",") + "]";
      };
      text << "input  " << fmt(res.input) << (valid_input ? "" : "  (has a run longer than m)") << "\n";
      for (const auto& st : show_transcript || track ? res.transcript : std::vector<NormalizeStep>{}) {
        text << "  " << to_string(st.kind) << " at S_" << st.segment << ": " << fmt(st.before) << " -> " << fmt(st.after);
        if (st.edges_before >= 0) text << "  edges " << st.edges_before << " -> " << st.edges_after;
        text << "\n";
      }
      if (!show_transcript && !track) text << "  (" << res.transcript.size() << " modifying steps; --transcript lists them)\n";
      text << "output " << fmt(res.output) << "\n";
      text << "same-side edges: original " << res.original_edges << ", normalised " << res.normalized_edges << "\n";
      const bool normal = res.output.normalized(norm_m);
      if (!normal) {
        r.code = kCheckFailed;
        r.failure = "output " + fmt(res.output) + " is not normalised";
      } else {
        const auto closed = closed_form_edges(norm_m, res.output);
        r.body["closed_form_edges"] = closed;
        text << "closed-form segment count: " << closed << "\n";
        if (closed != res.normalized_edges) {
          r.code = kCheckFailed;
          r.failure = "closed form " + std::to_string(closed) + " != enumerated " + std::to_string(res.normalized_edges);
        }
      }
      r.body["within_slack"] = res.within_slack();
      text << "slack check (gain <= (m-1)^2/2): " << (res.within_slack() ? "holds" : "fails") << "\n";
      if (!res.within_slack() && r.failure.empty()) {
        r.code = kCheckFailed;
        r.failure = "normalisation gained " + std::to_string(res.normalized_edges - res.original_edges) + " edges";
      }
      r.text = text.str();
      return finish("normalize", r, as_json, out, err);
    }

    if (c_verify->parsed()) {
      const std::vector<std::pair<int, int>> default_lemma{{2, 14}, {3, 16}, {4, 14}};
      if (v_lemma->parsed()) {
        if ((v_m == 0) != (v_L == 0)) {
          err << "error: give both --m and --L-max, or neither\n";
          return kUsage;
        }
        std::vector<std::pair<int, int>> cfg = default_lemma;
        if (v_m) cfg = {{v_m, v_L}};
        return finish("verify lemma32", verify_lemma32(cfg), as_json, out, err);
      }
      if (v_prop->parsed()) return finish("verify prop13", verify_prop13_suite(p_lo, p_hi), as_json, out, err);
      if (v_tables->parsed()) return finish("verify tables", tables_suite(10), as_json, out, err);
      if (v_ab->parsed()) return finish("verify appendix-b", appendix_b_suite(ab_ell, ab_t), as_json, out, err);
      if (v_bal->parsed()) return finish("verify balanced", balanced_suite(bal_ell, bal_t, bal_v), as_json, out, err);
      if (v_m6->parsed()) return finish("verify m6", structure_suite(6, m6_L), as_json, out, err);
      if (v_m9->parsed()) return finish("verify m9", structure_suite(9, m9_L), as_json, out, err);
      if (v_all->parsed()) {
        const std::vector<std::pair<std::string, std::function<Result()>>> suites{
            {"lemma32", [&] { return verify_lemma32(default_lemma); }},
            {"prop13", [] { return verify_prop13_suite(2, 200); }},
            {"tables", [] { return tables_suite(10); }},
            {"appendix-b", [] { return appendix_b_suite(12, 6); }},
            {"balanced", [] { return balanced_suite(7, 4, 20); }},
            {"m6", [] { return structure_suite(6, 18); }},
            {"m9", [] { return structure_suite(9, 16); }},
        };
        Result all;
        all.body = json::object();
        std::ostringstream text;
        for (const auto& [name, fn] : suites) {
          const Result r = fn();
          all.body[name] = json{{"exit_code", r.code}, {"result", r.body}};
          text << name << ": " << (r.code == kOk ? "pass" : "FAIL") << "\n";
          if (r.code != kOk && all.code == kOk) {
            all.code = r.code;
            all.failure = name + ": " + r.failure;
          }
        }
        all.text = text.str();
        return finish("verify all", all, as_json, out, err);
      }
    }

    if (c_search->parsed()) {
      const Graph g = load_graph(input);
      const auto res = contains_ham_power(g, s_m, budget);
      Result r;
      r.body = res;
      std::ostringstream text;
      text << to_string(res.verdict) << " (nodes expanded: " << res.nodes_expanded << ")\n";
      if (res.verdict == Verdict::found) text << "witness: " << join(res.witness) << "\n";
      if (res.verdict == Verdict::unknown) {
        r.code = kBudget;
        text << "budget of " << budget << " nodes exhausted\n";
      }
      if (!witness_out.empty() && res.verdict == Verdict::found) {
        std::ofstream w(witness_out);
        if (!w) throw std::runtime_error("cannot write " + witness_out);
        w << join(res.witness) << "\n";
      }
      r.text = text.str();
      return finish("search", r, as_json, out, err);
    }

    if (c_sweep->parsed()) {
      const auto cfg = read_config_file(config_path);
      for (const auto& w : cfg.validate()) err << "warning: " << w << "\n";
      const auto res = run_sweep(cfg, threads);
      if (!out_path.empty()) emit_csv(res, out_path);
      Result r;
      r.body = res;
      std::ostringstream text;
      write_csv(text, res);
      r.text = out_path.empty() ? text.str() : "wrote " + out_path + "\n";
      if (std::any_of(res.rows.begin(), res.rows.end(), [](const SweepRow& row) { return row.unknown > 0; }))
        err << "note: some trials exhausted the search budget (reported as unknown)\n";
      return finish("sweep", r, as_json, out, err);
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  err << app.help();
  return kUsage;
}

}  // namespace dpow::cli
