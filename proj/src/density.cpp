#include "dpow/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "dpow/braid.hpp"

namespace dpow {

namespace {

void check_cap(const Graph& g, int cap) {
  if (cap > kernels::kSubsetHardCap) cap = kernels::kSubsetHardCap;
  if (g.n() > cap)
    throw std::invalid_argument("graph has " + std::to_string(g.n()) + " vertices, above the brute-force cap of " +
                                std::to_string(cap));
}

// a/b > c/d for positive b, d.
bool ratio_greater(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d > c * b; }

// Densest entry of a subset profile over sizes [2, k_max]; smallest size wins
// ties, and within a size the profile already holds the lex-least witness.
int densest_size(const kernels::SubsetProfile& p, int k_max) {
  int best = -1;
  for (int k = 2; k <= k_max; ++k) {
    if (p.max_edges[k] < 0) continue;
    if (best < 0 || ratio_greater(p.max_edges[k], k - 1, p.max_edges[best], best - 1)) best = k;
  }
  return best;
}

/// Dinic max-flow on an int64 network.
class FlowNetwork {
 public:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  explicit FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

  void add_arc(int from, int to, std::int64_t cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (std::int64_t pushed = dfs(s, t, kInf)) flow += pushed;
    }
    return flow;
  }

  /// Nodes reachable from s in the residual network (after max_flow).
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          stack.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& a = iter_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

struct ClosureResult {
  std::int64_t value;  // q*e(S) - p*|S| + p, i.e. q * (e(S) - lambda(|S|-1))
  std::vector<int> vertices;
};

// max over S containing `forced` of q*e(S) - p*(|S|-1).
ClosureResult max_closure_with(const Graph& g, const std::vector<Edge>& edges, std::int64_t p, std::int64_t q,
                               int forced) {
  const int n = g.n();
  const int source = 0, sink = 1, vbase = 2, ebase = 2 + n;
  FlowNetwork net(ebase + static_cast<int>(edges.size()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int node = ebase + static_cast<int>(i);
    net.add_arc(source, node, q);
    net.add_arc(node, vbase + edges[i].first, FlowNetwork::kInf);
    net.add_arc(node, vbase + edges[i].second, FlowNetwork::kInf);
  }
  for (int v = 0; v < n; ++v) net.add_arc(vbase + v, sink, p);
  net.add_arc(source, vbase + forced, FlowNetwork::kInf);
  const std::int64_t cut = net.max_flow(source, sink);
  ClosureResult out;
  out.value = q * static_cast<std::int64_t>(edges.size()) - cut + p;
  const auto side = net.source_side(source);
  for (int v = 0; v < n; ++v)
    if (side[vbase + v]) out.vertices.push_back(v);
  return out;
}

}  // namespace

std::string to_string(DensityMethod m) { return m == DensityMethod::brute ? "brute" : "optimized"; }

Rational one_density(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("1-density needs at least 2 vertices");
  return Rational(g.edge_count(), g.n() - 1);
}

std::int64_t induced_edges(const Graph& g, const std::vector<int>& vertices) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) e += g.has_edge(vertices[i], vertices[j]);
  return e;
}

DensityReport max_density_brute(const Graph& g, int cap, Exec exec) {
  if (g.n() < 2) throw std::invalid_argument("max density needs at least 2 vertices");
  check_cap(g, cap);
  const auto profile = kernels::subset_profile(g, exec);
  const int k = densest_size(profile, g.n());
  DensityReport r;
  r.value = Rational(profile.max_edges[k], k - 1);
  r.witness = mask_to_vertices(profile.witness[k]);
  r.method = DensityMethod::brute;
  return r;
}

DensityReport max_density_opt(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw std::invalid_argument("max density needs at least 2 vertices");
  const auto edges = g.edges();
  std::int64_t p = 0, q = 1;
  std::vector<int> witness{0, 1};
  for (;;) {
    ClosureResult best{0, {}};
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 0 && p > 0) continue;  // S containing an isolated vertex only loses
      auto c = max_closure_with(g, edges, p, q, v);
      if (c.value > best.value) best = std::move(c);
    }
    if (best.value <= 0) break;
    const auto k = static_cast<std::int64_t>(best.vertices.size());
    const std::int64_t e = induced_edges(g, best.vertices);
    // strict increase: e/(k-1) > p/q
    if (!(k >= 2 && e * q > p * (k - 1))) throw std::logic_error("Dinkelbach step failed to increase lambda");
    p = e;
    q = k - 1;
    witness = std::move(best.vertices);
  }
  DensityReport r;
  r.value = Rational(p, q);
  r.witness = std::move(witness);
  r.method = DensityMethod::optimized;
  return r;
}

BalanceReport is_strictly_balanced(const Graph& g, int cap, Exec exec) {
  if (g.n() < 2) throw std::invalid_argument("strict balance needs at least 2 vertices");
  check_cap(g, cap);
  BalanceReport r;
  r.whole = one_density(g);
  if (g.n() == 2) {
    r.strictly_balanced = true;
    r.best_proper = r.whole;
    return r;
  }
  const auto profile = kernels::subset_profile(g, exec);
  const int k = densest_size(profile, g.n() - 1);
  r.best_proper = Rational(profile.max_edges[k], k - 1);
  r.witness = mask_to_vertices(profile.witness[k]);
  r.strictly_balanced = r.best_proper < r.whole;
  return r;
}

Rational d_t_formula(int ell, int r, int t) {
  if (ell < 2 || r < 1 || r > ell || t < 1) throw std::invalid_argument("invalid braid parameters for d_t");
  return Rational(t * choose2(ell) + (t - 1) * choose2(r + 1), static_cast<std::int64_t>(t) * ell - 1);
}

Rational braid_density_limit(int ell, int r) {
  if (ell < 2 || r < 1 || r > ell) throw std::invalid_argument("invalid braid parameters");
  return Rational(choose2(ell) + choose2(r + 1), ell);
}

Rational d_t_rewritten(int ell, int r, int t) {
  if (ell < 2 || r < 1 || r > ell || t < 1) throw std::invalid_argument("invalid braid parameters for d_t");
  const std::int64_t l = ell;
  return braid_density_limit(ell, r) - Rational((l - 1) * (std::int64_t{r} * (r + 1) - l), 2 * l * (t * l - 1));
}

PsiPhiReport psi_phi(const Graph& g, double n, double p, int cap) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("psi/phi needs p in (0,1)");
  if (!(n > 0.0)) throw std::invalid_argument("psi/phi needs n > 0");
  return psi_phi_log(g, std::log(n), std::log(p), cap);
}

PsiPhiReport psi_phi_log(const Graph& g, double log_n, double log_p, int cap) {
  if (!(log_p < 0.0)) throw std::invalid_argument("psi/phi needs p < 1");
  if (g.edge_count() == 0) throw std::invalid_argument("Phi is defined for graphs with at least one edge");
  check_cap(g, cap);
  PsiPhiReport r;
  r.log_psi = g.n() * log_n + static_cast<double>(g.edge_count()) * log_p;
  const auto profile = kernels::subset_profile(g);
  int best = -1;
  double best_log = 0;
  for (int k = 2; k <= g.n(); ++k) {
    const auto e = profile.max_edges[k];
    if (e <= 0) continue;
    const double value = k * log_n + static_cast<double>(e) * log_p;
    // relative tolerance so near-equal profiles resolve to the smaller size
    if (best < 0 || value < best_log - 1e-12 * std::max(1.0, std::abs(best_log))) {
      best = k;
      best_log = value;
    }
  }
  r.log_phi = best_log;
  r.argmin_vertices = best;
  r.argmin_edges = profile.max_edges[best];
  r.argmin = mask_to_vertices(profile.witness[best]);
  return r;
}

mpz_class appendix_b_f(int ell, int r, int t, int x) {
  const mpz_class l = ell, rr = r, tt = t, xx = x;
  const mpz_class cl = choose2(ell), cr = choose2(r + 1);
  return (tt * cl + (tt - 1) * cr) * ((tt - 1) * l + xx - 1) - ((tt - 1) * cl + (tt - 2) * cr + rr * xx) * (tt * l - 1);
}

mpz_class appendix_b_g(int ell, int r, int t, int x) {
  const mpz_class l = ell, tt = t, xx = x;
  const mpz_class cl = choose2(ell), cr = choose2(r + 1), cx = choose2(x);
  return (tt * cl + (tt - 1) * cr) * ((tt - 1) * l + xx - 1) - ((tt - 1) * cl + (tt - 1) * cr + cx) * (tt * l - 1);
}

mpz_class appendix_b_h(int ell, int r, int t, int x) {
  const mpz_class l = ell, rr = r, tt = t, xx = x;
  return l * tt * xx - rr * rr * tt + rr * rr - rr * tt - l + rr - xx + 1;
}

AppendixBReport verify_appendix_b(int ell, int r, int t) {
  if (t < 2 || r < 1 || !(r < ell - 1) || !(r * (r + 1) > ell))
    throw std::domain_error("appendix-B domain needs t >= 2, 1 <= r < ell-1, r(r+1) > ell");
  AppendixBReport rep;
  rep.all_positive = true;
  rep.factorisation_holds = true;
  rep.h_increasing = true;
  for (int x = 0; x <= r; ++x) {
    AppendixBRow row;
    row.x = x;
    row.which = 'f';
    row.value = appendix_b_f(ell, r, t, x);
    row.positive = row.value > 0;
    rep.all_positive = rep.all_positive && row.positive;
    rep.rows.push_back(std::move(row));
  }
  mpz_class prev_h;
  for (int x = r + 1; x <= ell - 1; ++x) {
    AppendixBRow row;
    row.x = x;
    row.which = 'g';
    row.value = appendix_b_g(ell, r, t, x);
    row.h = appendix_b_h(ell, r, t, x);
    row.positive = row.value > 0 && row.h > 0;
    if (2 * row.value != (ell - x) * row.h) rep.factorisation_holds = false;
    if (x > r + 1 && !(row.h > prev_h)) rep.h_increasing = false;
    prev_h = row.h;
    rep.all_positive = rep.all_positive && row.positive;
    rep.rows.push_back(std::move(row));
  }
  rep.all_positive = rep.all_positive && rep.factorisation_holds && rep.h_increasing;
  return rep;
}

BraidDensityReport verify_braid_densities(int ell_max, int t_max, int v_max, Exec exec) {
  BraidDensityReport rep;
  for (int ell = 2; ell <= ell_max; ++ell)
    for (int r = 1; r <= ell; ++r)
      for (int t = 2; t <= t_max && t * ell <= v_max; ++t) {
        const Graph b = braid({ell, r, t, 1});
        const auto profile = kernels::subset_profile(b, exec);
        const int n = b.n();
        const int k_all = densest_size(profile, n);
        const int k_proper = densest_size(profile, n - 1);
        BraidDensityRow row;
        row.ell = ell;
        row.r = r;
        row.t = t;
        row.brute = Rational(profile.max_edges[k_all], k_all - 1);
        row.balanced_regime = ell < r * (r + 1);
        row.expected = row.balanced_regime ? d_t_formula(ell, r, t) : Rational(ell, 2);
        row.strictly_balanced = Rational(profile.max_edges[k_proper], k_proper - 1) < one_density(b);
        row.pass = row.brute == row.expected && (!row.balanced_regime || row.strictly_balanced);
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
      }
  return rep;
}

AppendixBSweep verify_appendix_b_range(int ell_max, int t_max) {
  if (t_max < 2) throw std::invalid_argument("appendix-B sweep needs t_max >= 2");
  AppendixBSweep rep;
  for (int r = 1; r * (r + 1) <= ell_max || r + 2 <= ell_max; ++r)
    for (int t = 2; t <= t_max; ++t) {
      for (int ell = r + 2; ell < r * (r + 1) && ell <= ell_max; ++ell) {
        const auto b = verify_appendix_b(ell, r, t);
        AppendixBCase c{ell, r, t, b.all_positive};
        rep.all_pass = rep.all_pass && c.pass;
        rep.interior.push_back(c);
      }
      if (r * (r + 1) <= ell_max) {
        AppendixBCase c{r * (r + 1), r, t, appendix_b_f(r * (r + 1), r, t, 0) == 0};
        rep.all_pass = rep.all_pass && c.pass;
        rep.boundary.push_back(c);
      }
    }
  return rep;
}

}  // namespace dpow
