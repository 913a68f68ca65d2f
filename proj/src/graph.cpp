#include "dpow/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "dpow/philox.hpp"

namespace dpow {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (row(u)[v >> 6] >> (v & 63)) & 1u;
}

bool Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 0.." +
                            std::to_string(n_ - 1));
  if (has_edge(u, v)) return false;
  row_ptr(u)[v >> 6] |= Word{1} << (v & 63);
  row_ptr(v)[u >> 6] |= Word{1} << (u & 63);
  ++edge_count_;
  return true;
}

int Graph::degree(int v) const { return popcount(row(v)); }

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int GepsParams::patch_size() const { return static_cast<int>((eps * Rational(n)).floor().get_si()); }

void GepsParams::validate() const {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("G_eps needs a positive even n, got " + std::to_string(n));
  if (eps <= Rational(0) || eps > Rational(1, 4)) throw std::invalid_argument("G_eps needs eps in (0, 1/4], got " + eps.str());
  if (patch_size() < 1) throw std::invalid_argument("floor(eps*n) must be at least 1");
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_power(int v, int m) {
  if (v < 1 || m < 1) throw std::invalid_argument("path_power needs v >= 1 and m >= 1");
  Graph g(v);
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v && j - i <= m; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_power(int v, int m) {
  if (v < 3 || m < 1) throw std::invalid_argument("cycle_power needs v >= 3 and m >= 1");
  Graph g(v);
  for (int i = 0; i < v; ++i)
    for (int j = i + 1; j < v; ++j)
      if (std::min(j - i, v - (j - i)) <= m) g.add_edge(i, j);
  return g;
}

Graph g_eps(const GepsParams& params) {
  params.validate();
  const int n = params.n, half = n / 2, k = params.patch_size();
  Graph g(n);
  for (int x = 0; x < half; ++x)
    for (int y = half; y < n; ++y) g.add_edge(x, y);
  for (int u = 0; u < k; ++u)
    for (int x = k; x < half; ++x) {
      g.add_edge(u, x);
      g.add_edge(half + u, half + x);
    }
  return g;
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  Graph g(n);
  const PairUniforms uniform(seed, 0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform(u, v) < p) g.add_edge(u, v);
  return g;
}

Graph graph_union(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) throw std::invalid_argument("union of graphs with different vertex counts");
  Graph out = g;
  for (auto [u, v] : h.edges()) out.add_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.n() + h.n());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.n(), v + g.n());
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.n()) throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    if (seen[v]++) throw std::invalid_argument("induced_subgraph: duplicate vertex " + std::to_string(v));
  }
  const int k = static_cast<int>(vertices.size());
  Graph out(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
  return out;
}

namespace {

// Counts cliques of `remaining` more vertices drawn from `cand`, where every
// vertex of cand is adjacent to everything chosen so far and larger than it.
std::uint64_t count_from(const Graph& g, std::vector<Graph::Word>& pool, std::size_t offset, int remaining) {
  const int w = g.words();
  const Graph::Word* cand = pool.data() + offset;
  if (remaining == 1) return static_cast<std::uint64_t>(popcount({cand, static_cast<std::size_t>(w)}));
  std::uint64_t total = 0;
  const std::size_t next = offset + w;
  if (pool.size() < next + w) pool.resize(next + w);
  for (int wi = 0; wi < w; ++wi) {
    Graph::Word bits = pool[offset + wi];
    while (bits) {
      const int v = wi * 64 + std::countr_zero(bits);
      bits &= bits - 1;
      const auto row = g.row(v);
      bool any = false;
      for (int k = 0; k < w; ++k) {
        // keep only candidates above v so each clique is counted once
        Graph::Word keep = pool[offset + k] & row[k];
        if (k < (v >> 6)) keep = 0;
        else if (k == (v >> 6)) keep &= (v & 63) == 63 ? 0 : ~Graph::Word{0} << ((v & 63) + 1);
        pool[next + k] = keep;
        any |= keep != 0;
      }
      if (any) total += count_from(g, pool, next, remaining - 1);
    }
  }
  return total;
}

}  // namespace

std::uint64_t count_cliques(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("clique size must be >= 1");
  if (s == 1) return static_cast<std::uint64_t>(g.n());
  if (g.n() == 0) return 0;
  const int w = g.words();
  std::vector<Graph::Word> pool(static_cast<std::size_t>(w) * (s + 1), 0);
  for (int v = 0; v < g.n(); ++v) pool[v >> 6] |= Graph::Word{1} << (v & 63);
  return count_from(g, pool, 0, s);
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

Graph read_edge_list(std::istream& is) {
  long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) throw std::runtime_error("edge list: bad header, expected 'n m'");
  Graph g(static_cast<int>(n));
  for (long i = 0; i < m; ++i) {
    long u = 0, v = 0;
    if (!(is >> u >> v)) throw std::runtime_error("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_dot(std::ostream& os, const Graph& g) {
  os << "graph G {\n";
  for (int v = 0; v < g.n(); ++v) os << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
}

}  // namespace dpow
