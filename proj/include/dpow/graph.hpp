#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dpow/rational.hpp"

namespace dpow {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency is kept as dense incidence rows (one bit per vertex) so that
/// neighbourhood intersection is a word-wise AND. Desk-scale n (a few
/// hundred) keeps the n^2/8 bytes trivial.
class Graph {
 public:
  using Word = std::uint64_t;

  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::int64_t edge_count() const { return edge_count_; }
  int words() const { return words_; }

  bool has_edge(int u, int v) const;
  /// Inserts {u, v}; returns false if it was already present. Throws on
  /// self-loops or out-of-range endpoints.
  bool add_edge(int u, int v);

  std::span<const Word> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  int degree(int v) const;
  int min_degree() const;

  /// Sorted (u < v, lexicographic) edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  Word* row_ptr(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<Word> bits_;
};

/// G_eps parameters: even n, eps in (0, 1/4] with floor(eps n) >= 1.
struct GepsParams {
  int n = 0;
  Rational eps;

  /// floor(eps * n); the common size of U and W.
  int patch_size() const;
  void validate() const;
};

Graph complete_graph(int n);
/// m-th power of the path 0-1-...-(v-1).
Graph path_power(int v, int m);
/// m-th power of the cycle 0-1-...-(v-1)-0.
Graph cycle_power(int v, int m);
/// Complete bipartite X x Y plus U x (X\U) and W x (Y\W); X = 0..n/2-1,
/// Y = n/2..n-1, U and W are the first floor(eps n) vertices of each side.
Graph g_eps(const GepsParams& params);
/// Binomial random graph: pair {u,v} present iff its Philox uniform is < p.
Graph sample_gnp(int n, double p, std::uint64_t seed);
Graph graph_union(const Graph& g, const Graph& h);
/// Disjoint union; vertices of h are shifted by g.n().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Relabels vertices[i] -> i.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

std::uint64_t count_cliques(const Graph& g, int s);

// Edge-list text format: "n m" then one "u v" line per edge, u < v.
void write_edge_list(std::ostream& os, const Graph& g);
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& is);
Graph read_edge_list_file(const std::string& path);
void write_dot(std::ostream& os, const Graph& g);

/// Bit tricks shared by the kernels.
inline int popcount(std::span<const Graph::Word> words) {
  int c = 0;
  for (auto w : words) c += std::popcount(w);
  return c;
}

}  // namespace dpow
