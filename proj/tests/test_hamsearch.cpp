#include <doctest.h>

#include <algorithm>
#include <random>

#include "dpow/braid.hpp"
#include "dpow/hamsearch.hpp"
#include "oracles.hpp"

using namespace dpow;

TEST_SUITE("hamsearch") {
  TEST_CASE("small graphs against permutation scan") {
    std::mt19937_64 rng(99);
    int found = 0, missing = 0;
    for (int it = 0; it < 400; ++it) {
      const int m = 1 + static_cast<int>(rng() % 3);
      const int n = m + 2 + static_cast<int>(rng() % (9 - m));
      const double p = 0.4 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
      const Graph g = sample_gnp(n, p, rng());
      const auto res = contains_ham_power(g, m);
      const bool want = oracle::contains_ham_power(oracle::matrix(g), m);
      REQUIRE(res.verdict != Verdict::unknown);
      REQUIRE((res.verdict == Verdict::found) == want);
      if (want) {
        ++found;
        REQUIRE(res.witness.size() == static_cast<std::size_t>(n));
        REQUIRE(res.witness.front() == 0);
        REQUIRE(verify_witness(g, m, res.witness));
      } else {
        ++missing;
      }
    }
    CHECK(found > 20);
    CHECK(missing > 20);
  }
  TEST_CASE("n = 10 spot checks") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const Graph g = sample_gnp(10, 0.8, 4242 + seed);
      for (int m = 1; m <= 3; ++m) {
        const bool want = oracle::contains_ham_power(oracle::matrix(g), m);
        REQUIRE((contains_ham_power(g, m).verdict == Verdict::found) == want);
      }
    }
  }
  TEST_CASE("n = 16 augmented graphs against the subset table") {
    // dense near-bipartite hosts where the backtracking phase alone stalls
    const Graph base = g_eps({16, Rational(1, 12)});
    int found = 0, total = 0, long_runs = 0;
    for (int pi = 1; pi <= 9; pi += 2)
      for (std::uint64_t t = 0; t < 4; ++t, ++total) {
        const Graph g = graph_union(base, sample_gnp(16, pi / 10.0, 77 + t));
        const auto res = contains_ham_power(g, 2);
        REQUIRE(res.verdict != Verdict::unknown);
        const bool want = oracle::contains_ham_square(oracle::matrix(g));
        REQUIRE((res.verdict == Verdict::found) == want);
        found += want;
        long_runs += res.nodes_expanded > 20000;
      }
    CHECK(long_runs > 0);  // the exact table phase ran at least once
    CHECK(found > 0);
    CHECK(found < total);
    // Hamiltonian cycles on sparse hosts, against a (set, end) table
    for (std::uint64_t t = 0; t < 12; ++t) {
      const Graph g = sample_gnp(16, 0.18 + 0.01 * t, 600 + t);
      const auto a = oracle::matrix(g);
      const int n = 16;
      std::vector<char> ok((std::size_t{1} << n) * n, 0);
      ok[1 * n + 0] = 1;
      for (std::uint32_t mask = 1; mask < (1u << n); mask += 2)
        for (int v = 0; v < n; ++v)
          if (ok[mask * n + v])
            for (int w = 0; w < n; ++w)
              if (!(mask >> w & 1) && a[v][w]) ok[(mask | 1u << w) * n + w] = 1;
      bool want = false;
      for (int v = 1; v < n; ++v) want = want || (ok[((1u << n) - 1) * n + v] && a[v][0]);
      const auto res = contains_ham_power(g, 1);
      REQUIRE(res.verdict != Verdict::unknown);
      REQUIRE((res.verdict == Verdict::found) == want);
    }
  }
  TEST_CASE("named graphs") {
    CHECK(contains_ham_power(complete_graph(7), 3).verdict == Verdict::found);
    const auto cp = contains_ham_power(cycle_power(12, 2), 2);
    CHECK(cp.verdict == Verdict::found);
    CHECK(verify_witness(cycle_power(12, 2), 2, cp.witness));
    CHECK(contains_ham_power(cycle_power(40, 3), 3).verdict == Verdict::found);
    CHECK(contains_ham_power(path_power(12, 2), 2).verdict == Verdict::not_found);
    CHECK(contains_ham_power(cycle_power(12, 2), 3).verdict == Verdict::not_found);
    CHECK(contains_ham_power(g_eps({12, Rational(1, 12)}), 2).verdict == Verdict::not_found);
    CHECK(contains_ham_power(disjoint_union(complete_graph(5), complete_graph(5)), 1).verdict ==
          Verdict::not_found);
    // n <= 2m+1: only the complete graph qualifies
    Graph k = complete_graph(7);
    CHECK(contains_ham_power(k, 3).verdict == Verdict::found);
    Graph almost(7);
    for (auto [u, v] : k.edges())
      if (!(u == 2 && v == 5)) almost.add_edge(u, v);
    CHECK(contains_ham_power(almost, 3).verdict == Verdict::not_found);
    CHECK_THROWS(contains_ham_power(complete_graph(4), 3));
  }
  TEST_CASE("degree rule") {
    // min degree < 2m is an immediate no, before any search
    Graph g = complete_graph(12);
    Graph h(12);
    for (auto [u, v] : g.edges())
      if (u != 0 || v > 3) h.add_edge(u, v);
    CHECK(h.degree(0) == 8);
    const auto res = contains_ham_power(h, 5);
    CHECK(res.verdict == Verdict::not_found);
    CHECK(res.nodes_expanded == 0);
  }
  TEST_CASE("monotone under adding edges") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 40; ++it) {
      const int n = 7 + it % 3;
      Graph g = sample_gnp(n, 0.7, rng());
      auto before = contains_ham_power(g, 2).verdict;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v) || rng() % 3) continue;
          g.add_edge(u, v);
          const auto after = contains_ham_power(g, 2).verdict;
          if (before == Verdict::found) REQUIRE(after == Verdict::found);
          before = after;
        }
    }
  }
  TEST_CASE("witness checks") {
    const Graph c = cycle_power(8, 2);
    CHECK(verify_witness(c, 2, {0, 1, 2, 3, 4, 5, 6, 7}));
    CHECK_FALSE(verify_witness(c, 2, {0, 2, 1, 3, 4, 5, 6, 7}));
    CHECK_THROWS(verify_witness(c, 2, {0, 1, 2}));
    CHECK_THROWS(verify_witness(c, 2, {0, 1, 2, 3, 4, 5, 6, 6}));
  }
  TEST_CASE("budget gives Unknown") {
    const Graph g = sample_gnp(30, 0.55, 11);
    const auto res = contains_ham_power(g, 3, 5);
    CHECK(res.verdict == Verdict::unknown);
    CHECK(res.nodes_expanded <= 6);
    CHECK(to_string(Verdict::unknown) == "Unknown");
    CHECK(to_string(Verdict::not_found) == "NotFound");
  }
}
