#include <doctest.h>

#include <cmath>
#include <limits>

#include "dpow/braid.hpp"
#include "dpow/density.hpp"
#include "dpow/kernels.hpp"
#include "oracles.hpp"

using namespace dpow;

namespace {

Rational witness_density(const Graph& g, const std::vector<int>& w) {
  return Rational(induced_edges(g, w), static_cast<std::int64_t>(w.size()) - 1);
}

// Worker counts the parallel kernels must be insensitive to.
struct WorkerGuard {
  explicit WorkerGuard(int w) { set_worker_count(w); }
  ~WorkerGuard() { set_worker_count(0); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("lex order on equal-size masks") {
    CHECK(lex_less(0b0011, 0b0101));  // {0,1} < {0,2}
    CHECK(lex_less(0b0101, 0b0110));  // {0,2} < {1,2}
    CHECK_FALSE(lex_less(0b0110, 0b0101));
    CHECK_FALSE(lex_less(0b0110, 0b0110));
    for (Mask a = 0; a < 64; ++a)
      for (Mask b = 0; b < 64; ++b) {
        if (__builtin_popcountll(a) != __builtin_popcountll(b)) continue;
        CHECK(lex_less(a, b) == (mask_to_vertices(a) < mask_to_vertices(b)));
      }
  }
  TEST_CASE("subset profile: serial matches naive, parallel matches serial") {
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 2 + trial % 15;
      const Graph g = sample_gnp(n, 0.45, 500 + trial);
      const auto a = oracle::matrix(g);
      const auto ser = kernels::serial::subset_profile(g);
      for (int k = 0; k <= n; ++k) {
        // naive: best count and lex-least witness at size k
        std::int64_t best = -1;
        std::vector<int> wit;
        for (Mask m = 0; m < (Mask{1} << n); ++m) {
          if (__builtin_popcountll(m) != k) continue;
          const auto vs = mask_to_vertices(m);
          std::int64_t e = 0;
          for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) e += a[vs[i]][vs[j]];
          if (e > best || (e == best && vs < wit)) {
            best = e;
            wit = vs;
          }
        }
        REQUIRE(ser.max_edges[k] == best);
        REQUIRE(mask_to_vertices(ser.witness[k]) == wit);
      }
      for (int w : {1, 2, 3, 7}) {
        WorkerGuard guard(w);
        REQUIRE(kernels::omp::subset_profile(g) == ser);
      }
    }
    // big enough for the split into high chunks and Gray-code low bits
    const Graph big = braid({5, 3, 4, 1});
    const auto ser = kernels::serial::subset_profile(big);
    for (int w : {1, 2, 5}) {
      WorkerGuard guard(w);
      CHECK(kernels::omp::subset_profile(big) == ser);
    }
  }
  TEST_CASE("labeling minimum: serial, parallel, naive") {
    for (int m = 2; m <= 5; ++m)
      for (int L = 1; L <= 14; ++L) {
        std::uint64_t valid = 0;
        std::int64_t best = -1;
        Mask arg = 0;
        for (Mask mask = 0; mask < (Mask{1} << L); ++mask) {
          const auto lab = oracle::labels_of(mask, L);
          if (!oracle::no_long_run(lab, m)) continue;
          ++valid;
          const auto e = oracle::same_side_edges(lab, m);
          if (best < 0 || e < best) {
            best = e;
            arg = mask;
          }
        }
        const auto ser = kernels::serial::min_same_side_edges(m, L);
        REQUIRE(ser.valid == valid);
        REQUIRE(ser.min_edges == best);
        REQUIRE(ser.argmin == arg);
        for (int w : {1, 3}) {
          WorkerGuard guard(w);
          REQUIRE(kernels::omp::min_same_side_edges(m, L) == ser);
        }
      }
  }
  TEST_CASE("scan_labelings is schedule independent") {
    auto admit = [](Mask m) { return __builtin_popcountll(m) % 3 != 0; };
    auto bad = [](Mask m) { return (m & 0x2A5) == 0x2A5; };
    const auto ser = kernels::scan_labelings(14, admit, bad, Exec::serial);
    for (int w : {1, 2, 4}) {
      WorkerGuard guard(w);
      const auto par = kernels::scan_labelings(14, admit, bad, Exec::parallel);
      CHECK(par.admitted == ser.admitted);
      CHECK(par.first_violation == ser.first_violation);
    }
    REQUIRE(ser.first_violation);
    CHECK(*ser.first_violation == 0x2A5);
  }
  TEST_CASE("cap enforcement") {
    CHECK_THROWS(kernels::subset_profile(Graph(41)));
    CHECK_THROWS(max_density_brute(Graph(21)));
    CHECK_NOTHROW(max_density_brute(Graph(21), 21));
  }
}

TEST_SUITE("density") {
  TEST_CASE("one-density") {
    CHECK(one_density(complete_graph(6)) == Rational(3));
    CHECK(one_density(complete_graph(2)) == Rational(1));
    CHECK(one_density(braid({5, 3, 4, 1})) == Rational(58, 19));
    CHECK_THROWS(one_density(Graph(1)));
  }
  TEST_CASE("maximum density examples") {
    const auto r = max_density_brute(disjoint_union(complete_graph(4), complete_graph(3)));
    CHECK(r.value == Rational(2));
    CHECK(r.witness == std::vector<int>{0, 1, 2, 3});
    const Graph b = braid({4, 3, 3, 1});
    CHECK(max_density_brute(b).value == Rational(30, 11));
    CHECK(max_density_brute(b).witness.size() == 12);
    const auto e = max_density_brute(Graph(5));
    CHECK(e.value == Rational(0));
    CHECK(e.witness == std::vector<int>{0, 1});
    CHECK(max_density_opt(Graph(5)).value == Rational(0));
    CHECK(max_density_opt(complete_graph(5)).value == Rational(5, 2));
    CHECK(max_density_opt(path_power(12, 2)).value == Rational(21, 11));
    CHECK(max_density_brute(path_power(12, 2)).value == Rational(21, 11));
  }
  TEST_CASE("brute force and min-cut agree with naive enumeration") {
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 2 + trial % 13;
      const Graph g = sample_gnp(n, 0.15 + 0.012 * trial, 900 + trial);
      const auto want = oracle::max_density(oracle::matrix(g));
      const auto brute = max_density_brute(g);
      const auto opt = max_density_opt(g);
      REQUIRE(brute.value == want);
      REQUIRE(opt.value == want);
      REQUIRE(brute.witness.size() >= 2);
      REQUIRE(opt.witness.size() >= 2);
      REQUIRE(witness_density(g, brute.witness) == brute.value);
      REQUIRE(witness_density(g, opt.witness) == opt.value);
      CHECK(brute.method == DensityMethod::brute);
      CHECK(opt.method == DensityMethod::optimized);
    }
  }
  TEST_CASE("min-cut works past the brute-force cap") {
    const Graph b = braid({5, 3, 12, 1});  // 60 vertices
    CHECK(max_density_opt(b).value == d_t_formula(5, 3, 12));
    const Graph k = disjoint_union(braid({5, 1, 9, 1}), complete_graph(3));
    CHECK(max_density_opt(k).value == Rational(5, 2));
  }
  TEST_CASE("strict balance") {
    for (int ell = 2; ell <= 8; ++ell) CHECK(is_strictly_balanced(complete_graph(ell)).strictly_balanced);
    const auto kk = is_strictly_balanced(disjoint_union(complete_graph(4), complete_graph(4)));
    CHECK_FALSE(kk.strictly_balanced);
    CHECK(kk.best_proper == Rational(2));
    CHECK(kk.whole == Rational(12, 7));
    CHECK(is_strictly_balanced(braid({4, 3, 3, 1})).strictly_balanced);
    for (int v = 3; v <= 12; ++v) CHECK(is_strictly_balanced(path_power(v, 2)).strictly_balanced);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 3 + trial % 10;
      const Graph g = sample_gnp(n, 0.5, 1300 + trial);
      if (g.edge_count() == 0) continue;
      const auto a = oracle::matrix(g);
      const auto rep = is_strictly_balanced(g);
      REQUIRE(rep.strictly_balanced == (oracle::max_density(a, true) < one_density(g)));
      REQUIRE(rep.best_proper == oracle::max_density(a, true));
    }
  }
  TEST_CASE("d_t closed forms") {
    CHECK(d_t_formula(5, 3, 4) == Rational(58, 19));
    CHECK(d_t_rewritten(5, 3, 4) == Rational(58, 19));
    CHECK(braid_density_limit(5, 3) - Rational(28, 190) == Rational(58, 19));
    for (int ell = 2; ell <= 9; ++ell)
      for (int r = 1; r <= ell; ++r) {
        REQUIRE(d_t_formula(ell, r, 1) == Rational(ell, 2));
        for (int t = 1; t <= 8; ++t) {
          REQUIRE(d_t_formula(ell, r, t) == d_t_rewritten(ell, r, t));
          REQUIRE(d_t_formula(ell, r, t) == one_density(braid({ell, r, t, 1})));
          if (ell == r || ell == r + 1)
            REQUIRE(d_t_formula(ell, r, t) == Rational(r) - Rational(choose2(r), std::int64_t{t} * ell - 1));
        }
        if (ell < r * (r + 1))
          for (int t = 1; t <= 50; ++t) {
            REQUIRE(d_t_formula(ell, r, t + 1) > d_t_formula(ell, r, t));
            REQUIRE(d_t_formula(ell, r, t) < braid_density_limit(ell, r));
          }
      }
  }
  TEST_CASE("braid maximum densities follow the two regimes") {
    for (int ell = 2; ell <= 6; ++ell)
      for (int r = 1; r <= ell; ++r)
        for (int t = 2; t <= 6 && t * ell <= 16; ++t) {
          const Graph b = braid({ell, r, t, 1});
          const auto rep = max_density_brute(b);
          if (ell < r * (r + 1)) {
            REQUIRE(rep.value == d_t_formula(ell, r, t));
            REQUIRE(is_strictly_balanced(b).strictly_balanced);
          } else {
            REQUIRE(rep.value == Rational(ell, 2));
            REQUIRE(rep.witness.size() == static_cast<std::size_t>(ell));
            REQUIRE(induced_edges(b, rep.witness) == choose2(ell));
          }
        }
    const auto rep = verify_braid_densities(6, 3, 14);
    CHECK(rep.all_pass);
    CHECK_FALSE(rep.rows.empty());
  }
  TEST_CASE("Psi and Phi") {
    const double n = 1000, p = 0.01;
    const Graph edge = complete_graph(2);
    const auto e = psi_phi(edge, n, p);
    CHECK(e.log_psi == doctest::Approx(std::log(n * n * p)));
    CHECK(e.log_phi == doctest::Approx(std::log(n * n * p)));
    // naive minimum over every (vertex subset, edge subset) of a small graph
    for (int trial = 0; trial < 12; ++trial) {
      const Graph g = sample_gnp(5 + trial % 2, 0.5, 40 + trial);
      if (g.edge_count() == 0) continue;
      const auto a = oracle::matrix(g);
      const double ln = std::log(50.0), lp = std::log(0.05 + 0.07 * trial);
      double best = std::numeric_limits<double>::infinity();
      const int vn = g.n();
      for (Mask vs = 0; vs < (Mask{1} << vn); ++vs) {
        std::vector<Edge> inside;
        for (int u = 0; u < vn; ++u)
          for (int v = u + 1; v < vn; ++v)
            if ((vs >> u & 1) && (vs >> v & 1) && a[u][v]) inside.emplace_back(u, v);
        for (Mask es = 1; es < (Mask{1} << inside.size()); ++es)
          best = std::min(best, __builtin_popcountll(vs) * ln + __builtin_popcountll(es) * lp);
      }
      const auto rep = psi_phi_log(g, ln, lp);
      REQUIRE(rep.log_phi == doctest::Approx(best));
      REQUIRE(rep.log_psi == doctest::Approx(vn * ln + static_cast<double>(g.edge_count()) * lp));
    }
    // braid at p = C n^(-1/d_t): every subgraph has Phi >= C n
    for (auto [ell, r] : std::vector<std::pair<int, int>>{{4, 3}, {5, 3}, {3, 2}}) {
      const int t = 3;
      const Graph b = braid({ell, r, t, 1});
      const double d = d_t_formula(ell, r, t).to_double();
      for (double logn : {10.0, 20.0, 40.0})
        for (double C : {1.0, 3.0}) {
          const auto rep = psi_phi_log(b, logn, std::log(C) - logn / d);
          CHECK(rep.log_phi >= std::log(C) + logn - 1e-9);
        }
    }
    // a disconnected graph with a component of Psi > 1 never attains Phi at the whole
    const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
    const auto rep = psi_phi_log(two, std::log(100.0), std::log(0.5));
    CHECK(rep.argmin_vertices < 6);
    CHECK_THROWS(psi_phi(Graph(4), 10, 0.5));
    CHECK_THROWS(psi_phi(edge, 10, 1.0));
    CHECK_THROWS(psi_phi(edge, 10, 0.0));
  }
  TEST_CASE("balance polynomials") {
    CHECK(appendix_b_f(4, 3, 2, 0) == 12);
    for (int ell = 3; ell <= 12; ++ell)
      for (int r = 1; r < ell; ++r)
        for (int t = 2; t <= 6; ++t) {
          // f(.,0) = (ell-1)(r(r+1)-ell)/2, times 1 after clearing denominators
          REQUIRE(2 * appendix_b_f(ell, r, t, 0) == mpz_class((ell - 1) * (r * (r + 1) - ell)));
          for (int x = 0; x <= ell; ++x)
            REQUIRE(2 * appendix_b_g(ell, r, t, x) == (ell - x) * appendix_b_h(ell, r, t, x));
        }
    const auto rep = verify_appendix_b(5, 3, 3);
    CHECK(rep.all_positive);
    CHECK(rep.factorisation_holds);
    CHECK(rep.h_increasing);
    CHECK(rep.rows.size() == 5);
    CHECK_THROWS_AS(verify_appendix_b(4, 3, 2), std::domain_error);  // r = ell - 1
    CHECK_THROWS_AS(verify_appendix_b(6, 2, 2), std::domain_error);  // ell = r(r+1)
    CHECK_THROWS_AS(verify_appendix_b(5, 3, 1), std::domain_error);
    const auto sweep = verify_appendix_b_range(12, 6);
    CHECK(sweep.all_pass);
    CHECK_FALSE(sweep.interior.empty());
    CHECK(sweep.boundary.size() == 15);  // ell in {2, 6, 12}, t in 2..6
  }
}
