#include "dpow/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dpow {

namespace {
std::atomic<int> g_workers{0};

void require_small(const Graph& g) {
  if (g.n() > kernels::kSubsetHardCap)
    throw std::invalid_argument("subset scan over " + std::to_string(g.n()) + " vertices exceeds the hard cap of " +
                                std::to_string(kernels::kSubsetHardCap));
}

std::vector<Mask> single_word_rows(const Graph& g) {
  std::vector<Mask> rows(static_cast<std::size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v) rows[v] = g.row(v)[0];
  return rows;
}

kernels::SubsetProfile empty_profile(int n) {
  kernels::SubsetProfile p;
  p.max_edges.assign(static_cast<std::size_t>(n) + 1, -1);
  p.witness.assign(static_cast<std::size_t>(n) + 1, 0);
  return p;
}

inline void offer(kernels::SubsetProfile& p, int k, std::int64_t e, Mask mask) {
  auto& best = p.max_edges[k];
  if (e > best || (e == best && lex_less(mask, p.witness[k]))) {
    best = e;
    p.witness[k] = mask;
  }
}

}  // namespace

int worker_count() {
  if (int w = g_workers.load(); w > 0) return w;
  if (const char* env = std::getenv("DPOW_NUM_THREADS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_count(int workers) { g_workers.store(workers); }

std::vector<int> mask_to_vertices(Mask mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

Mask vertices_to_mask(const std::vector<int>& vertices) {
  Mask m = 0;
  for (int v : vertices) m |= Mask{1} << v;
  return m;
}

namespace kernels {

std::int64_t same_side_edges(Mask mask, int L, int m) {
  std::int64_t total = 0;
  for (int d = 1; d <= m && d < L; ++d) {
    const Mask window = (L - d) >= 64 ? ~Mask{0} : ((Mask{1} << (L - d)) - 1);
    total += (L - d) - std::popcount((mask ^ (mask >> d)) & window);
  }
  return total;
}

bool valid_labeling(Mask mask, int L, int m) {
  if (L <= m) return true;
  // bit i of `same` set iff labels i and i+1 agree
  const Mask window = (Mask{1} << (L - 1)) - 1;
  const Mask same = ~(mask ^ (mask >> 1)) & window;
  Mask run = same;
  for (int k = 1; k < m; ++k) run &= same >> k;
  return run == 0;
}

namespace serial {

SubsetProfile subset_profile(const Graph& g) {
  require_small(g);
  const int n = g.n();
  const auto rows = single_word_rows(g);
  SubsetProfile p = empty_profile(n);
  const Mask total = Mask{1} << n;
  for (Mask mask = 0; mask < total; ++mask) {
    std::int64_t twice = 0;
    for (Mask rest = mask; rest; rest &= rest - 1) twice += std::popcount(rows[std::countr_zero(rest)] & mask);
    offer(p, std::popcount(mask), twice / 2, mask);
  }
  return p;
}

LabelingMinimum min_same_side_edges(int m, int L) {
  LabelingMinimum out;
  const Mask total = Mask{1} << L;
  for (Mask mask = 0; mask < total; ++mask) {
    if (!valid_labeling(mask, L, m)) continue;
    ++out.valid;
    const auto e = same_side_edges(mask, L, m);
    if (out.min_edges < 0 || e < out.min_edges) {
      out.min_edges = e;
      out.argmin = mask;
    }
  }
  return out;
}

}  // namespace serial

namespace omp {

// Chunks fix the high bits; the low bits are walked in Gray-code order so
// each step updates the induced edge count with one popcount.
SubsetProfile subset_profile(const Graph& g) {
  require_small(g);
  const int n = g.n();
  const auto rows = single_word_rows(g);
  const int low_bits = std::min(n, 14);
  const std::int64_t chunks = std::int64_t{1} << (n - low_bits);
  const Mask steps = Mask{1} << low_bits;
  std::vector<SubsetProfile> partial;

#pragma omp parallel num_threads(worker_count())
  {
#pragma omp single
    {
#ifdef _OPENMP
      partial.assign(static_cast<std::size_t>(omp_get_num_threads()), empty_profile(n));
#else
      partial.assign(1, empty_profile(n));
#endif
    }
#ifdef _OPENMP
    SubsetProfile& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#else
    SubsetProfile& mine = partial[0];
#endif
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      Mask mask = static_cast<Mask>(c) << low_bits;
      std::int64_t twice = 0;
      for (Mask rest = mask; rest; rest &= rest - 1) twice += std::popcount(rows[std::countr_zero(rest)] & mask);
      std::int64_t edges = twice / 2;
      offer(mine, std::popcount(mask), edges, mask);
      for (Mask i = 1; i < steps; ++i) {
        const int v = std::countr_zero(i);
        const Mask bit = Mask{1} << v;
        if (mask & bit) {
          mask ^= bit;
          edges -= std::popcount(rows[v] & mask);
        } else {
          edges += std::popcount(rows[v] & mask);
          mask ^= bit;
        }
        offer(mine, std::popcount(mask), edges, mask);
      }
    }
  }

  SubsetProfile out = empty_profile(n);
  for (const auto& p : partial)
    for (int k = 0; k <= n; ++k)
      if (p.max_edges[k] >= 0) offer(out, k, p.max_edges[k], p.witness[k]);
  return out;
}

LabelingMinimum min_same_side_edges(int m, int L) {
  if (L > 40) throw std::invalid_argument("labeling scan length above 40");
  const std::int64_t total = std::int64_t{1} << L;
  std::uint64_t valid = 0;
  // (edges, mask) packed so one integer min-reduction picks the minimum count
  // and then the smallest mask
  std::uint64_t best = ~std::uint64_t{0};
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : valid) reduction(min : best) num_threads(worker_count())
  for (std::int64_t i = 0; i < total; ++i) {
    const auto mask = static_cast<Mask>(i);
    if (!valid_labeling(mask, L, m)) continue;
    ++valid;
    const auto key = (static_cast<std::uint64_t>(same_side_edges(mask, L, m)) << L) | mask;
    best = std::min(best, key);
  }
  LabelingMinimum out;
  out.valid = valid;
  if (valid > 0) {
    out.min_edges = static_cast<std::int64_t>(best >> L);
    out.argmin = best & ((Mask{1} << L) - 1);
  }
  return out;
}

}  // namespace omp

SubsetProfile subset_profile(const Graph& g, Exec exec) {
  return exec == Exec::serial ? serial::subset_profile(g) : omp::subset_profile(g);
}

LabelingMinimum min_same_side_edges(int m, int L, Exec exec) {
  return exec == Exec::serial ? serial::min_same_side_edges(m, L) : omp::min_same_side_edges(m, L);
}

}  // namespace kernels
}  // namespace dpow
