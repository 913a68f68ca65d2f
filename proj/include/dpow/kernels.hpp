#pragma once

// Data-parallel inner loops. Every kernel has a straightforward serial
// reference in kernels::serial, kept for tests and benchmarks, and an OpenMP
// version in kernels::omp that must return bit-identical results for any
// thread count.

#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dpow/graph.hpp"

namespace dpow {

enum class Exec { serial, parallel };

/// Worker count for the OpenMP kernels: set_worker_count() if called with a
/// positive value, else $DPOW_NUM_THREADS, else the OpenMP default. Affects
/// speed only.
int worker_count();
void set_worker_count(int workers);

/// Subsets of 0..L-1 (or of a graph's vertex set) as bitmasks.
using Mask = std::uint64_t;

/// True iff a precedes b in lexicographic order of their sorted element
/// lists (equal sizes assumed).
constexpr bool lex_less(Mask a, Mask b) {
  const Mask d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

std::vector<int> mask_to_vertices(Mask mask);
Mask vertices_to_mask(const std::vector<int>& vertices);

namespace kernels {

/// Largest vertex count accepted by the exhaustive subset kernels.
inline constexpr int kSubsetHardCap = 40;

/// For each subset size k (index 0..n): the maximum number of induced edges
/// over k-subsets and the lexicographically least subset attaining it.
struct SubsetProfile {
  std::vector<std::int64_t> max_edges;
  std::vector<Mask> witness;
  friend bool operator==(const SubsetProfile&, const SubsetProfile&) = default;
};

/// Result of scanning all 2^L A/B labelings of a path (bit i set = B).
struct LabelingMinimum {
  std::uint64_t valid = 0;     // labelings with no m+1 equal consecutive labels
  std::int64_t min_edges = -1; // minimum same-side edge count over them
  Mask argmin = 0;             // smallest mask attaining it
  friend bool operator==(const LabelingMinimum&, const LabelingMinimum&) = default;
};

namespace serial {
SubsetProfile subset_profile(const Graph& g);
LabelingMinimum min_same_side_edges(int m, int L);
}  // namespace serial

namespace omp {
SubsetProfile subset_profile(const Graph& g);
LabelingMinimum min_same_side_edges(int m, int L);
}  // namespace omp

SubsetProfile subset_profile(const Graph& g, Exec exec = Exec::parallel);
LabelingMinimum min_same_side_edges(int m, int L, Exec exec = Exec::parallel);

/// Same-side pairs at path distance <= m in labeling `mask` of length L.
std::int64_t same_side_edges(Mask mask, int L, int m);
/// No run of m+1 equal labels.
bool valid_labeling(Mask mask, int L, int m);

/// Smallest mask in [0, 2^L) for which `violates(mask)` is true among masks
/// accepted by `admit(mask)`, plus the number admitted. Deterministic for
/// any schedule: the reduction is a min over mask values.
struct ScanOutcome {
  std::uint64_t admitted = 0;
  std::optional<Mask> first_violation;
};

template <class Admit, class Violates>
ScanOutcome scan_labelings(int L, Admit admit, Violates violates, Exec exec = Exec::parallel) {
  const std::int64_t total = std::int64_t{1} << L;
  std::uint64_t admitted = 0;
  Mask first = ~Mask{0};
  if (exec == Exec::serial) {
    for (std::int64_t i = 0; i < total; ++i) {
      const auto mask = static_cast<Mask>(i);
      if (!admit(mask)) continue;
      ++admitted;
      if (mask < first && violates(mask)) first = mask;
    }
  } else {
#pragma omp parallel for schedule(dynamic, 1024) reduction(+ : admitted) reduction(min : first) num_threads(worker_count())
    for (std::int64_t i = 0; i < total; ++i) {
      const auto mask = static_cast<Mask>(i);
      if (!admit(mask)) continue;
      ++admitted;
      if (mask < first && violates(mask)) first = mask;
    }
  }
  ScanOutcome out;
  out.admitted = admitted;
  if (first != ~Mask{0}) out.first_violation = first;
  return out;
}

}  // namespace kernels
}  // namespace dpow
