#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpow/graph.hpp"

namespace dpow {

enum class Verdict { found, not_found, unknown };
std::string to_string(Verdict v);

struct SearchOutcome {
  Verdict verdict = Verdict::unknown;
  std::vector<int> witness;  // cyclic order starting at vertex 0, when found
  std::uint64_t nodes_expanded = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

/// Exact test for a spanning m-th power of a Hamiltonian cycle. Backtracks
/// over cyclic orders anchored at vertex 0, with pos[1] < pos[n-1] to drop
/// reflections. A budget hit yields Verdict::unknown, never a wrong verdict.
/// Needs n >= m + 2.
SearchOutcome contains_ham_power(const Graph& g, int m, std::uint64_t budget = kDefaultSearchBudget);

/// Every pair at cyclic distance <= m in `order` is an edge of g. Throws if
/// `order` is not a permutation of 0..n-1.
bool verify_witness(const Graph& g, int m, const std::vector<int>& order);

}  // namespace dpow
