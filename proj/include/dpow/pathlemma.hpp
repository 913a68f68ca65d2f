#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpow/graph.hpp"
#include "dpow/kernels.hpp"
#include "dpow/rational.hpp"

namespace dpow {

enum class Side : std::uint8_t { A, B };

constexpr Side other(Side s) { return s == Side::A ? Side::B : Side::A; }
constexpr char to_char(Side s) { return s == Side::A ? 'A' : 'B'; }

/// An m-path on positions 0..L-1 with an A/B label per position.
struct PartitionedPath {
  int m = 2;
  std::vector<Side> sides;

  static PartitionedPath from_string(int m, std::string_view labels);
  /// Bit i of mask set means position i is on side B.
  static PartitionedPath from_mask(int m, Mask mask, int L);

  int length() const { return static_cast<int>(sides.size()); }
  int count(Side s) const;
  std::string str() const;
  /// No m+1 consecutive positions on the same side.
  bool valid() const;
};

/// Maximal same-side runs, alternating sides starting from `first`.
struct SegmentList {
  std::vector<int> sizes;
  Side first = Side::A;

  int length() const;
  std::vector<Side> labels() const;
  /// (a) every run <= m and (b) consecutive runs sum to >= m.
  bool satisfies_a(int m) const;
  bool satisfies_b(int m) const;
  bool normalized(int m) const { return satisfies_a(m) && satisfies_b(m); }
  friend bool operator==(const SegmentList&, const SegmentList&) = default;
};

SegmentList segments(const PartitionedPath& p);
PartitionedPath to_path(int m, const SegmentList& s);

struct SameSideEdges {
  std::int64_t count = 0;
  std::vector<Edge> edges;  // (i, j), i < j, j - i <= m, equal labels
};
SameSideEdges same_side_edges(const PartitionedPath& p);
std::int64_t same_side_edge_count(int m, const std::vector<Side>& sides);

enum class StepKind { initiation_split, initiation_merge, case1, case2, case2_merge, case3 };
std::string to_string(StepKind k);

struct NormalizeStep {
  StepKind kind = StepKind::case1;
  int segment = 0;  // 1-based index i of the segment under inspection
  SegmentList before;
  SegmentList after;
  std::int64_t edges_before = -1;  // filled when NormalizeOptions::track_edges
  std::int64_t edges_after = -1;
};

struct NormalizeOptions {
  bool record_transcript = true;
  bool track_edges = false;
};

struct NormalizeResult {
  int m = 0;
  SegmentList input;
  SegmentList output;
  std::vector<NormalizeStep> transcript;
  std::int64_t steps = 0;
  std::int64_t original_edges = 0;
  std::int64_t normalized_edges = 0;

  /// original >= normalized - (m-1)^2/2
  bool within_slack() const;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the left-to-right normalisation (initiation, then Cases 0-3) on the
/// run lengths. Any labeling is accepted; validity only matters for the
/// edge bound. Throws BudgetExceeded after 4 L^2 iteration steps.
NormalizeResult normalize(const PartitionedPath& p, NormalizeOptions opts = {});
NormalizeResult normalize(int m, const SegmentList& s, NormalizeOptions opts = {});

/// sum C(x_i,2) + sum_{i=2}^{q-1} (m-x_i)(m-x_i+1)/2; requires (a) and (b).
std::int64_t closed_form_edges(int m, const SegmentList& s);
/// sum x_i f_m(x_i) over the segments; requires (a).
Rational segment_f_sum(int m, const SegmentList& s);

struct Lemma32Row {
  int L = 0;
  std::uint64_t valid = 0;
  std::int64_t min_edges = -1;
  Rational bound;
  std::string argmin;  // a minimising labeling, "" when none is valid
  bool pass = true;
};

struct Lemma32Report {
  int m = 0;
  std::vector<Lemma32Row> rows;
  bool all_pass = true;
};

/// Every valid labeling of every L <= L_max has at least f(ell_m) L - 2m^2
/// same-side edges.
Lemma32Report check_lemma32_exhaustive(int m, int L_max, Exec exec = Exec::parallel);

/// Same-side pairs with exactly t-1 same-side positions strictly between.
std::int64_t far_pairs(const PartitionedPath& p, Side side, int t);
/// Those of them at path distance <= m.
std::int64_t far_edges(const PartitionedPath& p, Side side, int t);
/// Every t-far pair on `side` with t <= k is an edge of the m-path.
bool spanning_power_check(const PartitionedPath& p, Side side, int k);
/// Some side has s positions inside a window of m+1 consecutive positions,
/// i.e. P[A] or P[B] contains K_s.
bool contains_same_side_clique(const PartitionedPath& p, int s);

struct M6Report {
  bool precondition = false;
  std::string violation;  // why the precondition fails
  int L = 0;
  int size_a = 0, size_b = 0;
  std::int64_t far1 = 0, far2 = 0, far3 = 0;
  bool windows_split = false;  // every 7-window is 4/3
  bool far12_ok = false;       // 1-,2-far total = (2|A|-3)+(2|B|-3)
  bool far3_ok = false;        // 4 * 3-far >= L - 6
  bool ok() const { return precondition && windows_split && far12_ok && far3_ok; }
};

struct M9Report {
  bool precondition = false;
  std::string violation;
  int L = 0;
  int size_a = 0, size_b = 0;
  std::int64_t far123 = 0;
  std::int64_t w_a = 0, w_b = 0, z_a = 0, z_b = 0;
  bool far123_ok = false;   // = 3L - 12 (per-side 3-path counts)
  bool w_bound = false;     // w >= L/3 - 3
  bool w_z_link = false;    // L - 8 - w <= 4z, and per side |A|-4-w_A <= 4 z_B
  bool w_plus_z = false;    // w + z >= L/2 - 5
  std::int64_t w() const { return w_a + w_b; }
  std::int64_t z() const { return z_a + z_b; }
  bool ok() const { return precondition && far123_ok && w_bound && w_z_link && w_plus_z; }
};

M6Report m6_structure_check(const PartitionedPath& p);
M9Report m9_structure_check(const PartitionedPath& p);

struct StructureSuiteReport {
  int m = 0;
  int L_max = 0;
  std::uint64_t admitted = 0;  // clique-free labelings checked
  std::optional<std::string> counterexample;
  bool pass() const { return !counterexample; }
};

/// Exhaustive m = 6 suite over every K_5-free labeling with L <= L_max.
StructureSuiteReport verify_m6_exhaustive(int L_max, Exec exec = Exec::parallel);
/// Exhaustive m = 9 suite over every K_7-free labeling with L <= L_max.
StructureSuiteReport verify_m9_exhaustive(int L_max, Exec exec = Exec::parallel);

}  // namespace dpow
