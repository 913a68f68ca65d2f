#include "dpow/pathlemma.hpp"

#include <algorithm>

#include "dpow/threshold.hpp"

namespace dpow {

PartitionedPath PartitionedPath::from_string(int m, std::string_view labels) {
  PartitionedPath p;
  p.m = m;
  for (char c : labels) {
    if (c == 'A' || c == 'a') p.sides.push_back(Side::A);
    else if (c == 'B' || c == 'b') p.sides.push_back(Side::B);
    else throw std::invalid_argument(std::string("label must be A or B, got '") + c + "'");
  }
  return p;
}

PartitionedPath PartitionedPath::from_mask(int m, Mask mask, int L) {
  PartitionedPath p;
  p.m = m;
  p.sides.resize(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) p.sides[i] = (mask >> i) & 1 ? Side::B : Side::A;
  return p;
}

int PartitionedPath::count(Side s) const { return static_cast<int>(std::count(sides.begin(), sides.end(), s)); }

std::string PartitionedPath::str() const {
  std::string out;
  for (Side s : sides) out.push_back(to_char(s));
  return out;
}

bool PartitionedPath::valid() const {
  int run = 0;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    run = (i > 0 && sides[i] == sides[i - 1]) ? run + 1 : 1;
    if (run > m) return false;
  }
  return true;
}

int SegmentList::length() const {
  int total = 0;
  for (int x : sizes) total += x;
  return total;
}

std::vector<Side> SegmentList::labels() const {
  std::vector<Side> out;
  Side s = first;
  for (int x : sizes) {
    out.insert(out.end(), static_cast<std::size_t>(x), s);
    s = other(s);
  }
  return out;
}

bool SegmentList::satisfies_a(int m) const {
  return std::all_of(sizes.begin(), sizes.end(), [m](int x) { return x >= 1 && x <= m; });
}

bool SegmentList::satisfies_b(int m) const {
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
    if (sizes[i] + sizes[i + 1] < m) return false;
  return true;
}

SegmentList segments(const PartitionedPath& p) {
  SegmentList s;
  if (p.sides.empty()) return s;
  s.first = p.sides.front();
  int run = 0;
  for (std::size_t i = 0; i < p.sides.size(); ++i) {
    if (i > 0 && p.sides[i] != p.sides[i - 1]) {
      s.sizes.push_back(run);
      run = 0;
    }
    ++run;
  }
  s.sizes.push_back(run);
  return s;
}

PartitionedPath to_path(int m, const SegmentList& s) {
  PartitionedPath p;
  p.m = m;
  p.sides = s.labels();
  return p;
}

std::int64_t same_side_edge_count(int m, const std::vector<Side>& sides) {
  const auto L = static_cast<int>(sides.size());
  std::int64_t count = 0;
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L && j - i <= m; ++j) count += sides[i] == sides[j];
  return count;
}

SameSideEdges same_side_edges(const PartitionedPath& p) {
  SameSideEdges out;
  const int L = p.length();
  for (int i = 0; i < L; ++i)
    for (int j = i + 1; j < L && j - i <= p.m; ++j)
      if (p.sides[i] == p.sides[j]) out.edges.emplace_back(i, j);
  out.count = static_cast<std::int64_t>(out.edges.size());
  return out;
}

std::string to_string(StepKind k) {
  switch (k) {
    case StepKind::initiation_split: return "initiation-split";
    case StepKind::initiation_merge: return "initiation-merge";
    case StepKind::case1: return "case1";
    case StepKind::case2: return "case2";
    case StepKind::case2_merge: return "case2-merge";
    case StepKind::case3: return "case3";
  }
  return "?";
}

bool NormalizeResult::within_slack() const {
  const std::int64_t gain = normalized_edges - original_edges;
  return 2 * gain <= std::int64_t{m - 1} * (m - 1);
}

namespace {

class Normalizer {
 public:
  Normalizer(int m, SegmentList s, NormalizeOptions opts) : m_(m), s_(std::move(s)), opts_(opts) {}

  void record(StepKind kind, int segment, const SegmentList& before, NormalizeResult& out) const {
    if (!opts_.record_transcript) return;
    NormalizeStep step;
    step.kind = kind;
    step.segment = segment;
    step.before = before;
    step.after = s_;
    if (opts_.track_edges) {
      step.edges_before = same_side_edge_count(m_, before.labels());
      step.edges_after = same_side_edge_count(m_, s_.labels());
    }
    out.transcript.push_back(std::move(step));
  }

  // Moves the part of run i beyond the first m vertices into run i+1 (the
  // moved vertices change side), creating run i+1 if i was last.
  void split(std::size_t i) {
    auto& v = s_.sizes;
    const int excess = v[i] - m_;
    v[i] = m_;
    if (i + 1 == v.size()) v.push_back(excess);
    else v[i + 1] += excess;
  }

  void run(NormalizeResult& out) {
    auto& v = s_.sizes;
    if (v.empty()) return;
    const std::int64_t L = s_.length();
    const std::int64_t budget = 4 * L * L;

    // initiation
    if (v[0] > m_) {
      const SegmentList before = s_;
      split(0);
      record(StepKind::initiation_split, 1, before, out);
    }
    std::size_t j = 0;
    int prefix = 0;
    while (j < v.size() && prefix + v[j] < m_) prefix += v[j++];
    if (j >= 2) {
      const SegmentList before = s_;
      const Side side_j = (j - 1) % 2 == 0 ? s_.first : other(s_.first);
      v.erase(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(j));
      v.insert(v.begin(), prefix);
      s_.first = side_j;
      record(StepKind::initiation_merge, 1, before, out);
    }

    // iteration; i is the 0-based index of segment S'_{i+1}
    std::size_t i = 1;
    while (i < v.size()) {
      if (++out.steps > budget)
        throw BudgetExceeded("normalisation exceeded its budget of " + std::to_string(budget) + " steps");
      const int label = static_cast<int>(i) + 1;
      if (v[i] > m_) {
        const SegmentList before = s_;
        split(i);
        record(StepKind::case1, label, before, out);
        ++i;
        continue;
      }
      if (v[i - 1] + v[i] >= m_) {  // case 0
        ++i;
        continue;
      }
      if (i + 1 < v.size()) {
        const SegmentList before = s_;
        StepKind kind = StepKind::case2;
        ++v[i - 1];
        if (--v[i + 1] == 0) {
          if (i + 2 < v.size()) {
            v[i] += v[i + 2];
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i + 1), v.begin() + static_cast<std::ptrdiff_t>(i + 3));
            kind = StepKind::case2_merge;
          } else {
            v.erase(v.begin() + static_cast<std::ptrdiff_t>(i + 1));
          }
        }
        record(kind, label, before, out);
        continue;  // re-examine the same i
      }
      const SegmentList before = s_;
      v[i - 1] += v[i];
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      record(StepKind::case3, label, before, out);
      break;
    }
  }

  const SegmentList& result() const { return s_; }

 private:
  int m_;
  SegmentList s_;
  NormalizeOptions opts_;
};

}  // namespace

NormalizeResult normalize(int m, const SegmentList& s, NormalizeOptions opts) {
  if (m < 2) throw std::invalid_argument("normalize needs m >= 2");
  if (std::any_of(s.sizes.begin(), s.sizes.end(), [](int x) { return x < 1; }))
    throw std::invalid_argument("segment sizes must be positive");
  NormalizeResult out;
  out.m = m;
  out.input = s;
  Normalizer norm(m, s, opts);
  norm.run(out);
  out.output = norm.result();
  out.original_edges = same_side_edge_count(m, s.labels());
  out.normalized_edges = same_side_edge_count(m, out.output.labels());
  return out;
}

NormalizeResult normalize(const PartitionedPath& p, NormalizeOptions opts) { return normalize(p.m, segments(p), opts); }

std::int64_t closed_form_edges(int m, const SegmentList& s) {
  if (!s.normalized(m)) throw std::invalid_argument("closed form needs a normalised segment list");
  std::int64_t total = 0;
  const auto q = s.sizes.size();
  for (std::size_t i = 0; i < q; ++i) {
    const std::int64_t x = s.sizes[i];
    total += choose2(x);
    if (i > 0 && i + 1 < q) total += (m - x) * (m - x + 1) / 2;
  }
  return total;
}

Rational segment_f_sum(int m, const SegmentList& s) {
  if (!s.satisfies_a(m)) throw std::invalid_argument("segment_f_sum needs every segment <= m");
  Rational total;
  for (int x : s.sizes) total += Rational(x) * f_m(m, x);
  return total;
}

Lemma32Report check_lemma32_exhaustive(int m, int L_max, Exec exec) {
  if (m < 2 || L_max < 1 || L_max > 30) throw std::invalid_argument("lemma32 check needs m >= 2 and 1 <= L_max <= 30");
  Lemma32Report rep;
  rep.m = m;
  for (int L = 1; L <= L_max; ++L) {
    const auto scan = kernels::min_same_side_edges(m, L, exec);
    Lemma32Row row;
    row.L = L;
    row.valid = scan.valid;
    row.min_edges = scan.min_edges;
    row.bound = lemma32_bound(m, L);
    if (scan.valid > 0) {
      row.argmin = PartitionedPath::from_mask(m, scan.argmin, L).str();
      row.pass = Rational(scan.min_edges) >= row.bound;
    }
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace {

std::vector<int> positions(const PartitionedPath& p, Side side) {
  std::vector<int> out;
  for (int i = 0; i < p.length(); ++i)
    if (p.sides[i] == side) out.push_back(i);
  return out;
}

// Edges of the k-th power of a path on s vertices.
std::int64_t path_power_edges(std::int64_t s, int k) {
  std::int64_t e = 0;
  for (int d = 1; d <= k; ++d) e += std::max<std::int64_t>(0, s - d);
  return e;
}

}  // namespace

std::int64_t far_pairs(const PartitionedPath& p, Side side, int t) {
  if (t < 1) throw std::invalid_argument("t-far needs t >= 1");
  const auto pos = positions(p, side);
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(pos.size()) - t);
}

std::int64_t far_edges(const PartitionedPath& p, Side side, int t) {
  if (t < 1) throw std::invalid_argument("t-far needs t >= 1");
  const auto pos = positions(p, side);
  std::int64_t count = 0;
  for (std::size_t k = 0; k + t < pos.size(); ++k) count += pos[k + t] - pos[k] <= p.m;
  return count;
}

bool spanning_power_check(const PartitionedPath& p, Side side, int k) {
  for (int t = 1; t <= k; ++t)
    if (far_edges(p, side, t) != far_pairs(p, side, t)) return false;
  return true;
}

bool contains_same_side_clique(const PartitionedPath& p, int s) {
  const int L = p.length(), window = p.m + 1;
  for (Side side : {Side::A, Side::B}) {
    const auto pos = positions(p, side);
    for (std::size_t k = 0; k + s - 1 < pos.size(); ++k)
      if (pos[k + s - 1] - pos[k] < window) return true;
  }
  (void)L;
  return false;
}

M6Report m6_structure_check(const PartitionedPath& p) {
  M6Report r;
  r.L = p.length();
  r.size_a = p.count(Side::A);
  r.size_b = p.count(Side::B);
  if (p.m != 6) {
    r.violation = "m must be 6";
    return r;
  }
  if (contains_same_side_clique(p, 5)) {
    r.violation = "a 7-window holds 5 vertices of one side (K_5)";
    return r;
  }
  r.precondition = true;
  for (Side s : {Side::A, Side::B}) {
    r.far1 += far_edges(p, s, 1);
    r.far2 += far_edges(p, s, 2);
    r.far3 += far_edges(p, s, 3);
  }
  r.windows_split = true;
  for (int i = 0; i + 7 <= r.L; ++i) {
    int a = 0;
    for (int k = i; k < i + 7; ++k) a += p.sides[k] == Side::A;
    if (a != 3 && a != 4) r.windows_split = false;
  }
  const std::int64_t expected = path_power_edges(r.size_a, 2) + path_power_edges(r.size_b, 2);
  r.far12_ok = r.far1 + r.far2 == expected;
  if (r.size_a >= 2 && r.size_b >= 2) r.far12_ok = r.far12_ok && r.far1 + r.far2 == 2 * std::int64_t{r.L} - 6;
  r.far3_ok = 4 * r.far3 >= r.L - 6;
  return r;
}

M9Report m9_structure_check(const PartitionedPath& p) {
  M9Report r;
  r.L = p.length();
  r.size_a = p.count(Side::A);
  r.size_b = p.count(Side::B);
  if (p.m != 9) {
    r.violation = "m must be 9";
    return r;
  }
  if (contains_same_side_clique(p, 7)) {
    r.violation = "a 10-window holds 7 vertices of one side (K_7)";
    return r;
  }
  r.precondition = true;
  for (Side s : {Side::A, Side::B})
    for (int t = 1; t <= 3; ++t) r.far123 += far_edges(p, s, t);
  r.w_a = far_edges(p, Side::A, 4);
  r.w_b = far_edges(p, Side::B, 4);
  r.z_a = far_edges(p, Side::A, 5);
  r.z_b = far_edges(p, Side::B, 5);

  const std::int64_t L = r.L, w = r.w(), z = r.z();
  const std::int64_t expected = path_power_edges(r.size_a, 3) + path_power_edges(r.size_b, 3);
  r.far123_ok = r.far123 == expected;
  if (r.size_a >= 3 && r.size_b >= 3) r.far123_ok = r.far123_ok && r.far123 == 3 * L - 12;
  r.w_bound = 3 * w >= L - 9;
  r.w_z_link = L - 8 - w <= 4 * z && r.size_a - 4 - r.w_a <= 4 * r.z_b && r.size_b - 4 - r.w_b <= 4 * r.z_a;
  r.w_plus_z = 2 * (w + z) >= L - 10;
  return r;
}

namespace {

template <class Check>
StructureSuiteReport run_structure_suite(int m, int clique, int L_max, Exec exec, Check check) {
  if (L_max < 1 || L_max > 30) throw std::invalid_argument("structure suite needs 1 <= L_max <= 30");
  StructureSuiteReport rep;
  rep.m = m;
  rep.L_max = L_max;
  for (int L = 1; L <= L_max && !rep.counterexample; ++L) {
    auto admit = [&](Mask mask) { return !contains_same_side_clique(PartitionedPath::from_mask(m, mask, L), clique); };
    auto violates = [&](Mask mask) { return !check(PartitionedPath::from_mask(m, mask, L)).ok(); };
    const auto scan = kernels::scan_labelings(L, admit, violates, exec);
    rep.admitted += scan.admitted;
    if (scan.first_violation) rep.counterexample = PartitionedPath::from_mask(m, *scan.first_violation, L).str();
  }
  return rep;
}

}  // namespace

StructureSuiteReport verify_m6_exhaustive(int L_max, Exec exec) {
  return run_structure_suite(6, 5, L_max, exec, m6_structure_check);
}

StructureSuiteReport verify_m9_exhaustive(int L_max, Exec exec) {
  return run_structure_suite(9, 7, L_max, exec, m9_structure_check);
}

}  // namespace dpow
