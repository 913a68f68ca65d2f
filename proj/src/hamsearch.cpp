#include "dpow/hamsearch.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace dpow {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::found: return "Found";
    case Verdict::not_found: return "NotFound";
    case Verdict::unknown: return "Unknown";
  }
  return "?";
}

bool verify_witness(const Graph& g, int m, const std::vector<int>& order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("witness is not a permutation of the vertex set");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("witness is not a permutation of the vertex set");
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= m && d < n; ++d) {
      const int u = order[i], w = order[(i + d) % n];
      if (u != w && !g.has_edge(u, w)) return false;
    }
  return true;
}

namespace {

using Word = Graph::Word;

class Backtracker {
 public:
  Backtracker(const Graph& g, int m, std::uint64_t budget)
      : g_(g), n_(g.n()), m_(m), w_(g.words()), budget_(budget),
        pos_(static_cast<std::size_t>(n_), -1),
        unused_(static_cast<std::size_t>(w_), 0),
        cand_(static_cast<std::size_t>(n_) * w_, 0) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
    for (int v = 1; v < n_; ++v) set(unused_.data(), v);
    pos_[0] = 0;
  }

  bool run() { return place(1); }
  std::size_t memo_size() const { return failed_.size(); }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& order() const { return pos_; }

 private:
  static void set(Word* w, int v) { w[v >> 6] |= Word{1} << (v & 63); }
  static void clear(Word* w, int v) { w[v >> 6] &= ~(Word{1} << (v & 63)); }
  static bool test(const Word* w, int v) { return (w[v >> 6] >> (v & 63)) & 1; }

  void and_row(Word* c, int v) const {
    const auto r = g_.row(v);
    for (int i = 0; i < w_; ++i) c[i] &= r[i];
  }

  int unused_neighbours(int v) const {
    const auto r = g_.row(v);
    int c = 0;
    for (int i = 0; i < w_; ++i) c += std::popcount(unused_[i] & r[i]);
    return c;
  }

  // After filling positions 0..k: can every placed vertex still get the
  // neighbours it needs among the unplaced positions?
  bool feasible(int k) const {
    const int placed = k + 1;
    for (int i = std::max(0, placed - m_); i < placed; ++i) {
      int needed = std::min(i + m_, n_ - 1) - k;
      // wrap-around partners at the end of the cycle
      if (i < m_) needed = std::max(needed, n_ - std::max(placed, n_ - m_ + i));
      if (needed > 0 && unused_neighbours(pos_[i]) < needed) return false;
    }
    for (int j = 0; j < m_ && j < placed; ++j) {
      const int needed = n_ - std::max(placed, n_ - m_ + j);
      if (needed > 0 && unused_neighbours(pos_[j]) < needed) return false;
    }
    if (placed < n_) {
      // each unplaced vertex needs 2m partners among the unplaced vertices
      // and the placed ones that still have open slots
      std::vector<Word> open(unused_);
      for (int i = std::max(0, placed - m_); i < placed; ++i) set(open.data(), pos_[i]);
      for (int i = 0; i < std::min(m_, placed); ++i) set(open.data(), pos_[i]);
      for (int v = 0; v < n_; ++v) {
        if (!test(unused_.data(), v)) continue;
        const auto r = g_.row(v);
        int c = 0;
        for (int i = 0; i < w_; ++i) c += std::popcount(open[i] & r[i]);
        if (c < 2 * m_) return false;
      }
    }
    if (k >= 1 && placed < n_) {
      // the last position must exceed pos[1] and be adjacent to vertex 0
      const auto r = g_.row(0);
      bool any = false;
      for (int v = pos_[1] + 1; v < n_ && !any; ++v) any = test(unused_.data(), v) && test(r.data(), v);
      if (!any) return false;
    }
    return true;
  }

  // The completion question from position k on depends only on the unused
  // set, the last m placed vertices, the first m (wrap partners) and pos[1]
  // (reflection rule). Failed states are remembered when that key fits.
  bool memo_enabled() const { return n_ <= 64 && failed_.size() < kMemoCap; }

  std::string state_key(int k) const {
    std::string key(sizeof(Word), '\0');
    Word u = unused_[0];
    for (std::size_t b = 0; b < sizeof(Word); ++b) key[b] = static_cast<char>(u >> (8 * b));
    for (int j = std::max(0, k - m_); j < k; ++j) key.push_back(static_cast<char>(pos_[j]));
    key.push_back('|');
    for (int j = 0; j < std::min(m_, k); ++j) key.push_back(static_cast<char>(pos_[j]));
    key.push_back(static_cast<char>(pos_[1]));
    return key;
  }

  bool place(int k) {
    if (k == n_) return true;
    std::string key;
    if (n_ <= 64 && k > m_ && k < n_ - 1) {
      key = state_key(k);
      if (failed_.count(key)) return false;
    }
    Word* c = cand_.data() + static_cast<std::size_t>(k) * w_;
    std::copy(unused_.begin(), unused_.end(), c);
    for (int j = std::max(0, k - m_); j < k; ++j) and_row(c, pos_[j]);
    if (k >= n_ - m_)
      for (int j = 0; j <= m_ - (n_ - k); ++j) and_row(c, pos_[j]);

    // fewest unused neighbours first, ties by vertex id
    std::vector<std::pair<int, int>> cands;
    for (int v : order_)
      if (test(c, v) && !(k == n_ - 1 && v < pos_[1])) cands.emplace_back(unused_neighbours(v), v);
    std::sort(cands.begin(), cands.end());

    for (auto [deg, v] : cands) {
      (void)deg;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      pos_[k] = v;
      clear(unused_.data(), v);
      if (feasible(k) && place(k + 1)) return true;
      set(unused_.data(), v);
      pos_[k] = -1;
      if (exhausted_) return false;
    }
    if (!key.empty() && memo_enabled()) failed_.insert(std::move(key));
    return false;
  }

  static constexpr std::size_t kMemoCap = std::size_t{1} << 22;

  const Graph& g_;
  int n_, m_, w_;
  std::uint64_t budget_;
  std::vector<int> pos_;
  std::vector<Word> unused_;
  std::vector<Word> cand_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::unordered_set<std::string> failed_;
};

// Exact subset DP for m <= 2 on small graphs, used when the backtracker runs
// out of its first-phase budget. For m = 2, table[mask][v] holds the set of u
// such that some valid ordering of `mask` starts 0, a and ends u, v. For m = 1
// a single end vertex is enough (table[mask][0] is the set of ends).
inline constexpr int kDpMaxN = 18;
inline constexpr std::uint64_t kFirstPhase = 20000;

std::uint64_t dp_cost(int n) { return (std::uint64_t{1} << n) * static_cast<std::uint64_t>(n); }

std::optional<std::vector<int>> subset_dp(const Graph& g, int m) {
  const int n = g.n();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nb[v] = static_cast<std::uint32_t>(g.row(v)[0]);
  auto bit = [](int v) { return std::uint32_t{1} << v; };

  if (m == 1) {
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2)
      for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
        const int v = std::countr_zero(e);
        for (std::uint32_t free = nb[v] & ~mask; free; free &= free - 1) ends[mask | bit(std::countr_zero(free))] |= bit(std::countr_zero(free));
      }
    const std::uint32_t last = ends[full] & nb[0];
    if (!last) return std::nullopt;
    std::vector<int> order;
    std::uint32_t mask = full;
    int v = std::countr_zero(last);
    while (v != 0) {
      order.push_back(v);
      mask &= ~bit(v);
      v = std::countr_zero(ends[mask] & nb[v]);
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());
    return order;
  }

  std::vector<std::uint32_t> table((std::size_t{1} << n) * n);
  auto at = [&](std::uint32_t mask, int v) -> std::uint32_t& { return table[static_cast<std::size_t>(mask) * n + v]; };
  for (int a = 1; a < n; ++a) {
    if (!(nb[0] & bit(a))) continue;
    std::fill(table.begin(), table.end(), 0);
    const std::uint32_t start = 1 | bit(a);
    at(start, a) = 1;
    for (std::uint32_t mask = start; mask <= full; ++mask) {
      if ((mask & start) != start) continue;
      for (std::uint32_t vs = mask; vs; vs &= vs - 1) {
        const int v = std::countr_zero(vs);
        const std::uint32_t us = at(mask, v);
        if (!us) continue;
        for (std::uint32_t free = nb[v] & ~mask; free; free &= free - 1) {
          const int w = std::countr_zero(free);
          if (us & nb[w]) at(mask | bit(w), w) |= bit(v);
        }
      }
    }
    // close the cycle: ... y, z then 0, a
    for (int z = 1; z < n; ++z) {
      if (z == a || !(nb[z] & 1) || !(nb[z] & bit(a))) continue;
      const std::uint32_t ys = at(full, z) & nb[0];
      if (!ys) continue;
      std::vector<int> order{z};
      int y = std::countr_zero(ys);
      std::uint32_t mask = full;
      while (mask != start) {
        order.push_back(y);
        mask &= ~bit(z);
        if (mask == start) break;
        const int x = std::countr_zero(at(mask, y) & nb[z]);
        z = y;
        y = x;
      }
      order.push_back(0);
      std::reverse(order.begin(), order.end());
      return order;
    }
  }
  return std::nullopt;
}

}  // namespace

SearchOutcome contains_ham_power(const Graph& g, int m, std::uint64_t budget) {
  const int n = g.n();
  if (m < 1) throw std::invalid_argument("power m must be >= 1");
  if (n < m + 2) throw std::invalid_argument("containment needs n >= m + 2");
  SearchOutcome out;

  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  if (n <= 2 * m + 1) {
    // the m-th power of C_n is K_n here
    const bool complete = g.edge_count() == choose2(n);
    out.verdict = complete ? Verdict::found : Verdict::not_found;
    if (complete) out.witness = identity;
    return out;
  }
  if (g.min_degree() < 2 * m) {
    out.verdict = Verdict::not_found;
    return out;
  }

  // Small instances with m <= 2: a short backtracking phase (which finds
  // most witnesses quickly), then the exact subset DP if the budget allows.
  const bool dp_ok = m <= 2 && n <= kDpMaxN;
  const std::uint64_t first_budget = dp_ok ? std::min<std::uint64_t>(budget, kFirstPhase) : budget;
  Backtracker bt(g, m, first_budget);
  const bool found = bt.run();
  out.nodes_expanded = bt.nodes();
  if (found) {
    out.verdict = Verdict::found;
    out.witness = bt.order();
  } else if (!bt.exhausted()) {
    out.verdict = Verdict::not_found;
  } else if (dp_ok && budget - out.nodes_expanded >= dp_cost(n)) {
    out.nodes_expanded += dp_cost(n);
    auto order = subset_dp(g, m);
    out.verdict = order ? Verdict::found : Verdict::not_found;
    if (order) out.witness = std::move(*order);
  } else {
    out.verdict = Verdict::unknown;
  }
  if (out.verdict == Verdict::found && !verify_witness(g, m, out.witness))
    throw std::logic_error("search produced an invalid witness");
  return out;
}

}  // namespace dpow
