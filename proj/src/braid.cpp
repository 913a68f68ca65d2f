#include "dpow/braid.hpp"

#include <stdexcept>
#include <string>

namespace dpow {

void BraidParams::validate() const {
  if (ell < 2 || r < 1 || r > ell || t < 1 || s < 1)
    throw std::invalid_argument("invalid braid parameters (ell=" + std::to_string(ell) + ", r=" + std::to_string(r) +
                                ", t=" + std::to_string(t) + ", s=" + std::to_string(s) + ")");
}

Graph bridge(int r) {
  if (r < 1) throw std::invalid_argument("bridge width must be >= 1");
  Graph g(2 * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j <= i; ++j) g.add_edge(i, r + j);
  return g;
}

Graph braid(const BraidParams& params) {
  params.validate();
  const int ell = params.ell, r = params.r, t = params.t;
  Graph g(t * ell);
  for (int c = 0; c < t; ++c) {
    const int base = c * ell;
    for (int a = 0; a < ell; ++a)
      for (int b = a + 1; b < ell; ++b) g.add_edge(base + a, base + b);
    if (c + 1 == t) continue;
    const int left = base + ell - r, right = base + ell;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j <= i; ++j) g.add_edge(left + i, right + j);
  }
  return g;
}

Graph s_braids(const BraidParams& params) {
  const Graph one = braid(params);
  Graph out(one.n() * params.s);
  for (int k = 0; k < params.s; ++k)
    for (auto [u, v] : one.edges()) out.add_edge(u + k * one.n(), v + k * one.n());
  return out;
}

std::int64_t braid_edge_count(int ell, int r, int t) { return t * choose2(ell) + (t - 1) * choose2(r + 1); }

}  // namespace dpow
