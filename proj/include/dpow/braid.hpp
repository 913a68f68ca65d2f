#pragma once

#include "dpow/graph.hpp"

namespace dpow {

/// B(ell, r, t) and s disjoint copies of it.
struct BraidParams {
  int ell = 2;  // clique size
  int r = 1;    // bridge width, 1 <= r <= ell
  int t = 1;    // number of cliques
  int s = 1;    // number of disjoint copies

  void validate() const;
  int vertices_per_copy() const { return t * ell; }
};

/// r-bridge on 2r vertices: v_1..v_r are 0..r-1, u_1..u_r are r..2r-1, and
/// v_i ~ u_j exactly when j <= i.
Graph bridge(int r);

/// Braid on t*ell vertices, clique i occupying [i*ell, (i+1)*ell). The j-th
/// of the last r vertices of clique i is joined to the first j of the first
/// r vertices of clique i+1. Ignores params.s.
Graph braid(const BraidParams& params);

/// params.s disjoint copies of braid(params), copy k shifted by k*t*ell.
Graph s_braids(const BraidParams& params);

/// t*C(ell,2) + (t-1)*C(r+1,2).
std::int64_t braid_edge_count(int ell, int r, int t);

}  // namespace dpow
