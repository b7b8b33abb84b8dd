#pragma once

#include "ndt/digraph.hpp"

namespace ndt {

// Parameters of the bipartite sharpness construction; n >= k + 1.
struct SharpnessParams {
  int k = 1;
  int d = 1;
  int n = 2;

  void validate() const;
};

struct TreeFamilyParams {
  int k = 1;
  int depth = 0;

  void validate() const;
};

/// Bipartite acyclic digraph on U = {u_0..u_{n-1}} and W = W_0 ∪ .. ∪ W_{n-1},
/// |W_i| = d, with arcs u_{i+j mod n} → w for every w ∈ W_i and 0 <= j <= k.
///
/// Labelling: u_i has id i; the c-th vertex of W_i has id n + d*i + c. Arcs are
/// listed by i, then c, then j.
Digraph gen_sharp_base(const SharpnessParams& p);

struct GluedDigraph {
  Digraph graph;
  VertexId glued;  // the identified copy of u_0
};

/// Two copies of gen_sharp_base glued at u_0. The first copy keeps its ids;
/// the second copy's vertex x > 0 becomes base_size + x - 1 and its u_0 maps to
/// 0. Arcs of the first copy come first.
GluedDigraph gen_sharp_glued(const SharpnessParams& p);

/// Tree family D_depth(k): start from one vertex, and at each level give every
/// newest vertex k+1 fresh in-neighbours. Vertices are numbered level by level
/// and the in-neighbours of one vertex get consecutive ids; arc a enters the
/// parent of vertex a + 1.
Digraph gen_tree_family(const TreeFamilyParams& p);

}  // namespace ndt
