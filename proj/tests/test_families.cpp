#include <doctest.h>

#include "ndt/error.hpp"
#include "ndt/families.hpp"
#include "support.hpp"

using namespace ndt;

TEST_CASE("base digraph (1,1,2)") {
  const Digraph d = gen_sharp_base({1, 1, 2});
  CHECK(d.num_vertices() == 4);
  const std::vector<Arc> expected{{0, 2}, {1, 2}, {1, 3}, {0, 3}};
  CHECK(std::vector<Arc>(d.arcs().begin(), d.arcs().end()) == expected);
}

TEST_CASE("base digraph sizes") {
  for (const SharpnessParams p : {SharpnessParams{1, 2, 3}, {2, 1, 3}, {2, 2, 3}, {3, 2, 4}}) {
    const int k = p.k, dd = p.d, n = p.n;
    const Digraph d = gen_sharp_base(p);
    CHECK(d.num_vertices() == n + dd * n);
    CHECK(d.num_arcs() == dd * (k + 1) * n);
    CHECK(testing::in_degree_max(d) == k + 1);
    // Bipartite: all arcs leave U.
    for (const Arc& a : d.arcs()) {
      CHECK(a.tail < n);
      CHECK(a.head >= n);
    }
    // Every u_i reaches d(k+1) arcs in total, spread evenly.
    for (int u = 0; u < n; ++u) CHECK(d.out_degree(u) == dd * (k + 1));
  }
}

TEST_CASE("glued digraph") {
  const GluedDigraph g = gen_sharp_glued({1, 1, 2});
  CHECK(g.graph.num_vertices() == 7);
  CHECK(g.graph.num_arcs() == 8);
  CHECK(g.glued == 0);
  CHECK(g.graph.out_degree(0) == 4);
  const GluedDigraph h = gen_sharp_glued({2, 2, 3});
  CHECK(h.graph.num_vertices() == 2 * (3 + 6) - 1);
  CHECK(h.graph.num_arcs() == 2 * 18);
  CHECK(testing::in_degree_max(h.graph) == 3);
}

TEST_CASE("tree family") {
  const Digraph t = gen_tree_family({1, 3});
  CHECK(t.num_vertices() == 15);
  CHECK(t.num_arcs() == 14);
  CHECK(testing::in_degree_max(t) == 2);
  for (int a = 0; a < t.num_arcs(); ++a) CHECK(t.arc(a).tail == a + 1);
  const Digraph single = gen_tree_family({1, 0});
  CHECK(single.num_vertices() == 1);
  CHECK(single.num_arcs() == 0);
  const Digraph k2 = gen_tree_family({2, 2});
  CHECK(k2.num_vertices() == 13);
  CHECK(k2.num_arcs() == 12);
  // Leaves are sources, internal vertices have in-degree k+1.
  for (int v = 0; v < 4; ++v) CHECK(k2.in_degree(v) == 3);
  for (int v = 4; v < 13; ++v) CHECK(k2.in_degree(v) == 0);
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(gen_sharp_base({1, 1, 1}), InputError);
  CHECK_THROWS_AS(gen_sharp_base({0, 1, 2}), InputError);
  CHECK_THROWS_AS(gen_sharp_base({1, 0, 2}), InputError);
  CHECK_THROWS_AS(gen_sharp_glued({2, 1, 2}), InputError);
  CHECK_THROWS_AS(gen_tree_family({1, -1}), InputError);
  CHECK_THROWS_AS(gen_tree_family({0, 2}), InputError);
}
