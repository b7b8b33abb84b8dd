#include "ndt/families.hpp"

#include "ndt/error.hpp"

namespace ndt {

void SharpnessParams::validate() const {
  if (k < 1 || d < 1) throw InputError("k and d must be positive");
  if (n < k + 1) throw InputError("n must be at least k + 1");
}

void TreeFamilyParams::validate() const {
  if (k < 1) throw InputError("k must be positive");
  if (depth < 0) throw InputError("depth must be non-negative");
}

Digraph gen_sharp_base(const SharpnessParams& p) {
  p.validate();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(p.d) * (p.k + 1) * p.n);
  for (int i = 0; i < p.n; ++i)
    for (int c = 0; c < p.d; ++c) {
      const VertexId w = p.n + p.d * i + c;
      for (int j = 0; j <= p.k; ++j) arcs.push_back({(i + j) % p.n, w});
    }
  return Digraph(p.n + p.d * p.n, std::move(arcs));
}

GluedDigraph gen_sharp_glued(const SharpnessParams& p) {
  const Digraph base = gen_sharp_base(p);
  const int size = base.num_vertices();
  auto second = [size](VertexId x) { return x == 0 ? 0 : size + x - 1; };
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  for (const Arc& a : base.arcs()) arcs.push_back({second(a.tail), second(a.head)});
  return GluedDigraph{Digraph(2 * size - 1, std::move(arcs)), 0};
}

Digraph gen_tree_family(const TreeFamilyParams& p) {
  p.validate();
  std::vector<Arc> arcs;
  int level_begin = 0;
  int level_end = 1;
  for (int level = 0; level < p.depth; ++level) {
    int next = level_end;
    for (VertexId v = level_begin; v < level_end; ++v)
      for (int j = 0; j <= p.k; ++j) arcs.push_back({next++, v});
    level_begin = level_end;
    level_end = next;
  }
  return Digraph(level_end, std::move(arcs));
}

}  // namespace ndt
