#include "ndt/density.hpp"

#include "ndt/error.hpp"
#include "ndt/flow.hpp"

namespace ndt {

const char* to_string(DensityMode mode) {
  return mode == DensityMode::Arboricity ? "arboricity" : "average-degree";
}

Rational density_of(const Digraph& d, std::span<const VertexId> h, DensityMode mode) {
  const VertexSet set = normalize_vertex_set(d, h);
  const auto size = static_cast<std::int64_t>(set.size());
  const std::int64_t arcs = count_induced_arcs(d, set);
  if (mode == DensityMode::Arboricity) {
    if (size < 2) throw InputError("arboricity density needs at least two vertices");
    return Rational(arcs, size - 1);
  }
  if (size < 1) throw InputError("average degree needs a non-empty vertex set");
  return Rational(2 * arcs, size);
}

namespace {

struct Excess {
  std::int64_t value = 0;  // objective at `vertices`, > 0 means a denser set exists
  VertexSet vertices;
};

// Picard-Queyranne style network: one node per arc, one per vertex.
// source -> arc (arc_gain), arc -> both ends (unbounded), vertex -> sink
// (vertex_cost, except `free_vertex` which costs nothing).
// max over H of arc_gain*|A[H]| - vertex_cost*|H \ {free}| = arc_gain*m - mincut.
Excess best_closure(const Digraph& d, std::int64_t arc_gain, std::int64_t vertex_cost,
                    VertexId free_vertex) {
  const int n = d.num_vertices();
  const int m = d.num_arcs();
  const int source = n + m;
  const int sink = source + 1;
  FlowNetwork net(n + m + 2, source, sink);
  for (ArcId a = 0; a < m; ++a) {
    net.add_edge(source, n + a, arc_gain);
    net.add_edge(n + a, d.arc(a).tail, kUnboundedCapacity);
    net.add_edge(n + a, d.arc(a).head, kUnboundedCapacity);
  }
  for (VertexId v = 0; v < n; ++v)
    net.add_edge(v, sink, v == free_vertex ? 0 : vertex_cost);
  const MaxFlowResult flow = max_flow(net);

  Excess out;
  out.value = arc_gain * m - flow.value;
  for (VertexId v = 0; v < n; ++v)
    if (flow.source_side[v] || v == free_vertex) out.vertices.push_back(v);
  return out;
}

Excess best_excess(const Digraph& d, std::int64_t p, std::int64_t q, DensityMode mode) {
  if (mode == DensityMode::AverageDegree) return best_closure(d, 2 * q, p, -1);
  // q|A[H]| - p(|H| - 1) with r ∈ H is q|A[H]| - p|H \ {r}|.
  Excess best;
  bool first = true;
  for (VertexId r = 0; r < d.num_vertices(); ++r) {
    Excess here = best_closure(d, q, p, r);
    if (first || here.value > best.value) {
      best = std::move(here);
      first = false;
    }
  }
  return best;
}

void check_threshold(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw InputError("threshold denominator must be positive");
  if (p < 0) throw InputError("threshold numerator must be non-negative");
}

DensityResult dinkelbach(const Digraph& d, DensityMode mode) {
  VertexSet current(static_cast<std::size_t>(d.num_vertices()));
  for (VertexId v = 0; v < d.num_vertices(); ++v) current[v] = v;
  Rational ratio = density_of(d, current, mode);
  for (;;) {
    Excess next = best_excess(d, ratio.num(), ratio.den(), mode);
    if (next.value <= 0) break;
    const Rational improved = density_of(d, next.vertices, mode);
    if (improved <= ratio) throw std::logic_error("density iteration failed to improve");
    ratio = improved;
    current = std::move(next.vertices);
  }
  return DensityResult{ratio, DensityWitness{std::move(current), ratio, mode}};
}

}  // namespace

std::optional<VertexSet> density_threshold_test(const Digraph& d, std::int64_t p,
                                                std::int64_t q, DensityMode mode) {
  check_threshold(p, q);
  if (d.num_vertices() == 0) return std::nullopt;
  Excess best = best_excess(d, p, q, mode);
  if (best.value <= 0) return std::nullopt;
  return std::move(best.vertices);
}

DensityResult fractional_arboricity(const Digraph& d) {
  if (d.num_vertices() < 2) throw InputError("fractional arboricity needs at least two vertices");
  return dinkelbach(d, DensityMode::Arboricity);
}

DensityResult max_average_degree(const Digraph& d) {
  if (d.num_vertices() < 1) throw InputError("max average degree needs at least one vertex");
  return dinkelbach(d, DensityMode::AverageDegree);
}

}  // namespace ndt
