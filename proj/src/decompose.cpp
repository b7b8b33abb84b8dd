#include "ndt/decompose.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "ndt/error.hpp"
#include "ndt/flow.hpp"
#include "ndt/hall.hpp"

namespace ndt {

const char* to_string(DecompositionKind kind) {
  return kind == DecompositionKind::Branching ? "branching" : "pseudo-branching";
}

const char* to_string(ViolationType type) {
  switch (type) {
    case ViolationType::WrongSize: return "wrong-size";
    case ViolationType::PartOutOfRange: return "part-out-of-range";
    case ViolationType::InDegree: return "in-degree";
    case ViolationType::Cycle: return "cycle";
    case ViolationType::OutDegree: return "out-degree";
  }
  return "unknown";
}

std::vector<ArcId> Decomposition::arcs_in_part(int part) const {
  std::vector<ArcId> out;
  for (ArcId a = 0; a < static_cast<ArcId>(part_of.size()); ++a)
    if (part_of[a] == part) out.push_back(a);
  return out;
}

int Decomposition::out_degree_in_part(int part, VertexId v) const {
  int count = 0;
  for (ArcId a : parent.out_arcs(v)) count += part_of[a] == part ? 1 : 0;
  return count;
}

int Decomposition::max_out_degree_in_part(int part) const {
  int best = 0;
  for (VertexId v = 0; v < parent.num_vertices(); ++v)
    best = std::max(best, out_degree_in_part(part, v));
  return best;
}

HypothesisError::HypothesisError(Witness witness, Rational bound, const std::string& what)
    : std::runtime_error(what), witness_(std::move(witness)), bound_(bound) {}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Path between u and v in the undirected forest formed by `arcs`, as arc ids.
std::vector<ArcId> forest_path(const Digraph& d, const std::vector<ArcId>& arcs, VertexId u,
                               VertexId v) {
  std::vector<std::vector<std::pair<VertexId, ArcId>>> adj(
      static_cast<std::size_t>(d.num_vertices()));
  for (ArcId a : arcs) {
    adj[d.arc(a).tail].push_back({d.arc(a).head, a});
    adj[d.arc(a).head].push_back({d.arc(a).tail, a});
  }
  std::vector<ArcId> via(adj.size(), -1);
  std::vector<char> seen(adj.size(), 0);
  std::queue<VertexId> q;
  seen[u] = 1;
  q.push(u);
  while (!q.empty()) {
    const VertexId x = q.front();
    q.pop();
    for (auto [y, a] : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        via[y] = a;
        q.push(y);
      }
  }
  std::vector<ArcId> path;
  for (VertexId x = v; x != u;) {
    const ArcId a = via[x];
    path.push_back(a);
    x = d.arc(a).tail == x ? d.arc(a).head : d.arc(a).tail;
  }
  return path;
}

}  // namespace

std::optional<DecompositionViolation> verify_decomposition(const Decomposition& dec,
                                                           std::optional<int> top_budget) {
  const Digraph& d = dec.parent;
  const int m = d.num_arcs();
  if (static_cast<int>(dec.part_of.size()) != m)
    return DecompositionViolation{ViolationType::WrongSize, -1, -1, {},
                                  "assignment has " + std::to_string(dec.part_of.size()) +
                                      " entries for " + std::to_string(m) + " arcs"};
  for (ArcId a = 0; a < m; ++a)
    if (dec.part_of[a] < 0 || dec.part_of[a] >= dec.parts)
      return DecompositionViolation{ViolationType::PartOutOfRange, dec.part_of[a], -1, {a},
                                    "arc " + std::to_string(a) + " has part " +
                                        std::to_string(dec.part_of[a]) + " outside [0, " +
                                        std::to_string(dec.parts) + ")"};

  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::vector<ArcId> first(static_cast<std::size_t>(dec.parts), -1);
    for (ArcId a : d.in_arcs(v)) {
      const int p = dec.part_of[a];
      if (first[p] >= 0)
        return DecompositionViolation{ViolationType::InDegree, p, v, {first[p], a},
                                      "part " + std::to_string(p) +
                                          " has in-degree > 1 at vertex " + std::to_string(v)};
      first[p] = a;
    }
  }

  if (dec.kind == DecompositionKind::Branching) {
    for (int p = 0; p < dec.parts; ++p) {
      UnionFind uf(d.num_vertices());
      std::vector<ArcId> accepted;
      for (ArcId a = 0; a < m; ++a) {
        if (dec.part_of[a] != p) continue;
        const Arc& arc = d.arc(a);
        if (!uf.unite(arc.tail, arc.head)) {
          auto cycle = forest_path(d, accepted, arc.tail, arc.head);
          cycle.push_back(a);
          return DecompositionViolation{ViolationType::Cycle, p, arc.tail, std::move(cycle),
                                        "part " + std::to_string(p) +
                                            " contains an underlying cycle"};
        }
        accepted.push_back(a);
      }
    }
  }

  if (top_budget && dec.parts > 0) {
    const int top = dec.parts - 1;
    for (VertexId v = 0; v < d.num_vertices(); ++v) {
      if (dec.out_degree_in_part(top, v) <= *top_budget) continue;
      std::vector<ArcId> arcs;
      for (ArcId a : d.out_arcs(v))
        if (dec.part_of[a] == top) arcs.push_back(a);
      std::string message = "last part has out-degree " + std::to_string(arcs.size()) + " > " +
                            std::to_string(*top_budget) + " at vertex " + std::to_string(v);
      return DecompositionViolation{ViolationType::OutDegree, top, v, std::move(arcs),
                                    std::move(message)};
    }
  }
  return std::nullopt;
}

namespace {

void require_positive(int value, const char* name) {
  if (value < 1) throw InputError(std::string(name) + " must be a positive integer");
}

void require_in_degree_at_most(const Digraph& d, int bound) {
  for (VertexId v = 0; v < d.num_vertices(); ++v)
    if (d.in_degree(v) > bound)
      throw HypothesisError(InDegreeWitness{v, d.in_degree(v), bound}, Rational(bound),
                            "vertex " + std::to_string(v) + " has in-degree " +
                                std::to_string(d.in_degree(v)) + " > " + std::to_string(bound));
}

void require_density_at_most(const Digraph& d, const Rational& bound, DensityMode mode) {
  if (mode == DensityMode::Arboricity && d.num_vertices() < 2) return;
  auto dense = density_threshold_test(d, bound.num(), bound.den(), mode);
  if (!dense) return;
  const Rational ratio = density_of(d, *dense, mode);
  throw HypothesisError(DensityWitness{std::move(*dense), ratio, mode}, bound,
                        std::string(to_string(mode)) + " density " + ratio.to_string() +
                            " exceeds " + bound.to_string());
}

// Does every vertex keep `need` arc-disjoint paths from root using only arcs
// with owner < 0?
bool root_connectivity_at_least(const Digraph& g, const std::vector<int>& owner, VertexId root,
                                int need) {
  if (need <= 0) return true;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == root) continue;
    FlowNetwork net(g.num_vertices(), root, v);
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      if (owner[a] < 0) net.add_edge(g.arc(a).tail, g.arc(a).head, 1);
    if (max_flow(net).value < need) return false;
  }
  return true;
}

// k arc-disjoint spanning root-arborescences covering every arc; g must have
// in-degree exactly k at every non-root vertex and root-connectivity k.
std::vector<int> pack_arborescences(const Digraph& g, VertexId root, int k) {
  const int n = g.num_vertices();
  std::vector<int> owner(static_cast<std::size_t>(g.num_arcs()), -1);
  for (int i = 0; i < k; ++i) {
    const int keep = k - i - 1;
    if (keep == 0) {
      // The leftovers have in-degree 1 everywhere and reach every vertex.
      for (int& o : owner)
        if (o < 0) o = i;
      break;
    }
    std::vector<char> in_tree(static_cast<std::size_t>(n), 0);
    in_tree[root] = 1;
    for (int size = 1; size < n; ++size) {
      bool grown = false;
      for (ArcId a = 0; a < g.num_arcs() && !grown; ++a) {
        const Arc& arc = g.arc(a);
        if (owner[a] >= 0 || !in_tree[arc.tail] || in_tree[arc.head]) continue;
        owner[a] = i;
        if (root_connectivity_at_least(g, owner, root, keep)) {
          in_tree[arc.head] = 1;
          grown = true;
        } else {
          owner[a] = -1;
        }
      }
      if (!grown) throw std::logic_error("arborescence packing stalled");
    }
  }
  return owner;
}

}  // namespace

Decomposition frank_decompose(const Digraph& d, int k) {
  require_positive(k, "k");
  require_in_degree_at_most(d, k);
  require_density_at_most(d, Rational(k), DensityMode::Arboricity);

  const int n = d.num_vertices();
  const VertexId root = n;
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (VertexId v = 0; v < n; ++v)
    for (int extra = d.in_degree(v); extra < k; ++extra) arcs.push_back({root, v});
  const Digraph augmented(n + 1, std::move(arcs));
  const std::vector<int> owner = pack_arborescences(augmented, root, k);

  Decomposition dec{d, k, std::vector<int>(owner.begin(), owner.begin() + d.num_arcs()),
                    DecompositionKind::Branching};
  return dec;
}

Decomposition ndt_branching_decompose(const Digraph& d, int k, int budget) {
  require_positive(k, "k");
  require_positive(budget, "d");
  if (budget > k)
    throw UnsupportedCase("d > k is not covered by a polynomial algorithm; use the oracle");
  require_in_degree_at_most(d, k + 1);
  require_density_at_most(d, ndt_density_bound(k, budget), DensityMode::Arboricity);

  HallInstance inst{d, {}, {}, std::vector<int>(static_cast<std::size_t>(d.num_vertices()), budget)};
  for (VertexId v = 0; v < d.num_vertices(); ++v)
    (d.in_degree(v) == k + 1 ? inst.targets : inst.sources).push_back(v);

  Decomposition dec{d, k + 1, std::vector<int>(static_cast<std::size_t>(d.num_arcs()), k),
                    DecompositionKind::Branching};
  ArcSubset top(d.num_arcs());
  if (!inst.targets.empty()) top = extract_bounded_branching(inst);
  const Subdigraph rest = remove_arcs(d, top);
  const Decomposition lower = frank_decompose(rest.graph, k);
  for (ArcId a = 0; a < rest.graph.num_arcs(); ++a)
    dec.part_of[rest.parent_arc[a]] = lower.part_of[a];
  return dec;
}

PseudoforestDecomposition hakimi_pseudoforest_decompose(const Digraph& d, int k) {
  require_positive(k, "k");
  require_density_at_most(d, Rational(2 * std::int64_t{k}), DensityMode::AverageDegree);

  const int n = d.num_vertices();
  const int m = d.num_arcs();
  const int source = n + m;
  const int sink = source + 1;
  FlowNetwork net(n + m + 2, source, sink);
  std::vector<int> keep_edge(static_cast<std::size_t>(m));
  for (ArcId a = 0; a < m; ++a) {
    net.add_edge(source, n + a, 1);
    keep_edge[a] = net.add_edge(n + a, d.arc(a).head, 1);
    net.add_edge(n + a, d.arc(a).tail, 1);
  }
  for (VertexId v = 0; v < n; ++v) net.add_edge(v, sink, k);
  const MaxFlowResult flow = max_flow(net);
  if (flow.value != m) throw std::logic_error("orientation flow not saturated");

  PseudoforestDecomposition out;
  out.reversed.assign(static_cast<std::size_t>(m), 0);
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  for (ArcId a = 0; a < m; ++a)
    if (flow.edge_flow[keep_edge[a]] == 0) {
      out.reversed[a] = 1;
      std::swap(arcs[a].tail, arcs[a].head);
    }
  Digraph oriented(n, std::move(arcs));
  std::vector<int> part_of(static_cast<std::size_t>(m), 0);
  for (VertexId v = 0; v < n; ++v) {
    int colour = 0;
    for (ArcId a : oriented.in_arcs(v)) part_of[a] = colour++;
  }
  out.decomposition =
      Decomposition{std::move(oriented), k, std::move(part_of), DecompositionKind::PseudoBranching};
  return out;
}

bool certificate_holds(const Digraph& d, const DensityCertificate& cert) {
  if (cert.vertices.empty()) return false;
  const VertexSet vertices = normalize_vertex_set(d, cert.vertices);
  if (vertices.size() != cert.vertices.size()) return false;
  const auto size = static_cast<std::int64_t>(vertices.size());
  if (count_induced_arcs(d, vertices) < cert.arc_count) return false;
  if (Rational(cert.arc_count, size) != cert.ratio) return false;
  return cert.ratio > cert.bound;
}

int residue(const Digraph& d, std::span<const int> part_of, int top_part, int budget) {
  int total = 0;
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    int out = 0;
    for (ArcId a : d.out_arcs(v)) out += part_of[a] == top_part ? 1 : 0;
    total += std::max(out - budget, 0);
  }
  return total;
}

TrailClosure compute_trail_closure(const Digraph& d, std::span<const int> part_of, int top_part,
                                   int budget, VertexId start) {
  d.check_vertex(start);
  const int m = d.num_arcs();
  std::vector<int> top_out(static_cast<std::size_t>(d.num_vertices()), 0);
  for (ArcId a = 0; a < m; ++a)
    if (part_of[a] == top_part) ++top_out[d.arc(a).tail];

  TrailClosure closure;
  closure.start = start;
  closure.arcs = ArcSubset(m);
  closure.predecessor.assign(static_cast<std::size_t>(m), -1);
  closure.forward.assign(static_cast<std::size_t>(m), 0);

  std::queue<ArcId> work;
  auto discover = [&](ArcId a, ArcId from, bool forward) {
    closure.arcs.insert(a);
    closure.predecessor[a] = from;
    closure.forward[a] = forward ? 1 : 0;
    work.push(a);
  };
  // Reached an even position: continue along every top-part arc leaving `v`.
  auto extend_from = [&](VertexId v, ArcId via) {
    for (ArcId c : d.out_arcs(v))
      if (part_of[c] == top_part && !closure.arcs.contains(c)) discover(c, via, true);
  };

  extend_from(start, -1);
  while (!work.empty()) {
    const ArcId a = work.front();
    work.pop();
    if (closure.forward[a]) {
      const VertexId w = d.arc(a).head;
      for (ArcId b : d.in_arcs(w))
        if (b != a && part_of[b] >= 0 && !closure.arcs.contains(b)) discover(b, a, false);
    } else {
      const VertexId y = d.arc(a).tail;
      if (!closure.deficient_arc && top_out[y] < budget) closure.deficient_arc = a;
      extend_from(y, a);
    }
  }

  std::vector<char> in_closure(static_cast<std::size_t>(d.num_vertices()), 0);
  std::vector<char> is_head(in_closure.size(), 0);
  in_closure[start] = 1;
  for (ArcId a = 0; a < m; ++a) {
    if (!closure.arcs.contains(a)) continue;
    in_closure[d.arc(a).tail] = in_closure[d.arc(a).head] = 1;
    is_head[d.arc(a).head] = 1;
  }
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    if (!in_closure[v]) continue;
    closure.vertices.push_back(v);
    (is_head[v] ? closure.heads : closure.tails_only).push_back(v);
  }
  return closure;
}

namespace {

// Swaps along the trail ending in closure.deficient_arc: every forward arc
// trades parts with the backward arc that follows it.
void swap_along_trail(const TrailClosure& closure, std::vector<int>& part_of, int top_part) {
  std::vector<ArcId> trail;
  for (ArcId a = *closure.deficient_arc; a >= 0; a = closure.predecessor[a]) trail.push_back(a);
  std::reverse(trail.begin(), trail.end());
  if (trail.size() % 2 != 0) throw std::logic_error("alternating trail has odd length");
  for (std::size_t i = 0; i < trail.size(); i += 2) {
    const ArcId forward = trail[i];
    const ArcId backward = trail[i + 1];
    if (part_of[forward] != top_part || part_of[backward] == top_part)
      throw std::logic_error("trail does not alternate between the top part and the rest");
    part_of[forward] = part_of[backward];
    part_of[backward] = top_part;
  }
}

[[maybe_unused]] bool in_degrees_ok(const Digraph& d, std::span<const int> part_of, int parts) {
  for (VertexId v = 0; v < d.num_vertices(); ++v) {
    std::vector<int> seen(static_cast<std::size_t>(parts), 0);
    for (ArcId a : d.in_arcs(v))
      if (part_of[a] >= 0 && ++seen[part_of[a]] > 1) return false;
  }
  return true;
}

}  // namespace

PseudoNdtResult pseudo_ndt_decompose(const Digraph& d, int k, int budget) {
  require_positive(k, "k");
  require_positive(budget, "d");
  require_in_degree_at_most(d, k + 1);

  const int n = d.num_vertices();
  const int top = k;
  PseudoNdtResult result;
  std::vector<int> part_of(static_cast<std::size_t>(d.num_arcs()), -1);

  // Peeling only removes arcs entering the peeled vertex, so no other in-degree
  // changes and one ascending pass reaches the fixpoint.
  std::vector<VertexId> peeled;
  for (VertexId v = 0; v < n; ++v) {
    const int in = d.in_degree(v);
    if (in > 0 && in <= k) peeled.push_back(v);
  }
  result.peeled_vertices = static_cast<int>(peeled.size());

  // Every remaining head has exactly k+1 entering arcs; give them parts 0..k.
  std::vector<char> is_peeled(static_cast<std::size_t>(n), 0);
  for (VertexId v : peeled) is_peeled[v] = 1;
  for (VertexId v = 0; v < n; ++v) {
    if (is_peeled[v]) continue;
    int part = 0;
    for (ArcId a : d.in_arcs(v)) part_of[a] = part++;
  }

  result.initial_residue = residue(d, part_of, top, budget);
  int lambda = result.initial_residue;
  for (;;) {
    std::optional<VertexId> start;
    for (VertexId v = 0; v < n && !start; ++v) {
      int out = 0;
      for (ArcId a : d.out_arcs(v)) out += part_of[a] == top ? 1 : 0;
      if (out > budget) start = v;
    }
    if (!start) break;

    const TrailClosure closure = compute_trail_closure(d, part_of, top, budget, *start);
    if (!closure.deficient_arc) {
      DensityCertificate cert;
      cert.start = *start;
      cert.vertices = closure.vertices;
      cert.heads = closure.heads;
      cert.tails_only = closure.tails_only;
      cert.arc_count = closure.arcs.size();
      cert.ratio = Rational(cert.arc_count, static_cast<std::int64_t>(cert.vertices.size()));
      cert.bound = ndt_density_bound(k, budget);
      const auto z1 = static_cast<std::int64_t>(cert.heads.size());
      const auto z2 = static_cast<std::int64_t>(cert.tails_only.size());
      if (cert.arc_count != (k + 1) * z1 || z1 <= std::int64_t{budget} * z2)
        throw std::logic_error("exhausted trail closure does not certify density");
      result.outcome = std::move(cert);
      return result;
    }

    swap_along_trail(closure, part_of, top);
    ++result.swaps;
    const int next = residue(d, part_of, top, budget);
    if (next != lambda - 1) throw std::logic_error("trail swap did not lower the residue by one");
    lambda = next;
#ifndef NDEBUG
    if (!in_degrees_ok(d, part_of, k + 1))
      throw std::logic_error("trail swap broke a pseudo-branching");
#endif
  }

  // Put the peeled arcs back, last peeled first; each such vertex has no other
  // entering arcs, so parts 0..l-1 stay pseudo-branchings.
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    int part = 0;
    for (ArcId a : d.in_arcs(*it)) part_of[a] = part++;
  }
  result.outcome = Decomposition{d, k + 1, std::move(part_of), DecompositionKind::PseudoBranching};
  return result;
}

}  // namespace ndt
