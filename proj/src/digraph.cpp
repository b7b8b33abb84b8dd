#include "ndt/digraph.hpp"

#include <algorithm>
#include <string>

#include "ndt/error.hpp"

namespace ndt {

int ArcSubset::size() const {
  return static_cast<int>(std::count(member_.begin(), member_.end(), char{1}));
}

std::vector<ArcId> ArcSubset::to_vector() const {
  std::vector<ArcId> out;
  for (int a = 0; a < universe(); ++a)
    if (contains(a)) out.push_back(a);
  return out;
}

namespace {

void build_csr(int n, const std::vector<Arc>& arcs, bool by_head,
               std::vector<int>& start, std::vector<ArcId>& ids) {
  start.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const Arc& a : arcs) ++start[static_cast<std::size_t>(by_head ? a.head : a.tail) + 1];
  for (int v = 0; v < n; ++v) start[v + 1] += start[v];
  ids.assign(arcs.size(), 0);
  std::vector<int> fill(start.begin(), start.end() - 1);
  for (ArcId id = 0; id < static_cast<ArcId>(arcs.size()); ++id) {
    const Arc& a = arcs[id];
    ids[fill[by_head ? a.head : a.tail]++] = id;
  }
}

}  // namespace

Digraph::Digraph(int num_vertices, std::vector<Arc> arcs)
    : num_vertices_(num_vertices), arcs_(std::move(arcs)) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (!has_vertex(a.tail) || !has_vertex(a.head))
      throw InputError("arc " + std::to_string(i) + " has an endpoint out of range");
    if (a.tail == a.head)
      throw InputError("arc " + std::to_string(i) + " is a loop at vertex " +
                       std::to_string(a.tail));
  }
  build_csr(num_vertices_, arcs_, true, in_start_, in_ids_);
  build_csr(num_vertices_, arcs_, false, out_start_, out_ids_);
}

std::span<const ArcId> Digraph::in_arcs(VertexId v) const {
  return std::span<const ArcId>(in_ids_).subspan(
      in_start_[v], in_start_[v + 1] - in_start_[v]);
}

std::span<const ArcId> Digraph::out_arcs(VertexId v) const {
  return std::span<const ArcId>(out_ids_).subspan(
      out_start_[v], out_start_[v + 1] - out_start_[v]);
}

void Digraph::check_vertex(VertexId v) const {
  if (!has_vertex(v))
    throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(num_vertices_) + ")");
}

int max_in_degree(const Digraph& d) {
  int best = 0;
  for (VertexId v = 0; v < d.num_vertices(); ++v) best = std::max(best, d.in_degree(v));
  return best;
}

int max_out_degree(const Digraph& d) {
  int best = 0;
  for (VertexId v = 0; v < d.num_vertices(); ++v) best = std::max(best, d.out_degree(v));
  return best;
}

VertexSet normalize_vertex_set(const Digraph& d, std::span<const VertexId> x) {
  VertexSet out(x.begin(), x.end());
  for (VertexId v : out) d.check_vertex(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<char> membership_mask(const Digraph& d, std::span<const VertexId> x) {
  std::vector<char> mask(static_cast<std::size_t>(d.num_vertices()), 0);
  for (VertexId v : x) {
    d.check_vertex(v);
    mask[v] = 1;
  }
  return mask;
}

VertexSet in_neighbors(const Digraph& d, std::span<const VertexId> x) {
  const auto in_x = membership_mask(d, x);
  std::vector<char> seen(in_x.size(), 0);
  for (VertexId v : x)
    for (ArcId a : d.in_arcs(v)) {
      const VertexId y = d.arc(a).tail;
      if (!in_x[y]) seen[y] = 1;
    }
  VertexSet out;
  for (VertexId v = 0; v < d.num_vertices(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

VertexSet out_neighbors(const Digraph& d, std::span<const VertexId> x) {
  const auto in_x = membership_mask(d, x);
  std::vector<char> seen(in_x.size(), 0);
  for (VertexId v : x)
    for (ArcId a : d.out_arcs(v)) {
      const VertexId z = d.arc(a).head;
      if (!in_x[z]) seen[z] = 1;
    }
  VertexSet out;
  for (VertexId v = 0; v < d.num_vertices(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::int64_t count_arcs_between(const Digraph& d, std::span<const VertexId> x,
                                std::span<const VertexId> y) {
  const auto in_x = membership_mask(d, x);
  const auto in_y = membership_mask(d, y);
  std::int64_t count = 0;
  for (const Arc& a : d.arcs())
    if (in_x[a.tail] && in_y[a.head]) ++count;
  return count;
}

std::int64_t count_induced_arcs(const Digraph& d, std::span<const VertexId> x) {
  return count_arcs_between(d, x, x);
}

Subdigraph induced_subdigraph(const Digraph& d, std::span<const VertexId> x) {
  Subdigraph sub;
  sub.parent_vertex = normalize_vertex_set(d, x);
  std::vector<int> local(static_cast<std::size_t>(d.num_vertices()), -1);
  for (int i = 0; i < static_cast<int>(sub.parent_vertex.size()); ++i)
    local[sub.parent_vertex[i]] = i;
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    const Arc& arc = d.arc(a);
    if (local[arc.tail] >= 0 && local[arc.head] >= 0) {
      arcs.push_back({local[arc.tail], local[arc.head]});
      sub.parent_arc.push_back(a);
    }
  }
  sub.graph = Digraph(static_cast<int>(sub.parent_vertex.size()), std::move(arcs));
  return sub;
}

Subdigraph remove_arcs(const Digraph& d, const ArcSubset& removed) {
  if (removed.universe() != d.num_arcs())
    throw InputError("arc subset belongs to a different digraph");
  Subdigraph sub;
  sub.parent_vertex.resize(static_cast<std::size_t>(d.num_vertices()));
  for (VertexId v = 0; v < d.num_vertices(); ++v) sub.parent_vertex[v] = v;
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < d.num_arcs(); ++a) {
    if (removed.contains(a)) continue;
    arcs.push_back(d.arc(a));
    sub.parent_arc.push_back(a);
  }
  sub.graph = Digraph(d.num_vertices(), std::move(arcs));
  return sub;
}

}  // namespace ndt
