#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ndt {

using VertexId = int;
using ArcId = int;

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

struct Arc {
  VertexId tail;
  VertexId head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Membership set over the arc ids of one digraph.
class ArcSubset {
 public:
  ArcSubset() = default;
  explicit ArcSubset(int universe) : member_(static_cast<std::size_t>(universe), 0) {}

  int universe() const { return static_cast<int>(member_.size()); }
  bool contains(ArcId a) const { return member_[static_cast<std::size_t>(a)] != 0; }
  void insert(ArcId a) { member_[static_cast<std::size_t>(a)] = 1; }
  void erase(ArcId a) { member_[static_cast<std::size_t>(a)] = 0; }
  int size() const;
  std::vector<ArcId> to_vector() const;

  friend bool operator==(const ArcSubset&, const ArcSubset&) = default;

 private:
  std::vector<char> member_;
};

/// Loop-free multidigraph on vertices 0..n-1 with arcs 0..m-1.
///
/// Immutable after construction. Parallel arcs are allowed and keep distinct
/// ids; loops are rejected with InputError.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int num_vertices, std::vector<Arc> arcs = {});

  int num_vertices() const { return num_vertices_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
  std::span<const Arc> arcs() const { return arcs_; }

  // Arc ids entering / leaving v, ascending.
  std::span<const ArcId> in_arcs(VertexId v) const;
  std::span<const ArcId> out_arcs(VertexId v) const;

  int in_degree(VertexId v) const { return static_cast<int>(in_arcs(v).size()); }
  int out_degree(VertexId v) const { return static_cast<int>(out_arcs(v).size()); }

  bool has_vertex(VertexId v) const { return v >= 0 && v < num_vertices_; }
  void check_vertex(VertexId v) const;

 private:
  int num_vertices_ = 0;
  std::vector<Arc> arcs_;
  // CSR layout: ids of arcs entering v are in_ids_[in_start_[v] .. in_start_[v+1]).
  std::vector<int> in_start_, out_start_;
  std::vector<ArcId> in_ids_, out_ids_;
};

int max_in_degree(const Digraph& d);
int max_out_degree(const Digraph& d);

// N⁻(X): vertices outside X with an arc into X.
VertexSet in_neighbors(const Digraph& d, std::span<const VertexId> x);
// N⁺(X): vertices outside X with an arc from X.
VertexSet out_neighbors(const Digraph& d, std::span<const VertexId> x);

// [X, Y]_D: arcs u→v with u ∈ X, v ∈ Y, counted with multiplicity.
std::int64_t count_arcs_between(const Digraph& d, std::span<const VertexId> x,
                                std::span<const VertexId> y);

// |A[X]|.
std::int64_t count_induced_arcs(const Digraph& d, std::span<const VertexId> x);

// A subdigraph together with the ids it had in its parent.
struct Subdigraph {
  Digraph graph;
  std::vector<VertexId> parent_vertex;  // local vertex -> parent vertex
  std::vector<ArcId> parent_arc;        // local arc -> parent arc
};

// D[X]; local vertex i corresponds to the i-th smallest element of X.
Subdigraph induced_subdigraph(const Digraph& d, std::span<const VertexId> x);

// D - A0 on the same vertex set; surviving arcs keep their relative order.
Subdigraph remove_arcs(const Digraph& d, const ArcSubset& removed);

// Validates ids and returns X sorted and deduplicated.
VertexSet normalize_vertex_set(const Digraph& d, std::span<const VertexId> x);

std::vector<char> membership_mask(const Digraph& d, std::span<const VertexId> x);

}  // namespace ndt
