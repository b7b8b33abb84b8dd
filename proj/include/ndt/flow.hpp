#pragma once

#include <cstdint>
#include <vector>

namespace ndt {

using Capacity = std::int64_t;

// Capacity used for "unbounded" edges. Large enough to never be the bottleneck
// for any finite capacity sum at desk scale, small enough that sums of a few
// thousand of them do not overflow.
inline constexpr Capacity kUnboundedCapacity = Capacity{1} << 50;

struct FlowEdge {
  int from;
  int to;
  Capacity capacity;
};

/// Directed capacity network with designated terminals.
class FlowNetwork {
 public:
  FlowNetwork(int num_nodes, int source, int sink);

  // Returns the edge index.
  int add_edge(int from, int to, Capacity capacity);

  int num_nodes() const { return num_nodes_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<FlowEdge>& edges() const { return edges_; }

 private:
  int num_nodes_;
  int source_;
  int sink_;
  std::vector<FlowEdge> edges_;
};

struct MaxFlowResult {
  Capacity value = 0;
  std::vector<Capacity> edge_flow;  // indexed like FlowNetwork::edges()
  // Nodes reachable from the source in the final residual network.
  std::vector<char> source_side;
};

// Dinic's algorithm. The cut side is the canonical residual-reachable set, so
// results are reproducible for a fixed edge insertion order.
MaxFlowResult max_flow(const FlowNetwork& net);

}  // namespace ndt
