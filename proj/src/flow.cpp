#include "ndt/flow.hpp"

#include <algorithm>
#include <queue>

#include "ndt/error.hpp"

namespace ndt {

FlowNetwork::FlowNetwork(int num_nodes, int source, int sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink) {
  if (num_nodes < 2) throw InputError("flow network needs at least two nodes");
  if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes)
    throw InputError("flow terminal out of range");
  if (source == sink) throw InputError("source and sink coincide");
}

int FlowNetwork::add_edge(int from, int to, Capacity capacity) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_)
    throw InputError("flow edge endpoint out of range");
  if (capacity < 0) throw InputError("negative capacity");
  edges_.push_back({from, to, capacity});
  return static_cast<int>(edges_.size()) - 1;
}

namespace {

struct Residual {
  int to;
  int rev;  // index of the paired residual edge in adj[to]
  Capacity cap;
};

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : adj_(static_cast<std::size_t>(net.num_nodes())),
        level_(adj_.size()),
        next_(adj_.size()) {
    where_.reserve(net.edges().size());
    for (const FlowEdge& e : net.edges()) {
      const int fwd = static_cast<int>(adj_[e.from].size());
      const int bwd = static_cast<int>(adj_[e.to].size()) + (e.from == e.to ? 1 : 0);
      adj_[e.from].push_back({e.to, bwd, e.capacity});
      adj_[e.to].push_back({e.from, fwd, 0});
      where_.emplace_back(e.from, fwd);
    }
  }

  Capacity run(int s, int t) {
    Capacity total = 0;
    while (bfs(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (Capacity pushed = dfs(s, t, kUnboundedCapacity * 4)) total += pushed;
    }
    return total;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const Residual& r : adj_[u])
        if (r.cap > 0 && !seen[r.to]) {
          seen[r.to] = 1;
          q.push(r.to);
        }
    }
    return seen;
  }

  Capacity residual_of(std::size_t edge, const FlowNetwork& net) const {
    const auto [u, idx] = where_[edge];
    return net.edges()[edge].capacity - adj_[u][idx].cap;
  }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (const Residual& r : adj_[u])
        if (r.cap > 0 && level_[r.to] < 0) {
          level_[r.to] = level_[u] + 1;
          q.push(r.to);
        }
    }
    return level_[t] >= 0;
  }

  Capacity dfs(int u, int t, Capacity limit) {
    if (u == t) return limit;
    for (int& i = next_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
      Residual& r = adj_[u][i];
      if (r.cap <= 0 || level_[r.to] != level_[u] + 1) continue;
      if (Capacity got = dfs(r.to, t, std::min(limit, r.cap))) {
        r.cap -= got;
        adj_[r.to][r.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<Residual>> adj_;
  std::vector<int> level_;
  std::vector<int> next_;
  std::vector<std::pair<int, int>> where_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
  Dinic dinic(net);
  MaxFlowResult result;
  result.value = dinic.run(net.source(), net.sink());
  result.edge_flow.resize(net.edges().size());
  for (std::size_t e = 0; e < net.edges().size(); ++e)
    result.edge_flow[e] = dinic.residual_of(e, net);
  result.source_side = dinic.reachable(net.source());
  return result;
}

}  // namespace ndt
