#include "ndt/hall.hpp"

#include <string>

#include "ndt/error.hpp"
#include "ndt/flow.hpp"

namespace ndt {

void HallInstance::validate() const {
  const int n = digraph.num_vertices();
  if (static_cast<int>(budget.size()) != n)
    throw InputError("budget must have one entry per vertex");
  for (int b : budget)
    if (b < 0) throw InputError("budget must be non-negative");
  std::vector<int> hits(static_cast<std::size_t>(n), 0);
  for (VertexId v : sources) {
    digraph.check_vertex(v);
    ++hits[v];
  }
  for (VertexId v : targets) {
    digraph.check_vertex(v);
    ++hits[v];
  }
  for (VertexId v = 0; v < n; ++v)
    if (hits[v] != 1)
      throw InputError("sources and targets must partition the vertex set (vertex " +
                       std::to_string(v) + ")");
}

std::int64_t budget_sum(std::span<const int> budget, std::span<const VertexId> vertices) {
  std::int64_t sum = 0;
  for (VertexId v : vertices) sum += budget[v];
  return sum;
}

HallViolationError::HallViolationError(HallViolation violation)
    : std::runtime_error("Hall condition violated: deficiency " +
                         std::to_string(violation.deficiency)),
      violation_(std::move(violation)) {}

std::optional<HallViolation> check_hall(const Digraph& d, std::span<const char> is_target,
                                        std::span<const int> budget) {
  const int n = d.num_vertices();
  std::vector<int> target_node(static_cast<std::size_t>(n), -1);
  int num_targets = 0;
  for (VertexId v = 0; v < n; ++v)
    if (is_target[v]) target_node[v] = num_targets++;
  if (num_targets == 0) return std::nullopt;

  // Selection network: choosing target t (profit 1 + f(t)) forces paying f(u)
  // for t itself and every tail u of an arc into t. The best selection is worth
  // max_X |X| - f̃(N⁻(X)); the condition holds iff that is <= 0, i.e. the flow
  // saturates every source edge.
  const int source = num_targets + n;
  const int sink = source + 1;
  FlowNetwork net(num_targets + n + 2, source, sink);
  std::int64_t total = 0;
  for (VertexId t = 0; t < n; ++t) {
    if (!is_target[t]) continue;
    const int x = target_node[t];
    net.add_edge(source, x, 1 + std::int64_t{budget[t]});
    total += 1 + budget[t];
    net.add_edge(x, num_targets + t, kUnboundedCapacity);
    for (ArcId a : d.in_arcs(t)) net.add_edge(x, num_targets + d.arc(a).tail, kUnboundedCapacity);
  }
  for (VertexId u = 0; u < n; ++u) net.add_edge(num_targets + u, sink, budget[u]);
  const MaxFlowResult flow = max_flow(net);
  if (flow.value == total) return std::nullopt;

  HallViolation violation;
  for (VertexId t = 0; t < n; ++t)
    if (is_target[t] && flow.source_side[target_node[t]]) violation.subset.push_back(t);
  violation.deficiency = static_cast<std::int64_t>(violation.subset.size()) -
                         budget_sum(budget, in_neighbors(d, violation.subset));
  if (violation.subset.empty() || violation.deficiency <= 0)
    throw std::logic_error("Hall cut did not yield a deficient set");
  return violation;
}

std::optional<HallViolation> check_hall(const HallInstance& inst) {
  inst.validate();
  const auto mask = membership_mask(inst.digraph, inst.targets);
  return check_hall(inst.digraph, mask, inst.budget);
}

ExtractionState::ExtractionState(const HallInstance& inst)
    : inst_(&inst),
      uncovered_(membership_mask(inst.digraph, inst.targets)),
      residual_(inst.budget),
      branching_(inst.digraph.num_arcs()),
      remaining_(static_cast<int>(inst.targets.size())) {
  inst.validate();
}

VertexSet ExtractionState::uncovered() const {
  VertexSet out;
  for (VertexId v = 0; v < static_cast<int>(uncovered_.size()); ++v)
    if (uncovered_[v]) out.push_back(v);
  return out;
}

std::optional<VertexId> ExtractionState::next_source() const {
  for (VertexId v : in_neighbors(inst_->digraph, uncovered()))
    if (residual_[v] > 0) return v;
  return std::nullopt;
}

VertexSet ExtractionState::candidate_targets(VertexId s0) const {
  const Digraph& d = inst_->digraph;
  VertexSet out;
  for (ArcId a : d.out_arcs(s0)) {
    const VertexId t = d.arc(a).head;
    if (uncovered_[t]) out.push_back(t);
  }
  return normalize_vertex_set(d, out);
}

void ExtractionState::check_step(VertexId s0, VertexId t0) const {
  const Digraph& d = inst_->digraph;
  d.check_vertex(s0);
  d.check_vertex(t0);
  if (uncovered_[s0]) throw InputError("step source must be covered or a source vertex");
  if (residual_[s0] <= 0) throw InputError("step source has no residual budget");
  if (!uncovered_[t0]) throw InputError("step target is already covered");
  bool adjacent = false;
  for (ArcId a : d.out_arcs(s0)) adjacent = adjacent || d.arc(a).head == t0;
  if (!adjacent) throw InputError("no arc from step source to step target");
}

bool ExtractionState::commit_test(VertexId s0, VertexId t0) const {
  check_step(s0, t0);
  std::vector<char> next_uncovered = uncovered_;
  std::vector<int> next_residual = residual_;
  next_uncovered[t0] = 0;
  --next_residual[s0];
  return !check_hall(inst_->digraph, next_uncovered, next_residual).has_value();
}

void ExtractionState::commit(VertexId s0, VertexId t0) {
  check_step(s0, t0);
  const Digraph& d = inst_->digraph;
  for (ArcId a : d.out_arcs(s0))
    if (d.arc(a).head == t0) {
      branching_.insert(a);
      break;
    }
  uncovered_[t0] = 0;
  --residual_[s0];
  --remaining_;
}

std::optional<std::string> ExtractionState::check_properties() const {
  const Digraph& d = inst_->digraph;
  const int n = d.num_vertices();
  std::vector<int> in(static_cast<std::size_t>(n), 0), out(static_cast<std::size_t>(n), 0);
  for (ArcId a : branching_.to_vector()) {
    ++in[d.arc(a).head];
    ++out[d.arc(a).tail];
  }
  const auto is_target = membership_mask(d, inst_->targets);
  for (VertexId v = 0; v < n; ++v) {
    const auto where = " at vertex " + std::to_string(v);
    if (is_target[v] && !uncovered_[v] && in[v] != 1)
      return "(a) covered target without exactly one entering arc" + where;
    if (!uncovered_[v] && out[v] + residual_[v] > inst_->budget[v])
      return "(b) out-degree plus residual budget exceeds budget" + where;
    if (uncovered_[v] && (in[v] != 0 || out[v] != 0))
      return "(c) uncovered target touches the branching" + where;
  }
  return std::nullopt;
}

ArcSubset extract_bounded_branching(const HallInstance& inst, const ExtractionObserver& observer) {
  if (auto violation = check_hall(inst)) throw HallViolationError(std::move(*violation));
  ExtractionState state(inst);
  while (!state.done()) {
    const auto s0 = state.next_source();
    if (!s0) throw std::logic_error("no source with residual budget reaches the uncovered targets");
    ExtractionStep step{*s0, -1, -1, {}};
    for (VertexId t : state.candidate_targets(*s0)) {
      if (state.commit_test(*s0, t)) {
        step.target = t;
        break;
      }
      step.rejected.push_back(t);
    }
    if (step.target < 0) throw std::logic_error("extraction dead end: no feasible target");
    state.commit(*s0, step.target);
    for (ArcId a : inst.digraph.out_arcs(*s0))
      if (inst.digraph.arc(a).head == step.target) {
        step.arc = a;
        break;
      }
#ifndef NDEBUG
    if (auto broken = state.check_properties()) throw std::logic_error(*broken);
#endif
    if (observer) observer(state, step);
  }
  return state.branching();
}

}  // namespace ndt
