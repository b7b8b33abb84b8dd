#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ndt/digraph.hpp"

namespace ndt {

/// A partition {sources, targets} of V(D) together with an out-degree budget
/// for every vertex.
struct HallInstance {
  Digraph digraph;
  VertexSet sources;           // S
  VertexSet targets;           // T
  std::vector<int> budget;     // f, one entry per vertex

  // Throws InputError unless {sources, targets} partitions V and budget >= 0.
  void validate() const;
};

// Sum of the budget over a vertex set (the subset-sum extension of f).
std::int64_t budget_sum(std::span<const int> budget, std::span<const VertexId> vertices);

/// A non-empty X ⊆ T whose in-neighbourhood cannot pay for it:
/// deficiency = |X| - f̃(N⁻(X)) > 0.
struct HallViolation {
  VertexSet subset;
  std::int64_t deficiency = 0;
};

class HallViolationError : public std::runtime_error {
 public:
  explicit HallViolationError(HallViolation violation);
  const HallViolation& violation() const { return violation_; }

 private:
  HallViolation violation_;
};

// Checks f̃(N⁻(X)) >= |X| for every non-empty X ⊆ targets, where N⁻(X) is taken
// in the whole digraph (it may contain targets outside X). One max-flow.
std::optional<HallViolation> check_hall(const Digraph& d, std::span<const char> is_target,
                                        std::span<const int> budget);
std::optional<HallViolation> check_hall(const HallInstance& inst);

/// Mutable state of the branching extraction: the covered/uncovered split
/// (S*, T*), the residual budget f*, and the branching B built so far.
///
/// Every commit keeps three properties:
///   (a) covered targets have exactly one arc of B entering them,
///   (b) every v in S* has d⁺_B(v) + f*(v) <= f(v),
///   (c) every uncovered target is isolated in B.
class ExtractionState {
 public:
  explicit ExtractionState(const HallInstance& inst);

  const HallInstance& instance() const { return *inst_; }
  bool is_uncovered(VertexId v) const { return uncovered_[v] != 0; }
  const std::vector<char>& uncovered_mask() const { return uncovered_; }
  VertexSet uncovered() const;
  const std::vector<int>& residual_budget() const { return residual_; }
  const ArcSubset& branching() const { return branching_; }
  bool done() const { return remaining_ == 0; }

  // Smallest vertex in N⁻(T*) with positive residual budget, if any.
  std::optional<VertexId> next_source() const;

  // Uncovered out-neighbours of s0, ascending.
  VertexSet candidate_targets(VertexId s0) const;

  // Would the Hall inequality over the new T* still hold after adding s0→t0?
  bool commit_test(VertexId s0, VertexId t0) const;

  // Adds the smallest arc s0→t0 to B, moves t0 from T* to S*, decrements f*(s0).
  void commit(VertexId s0, VertexId t0);

  // Returns a description of the first broken property, or nullopt.
  std::optional<std::string> check_properties() const;

 private:
  void check_step(VertexId s0, VertexId t0) const;

  const HallInstance* inst_;
  std::vector<char> uncovered_;
  std::vector<int> residual_;
  ArcSubset branching_;
  int remaining_ = 0;
};

struct ExtractionStep {
  VertexId source;
  VertexId target;
  ArcId arc;
  VertexSet rejected;  // candidates tried before `target` that failed commit_test
};

using ExtractionObserver = std::function<void(const ExtractionState&, const ExtractionStep&)>;

/// Builds a branching B with d⁻_B(t) = 1 for every target and d⁺_B(v) <= f(v)
/// for every vertex. Throws HallViolationError if the Hall condition fails.
///
/// Test-and-commit: pick the smallest source with remaining budget, then the
/// smallest uncovered out-neighbour for which commit_test passes. The observer,
/// if given, sees the state after each commit.
ArcSubset extract_bounded_branching(const HallInstance& inst,
                                    const ExtractionObserver& observer = {});

}  // namespace ndt
