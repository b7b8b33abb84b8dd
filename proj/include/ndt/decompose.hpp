#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ndt/density.hpp"
#include "ndt/digraph.hpp"
#include "ndt/rational.hpp"

namespace ndt {

// Branching: every part has in-degree <= 1 and an acyclic underlying graph.
// PseudoBranching: every part has in-degree <= 1; cycles are allowed.
enum class DecompositionKind { Branching, PseudoBranching };

const char* to_string(DecompositionKind kind);

/// Partition of the arc set of `parent` into `parts` labelled parts.
///
/// Part indices are 0-based here; part `parts - 1` is the out-degree bounded
/// part for the (k+1)-part decompositions. Empty parts are kept.
struct Decomposition {
  Digraph parent;
  int parts = 0;
  std::vector<int> part_of;  // ArcId -> part index
  DecompositionKind kind = DecompositionKind::Branching;

  std::vector<ArcId> arcs_in_part(int part) const;
  int out_degree_in_part(int part, VertexId v) const;
  int max_out_degree_in_part(int part) const;
};

enum class ViolationType { WrongSize, PartOutOfRange, InDegree, Cycle, OutDegree };

const char* to_string(ViolationType type);

struct DecompositionViolation {
  ViolationType type;
  int part = -1;
  VertexId vertex = -1;
  std::vector<ArcId> arcs;  // offending arcs; the cycle for ViolationType::Cycle
  std::string message;
};

// Checks totality, per-part in-degree <= 1, acyclicity for Branching kind, and
// out-degree <= top_budget on the last part when given. Reports the first
// violation found.
std::optional<DecompositionViolation> verify_decomposition(
    const Decomposition& dec, std::optional<int> top_budget = std::nullopt);

struct InDegreeWitness {
  VertexId vertex;
  int in_degree;
  int bound;
};

/// Thrown when an input fails a decomposition's in-degree or density bound. Carries
/// the vertex or vertex set that proves it.
class HypothesisError : public std::runtime_error {
 public:
  using Witness = std::variant<InDegreeWitness, DensityWitness>;

  HypothesisError(Witness witness, Rational bound, const std::string& what);
  const Witness& witness() const { return witness_; }
  // The bound the witness exceeds (in-degree bound or density bound).
  const Rational& bound() const { return bound_; }

 private:
  Witness witness_;
  Rational bound_;
};

/// Splits D into k branchings. Requires Δ⁻(D) <= k and γ(D) <= k, otherwise
/// throws HypothesisError.
///
/// Adds a root r with k - d⁻(v) arcs r→v for every vertex, peels off k
/// arc-disjoint spanning r-arborescences one arc at a time (each arc committed
/// only if root-connectivity k-i-1 survives), then drops r.
Decomposition frank_decompose(const Digraph& d, int k);

/// k+1 branchings with Δ⁺(part k+1) <= d, for d <= k.
///
/// Needs γ(D) <= k + (d-k)/(d+1) and Δ⁻(D) <= k+1. The last part is a
/// Hall-extracted branching covering every vertex of in-degree k+1 with
/// out-degree budget d; the rest is split by frank_decompose. Throws
/// UnsupportedCase for d > k.
Decomposition ndt_branching_decompose(const Digraph& d, int k, int budget);

struct PseudoforestDecomposition {
  // Parent of the decomposition is the reoriented digraph; arc ids match the
  // input, and reversed[a] says whether arc a was flipped.
  Decomposition decomposition;
  std::vector<char> reversed;
};

/// Splits the underlying graph into k pseudo-forests: orients it with all
/// in-degrees <= k by max-flow, then colours the arcs at each head 0..k-1.
/// Throws HypothesisError when mad(D) > 2k.
PseudoforestDecomposition hakimi_pseudoforest_decompose(const Digraph& d, int k);

/// Vertex set V(v₀) of an exhausted trail closure. Its induced density beats
/// the hypothesis bound, so no decomposition was promised for this input.
struct DensityCertificate {
  VertexId start = -1;       // v₀
  VertexSet vertices;        // V(v₀) = Z₁ ∪ Z₂
  VertexSet heads;           // Z₁
  VertexSet tails_only;      // Z₂
  std::int64_t arc_count = 0;  // |A(v₀)| = (k+1)|Z₁|
  Rational ratio;            // arc_count / |V(v₀)|
  Rational bound;            // k + (d-k)/(d+1)
};

// Recomputes |A[V(v₀)]| in d and confirms it is at least arc_count, that the
// ratio matches, and that it exceeds the bound.
bool certificate_holds(const Digraph& d, const DensityCertificate& cert);

/// Union of all alternating trails from `start` in a pseudo-branching
/// decomposition: forward arcs of the top part alternate with arbitrary arcs
/// entering the same head.
struct TrailClosure {
  VertexId start = -1;
  ArcSubset arcs;
  VertexSet vertices;
  VertexSet heads;        // positive in-degree inside the closure (Z₁)
  VertexSet tails_only;   // the rest (Z₂)
  std::vector<ArcId> predecessor;  // per arc; -1 for first arcs and non-members
  std::vector<char> forward;       // per arc; 1 if reached as a top-part arc
  // First backward arc discovered whose tail has top out-degree < budget.
  std::optional<ArcId> deficient_arc;
};

TrailClosure compute_trail_closure(const Digraph& d, std::span<const int> part_of, int top_part,
                                   int budget, VertexId start);

// Σ_v max(d⁺_top(v) - budget, 0).
int residue(const Digraph& d, std::span<const int> part_of, int top_part, int budget);

struct PseudoNdtResult {
  std::variant<Decomposition, DensityCertificate> outcome;
  int peeled_vertices = 0;
  int initial_residue = 0;
  int swaps = 0;

  bool succeeded() const { return std::holds_alternative<Decomposition>(outcome); }
};

/// k+1 pseudo-branchings with Δ⁺(part k+1) <= d, or a density certificate.
///
/// Requires Δ⁻(D) <= k+1 (HypothesisError otherwise). The density hypothesis
/// mad(D)/2 <= k + (d-k)/(d+1) is not pre-checked: if it fails the run may end
/// with a DensityCertificate instead.
///
///  1. Peel the in-arcs of every vertex with 0 < d⁻ <= k.
///  2. On the core, give the k+1 arcs entering each head distinct parts.
///  3. While some v₀ has top out-degree > d, grow its trail closure; swap
///     along the trail to a deficient vertex, or stop with a certificate.
///  4. Put peeled arcs back into parts 0..l-1.
PseudoNdtResult pseudo_ndt_decompose(const Digraph& d, int k, int budget);

}  // namespace ndt
