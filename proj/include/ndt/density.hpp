#pragma once

#include <cstdint>
#include <optional>

#include "ndt/digraph.hpp"
#include "ndt/rational.hpp"

namespace ndt {

// Arboricity: |A[H]| / (|H| - 1) over |H| >= 2.
// AverageDegree: 2 |A[H]| / |H| over |H| >= 1.
// Both are taken on the underlying multigraph, so every arc counts once.
enum class DensityMode { Arboricity, AverageDegree };

const char* to_string(DensityMode mode);

struct DensityWitness {
  VertexSet vertices;
  Rational ratio;
  DensityMode mode = DensityMode::Arboricity;
};

struct DensityResult {
  Rational value;
  DensityWitness witness;
};

// Density of the vertex set H in the given mode. Arboricity needs |H| >= 2,
// average degree needs |H| >= 1.
Rational density_of(const Digraph& d, std::span<const VertexId> h, DensityMode mode);

/// Returns some H whose density strictly exceeds p/q, or nullopt when none
/// exists.
///
/// Runs |V| max-flows in Arboricity mode (one per forced vertex) and a single
/// max-flow in AverageDegree mode. All capacities are integers derived from p
/// and q. When several sets qualify, the one maximising q|A[H]| - p(|H|-1)
/// (resp. 2q|A[H]| - p|H|) is returned; ties go to the lowest forced vertex and
/// then to the residual-reachable cut side.
std::optional<VertexSet> density_threshold_test(const Digraph& d, std::int64_t p,
                                                std::int64_t q, DensityMode mode);

/// γ(D): exact fractional arboricity and a maximising vertex set.
///
/// Dinkelbach iteration over threshold tests: start from the whole vertex set
/// and replace the current ratio by the ratio of the best improving set until
/// no set beats it. Requires at least two vertices.
DensityResult fractional_arboricity(const Digraph& d);

/// mad(D): exact maximum average degree of the underlying multigraph and a
/// maximising vertex set. Requires at least one vertex.
DensityResult max_average_degree(const Digraph& d);

}  // namespace ndt
