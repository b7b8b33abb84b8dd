#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "ndt/decompose.hpp"
#include "ndt/digraph.hpp"
#include "ndt/rational.hpp"

namespace ndt {

struct OracleBudget {
  int max_vertices = 16;  // subset enumeration
  int max_arcs = 14;      // decomposition search
  std::optional<std::chrono::milliseconds> time_limit;

  void validate() const;
};

// Literal maxima over all vertex subsets. Throw BudgetExceeded above
// max_vertices.
Rational brute_gamma(const Digraph& d, const OracleBudget& budget = {});
Rational brute_mad(const Digraph& d, const OracleBudget& budget = {});

// Exhaustive search finished without finding a decomposition.
struct ProvenInfeasible {
  std::int64_t nodes = 0;
};

using OracleOutcome = std::variant<Decomposition, ProvenInfeasible>;

/// Backtracking search for a decomposition.
///
/// Without top_budget the search looks for k parts; with it, k+1 parts whose
/// last part has out-degree <= *top_budget. Parts that are interchangeable are
/// used in first-use order, so each decomposition is found once up to
/// relabelling. Throws BudgetExceeded above max_arcs or past the time limit;
/// infeasibility is only reported after the search completes.
OracleOutcome brute_decompose(const Digraph& d, int k, std::optional<int> top_budget,
                              DecompositionKind kind, const OracleBudget& budget = {});

// Receives part_of for each decomposition found; return false to stop.
using DecompositionVisitor = std::function<bool(const std::vector<int>&)>;

/// Enumerates every decomposition into `parts` parts (up to relabelling of
/// interchangeable parts) and returns how many were visited.
std::int64_t enumerate_decompositions(const Digraph& d, int parts, std::optional<int> top_budget,
                                      DecompositionKind kind, const DecompositionVisitor& visit,
                                      const OracleBudget& budget = {});

}  // namespace ndt
