#pragma once

// Test-only helpers: random instances and small independent oracles that do
// not share code with the library under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ndt/digraph.hpp"
#include "ndt/rational.hpp"

namespace ndt::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random loop-free multidigraph; every head has in-degree <= max_in.
inline Digraph random_digraph(Rng& rng, int n, int m, int max_in = 1 << 20,
                              bool allow_parallel = true) {
  std::vector<Arc> arcs;
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  int attempts = 0;
  while (static_cast<int>(arcs.size()) < m && attempts++ < 50 * (m + 1)) {
    const int t = uniform(rng, 0, n - 1);
    const int h = uniform(rng, 0, n - 1);
    if (t == h || indeg[h] >= max_in) continue;
    if (!allow_parallel) {
      bool seen = false;
      for (const Arc& a : arcs) seen = seen || (a.tail == t && a.head == h);
      if (seen) continue;
    }
    arcs.push_back({t, h});
    ++indeg[h];
  }
  return Digraph(n, std::move(arcs));
}

inline int arcs_inside(const Digraph& d, std::uint32_t mask) {
  int c = 0;
  for (const Arc& a : d.arcs()) c += ((mask >> a.tail) & 1U) && ((mask >> a.head) & 1U);
  return c;
}

// max |A[H]|/(|H|-1) over |H| >= 2, by listing subsets.
inline Rational naive_gamma(const Digraph& d) {
  Rational best(0);
  const std::uint32_t full = 1U << d.num_vertices();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int size = std::popcount(mask);
    if (size < 2) continue;
    const Rational r(arcs_inside(d, mask), size - 1);
    if (r > best) best = r;
  }
  return best;
}

// max 2|A[H]|/|H| over non-empty H.
inline Rational naive_mad(const Digraph& d) {
  Rational best(0);
  const std::uint32_t full = 1U << d.num_vertices();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const Rational r(2 * arcs_inside(d, mask), std::popcount(mask));
    if (r > best) best = r;
  }
  return best;
}

inline int in_degree_max(const Digraph& d) {
  std::vector<int> in(static_cast<std::size_t>(d.num_vertices()), 0);
  int best = 0;
  for (const Arc& a : d.arcs()) best = std::max(best, ++in[a.head]);
  return best;
}

// Independent check of a labelled arc partition. Returns true when every part
// has in-degree <= 1, the part graphs are forests when `acyclic`, and part
// `parts - 1` has out-degree <= *top_budget.
inline bool valid_partition(const Digraph& d, const std::vector<int>& part_of, int parts,
                            bool acyclic, std::optional<int> top_budget) {
  if (static_cast<int>(part_of.size()) != d.num_arcs()) return false;
  const int n = d.num_vertices();
  for (int p = 0; p < parts; ++p) {
    std::vector<int> in(n, 0), out(n, 0), root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (int a = 0; a < d.num_arcs(); ++a) {
      if (part_of[a] < 0 || part_of[a] >= parts) return false;
      if (part_of[a] != p) continue;
      const Arc arc = d.arc(a);
      if (++in[arc.head] > 1) return false;
      ++out[arc.tail];
      if (acyclic) {
        const int x = find(arc.tail), y = find(arc.head);
        if (x == y) return false;
        root[x] = y;
      }
    }
    if (top_budget && p == parts - 1)
      for (int v = 0; v < n; ++v)
        if (out[v] > *top_budget) return false;
  }
  return true;
}

// Hall condition by listing every non-empty X ⊆ targets.
inline bool naive_hall(const Digraph& d, const std::vector<char>& is_target,
                       const std::vector<int>& budget) {
  std::vector<int> targets;
  for (int v = 0; v < d.num_vertices(); ++v)
    if (is_target[v]) targets.push_back(v);
  const std::uint32_t full = 1U << targets.size();
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::vector<char> in_x(d.num_vertices(), 0), in_n(d.num_vertices(), 0);
    int size = 0;
    for (std::size_t i = 0; i < targets.size(); ++i)
      if ((mask >> i) & 1U) in_x[targets[i]] = 1, ++size;
    for (const Arc& a : d.arcs())
      if (in_x[a.head] && !in_x[a.tail]) in_n[a.tail] = 1;
    std::int64_t pay = 0;
    for (int v = 0; v < d.num_vertices(); ++v)
      if (in_n[v]) pay += budget[v];
    if (pay < size) return false;
  }
  return true;
}

}  // namespace ndt::testing
