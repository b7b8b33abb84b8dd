#include "ndt/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "ndt/error.hpp"

namespace ndt {

void OracleBudget::validate() const {
  if (max_vertices < 1 || max_arcs < 1) throw InputError("oracle limits must be positive");
  if (time_limit && time_limit->count() <= 0) throw InputError("oracle time limit must be positive");
}

namespace {

void check_subset_budget(const Digraph& d, const OracleBudget& budget) {
  budget.validate();
  if (d.num_vertices() > budget.max_vertices || d.num_vertices() > 30)
    throw BudgetExceeded("subset enumeration refused: " + std::to_string(d.num_vertices()) +
                         " vertices exceed the budget of " + std::to_string(budget.max_vertices));
}

template <typename Score>
void for_each_subset(const Digraph& d, Score&& score) {
  const int n = d.num_vertices();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::int64_t arcs = 0;
    for (const Arc& a : d.arcs())
      if ((mask >> a.tail & 1U) && (mask >> a.head & 1U)) ++arcs;
    score(std::popcount(mask), arcs);
  }
}

}  // namespace

Rational brute_gamma(const Digraph& d, const OracleBudget& budget) {
  check_subset_budget(d, budget);
  if (d.num_vertices() < 2) throw InputError("fractional arboricity needs at least two vertices");
  Rational best(0);
  for_each_subset(d, [&](int size, std::int64_t arcs) {
    if (size >= 2) best = std::max(best, Rational(arcs, size - 1));
  });
  return best;
}

Rational brute_mad(const Digraph& d, const OracleBudget& budget) {
  check_subset_budget(d, budget);
  if (d.num_vertices() < 1) throw InputError("max average degree needs at least one vertex");
  Rational best(0);
  for_each_subset(d, [&](int size, std::int64_t arcs) {
    best = std::max(best, Rational(2 * arcs, size));
  });
  return best;
}

namespace {

// Union-find with undo; union by size, no path compression.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(parent_.size(), 1) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    size_[parent_[b]] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

class Search {
 public:
  Search(const Digraph& d, int parts, std::optional<int> top_budget, DecompositionKind kind,
         const OracleBudget& budget, const DecompositionVisitor& visit)
      : d_(d),
        parts_(parts),
        interchangeable_(top_budget ? parts - 1 : parts),
        top_budget_(top_budget),
        branching_(kind == DecompositionKind::Branching),
        visit_(visit),
        part_of_(static_cast<std::size_t>(d.num_arcs()), -1),
        has_in_(static_cast<std::size_t>(parts) * d.num_vertices(), 0),
        top_out_(static_cast<std::size_t>(d.num_vertices()), 0) {
    budget.validate();
    if (parts < 1) throw InputError("part count must be positive");
    if (top_budget && *top_budget < 0) throw InputError("out-degree budget must be non-negative");
    if (d.num_arcs() > budget.max_arcs)
      throw BudgetExceeded("decomposition search refused: " + std::to_string(d.num_arcs()) +
                           " arcs exceed the budget of " + std::to_string(budget.max_arcs));
    if (budget.time_limit) deadline_ = std::chrono::steady_clock::now() + *budget.time_limit;
    if (branching_) forests_.assign(static_cast<std::size_t>(parts), RollbackUnionFind(d.num_vertices()));
  }

  void run() {
    for (VertexId v = 0; v < d_.num_vertices(); ++v)
      if (d_.in_degree(v) > parts_) return;  // pigeonhole
    descend(0);
  }

  std::int64_t nodes() const { return nodes_; }
  std::int64_t found() const { return found_; }

 private:
  bool descend(ArcId a) {
    if (++nodes_ % 4096 == 0 && deadline_ && std::chrono::steady_clock::now() > *deadline_)
      throw BudgetExceeded("decomposition search refused: time limit reached");
    if (a == d_.num_arcs()) {
      ++found_;
      return visit_(part_of_);
    }
    const Arc& arc = d_.arc(a);
    const int top = parts_ - 1;
    for (int p = 0; p < parts_; ++p) {
      if (p < interchangeable_ && p > used_) continue;
      char& in = has_in_[static_cast<std::size_t>(p) * d_.num_vertices() + arc.head];
      if (in) continue;
      if (top_budget_ && p == top && top_out_[arc.tail] >= *top_budget_) continue;
      if (branching_ && forests_[p].find(arc.tail) == forests_[p].find(arc.head)) continue;

      in = 1;
      part_of_[a] = p;
      if (top_budget_ && p == top) ++top_out_[arc.tail];
      if (branching_) forests_[p].unite(arc.tail, arc.head);
      const bool opened = p < interchangeable_ && p == used_;
      if (opened) ++used_;

      const bool keep_going = descend(a + 1);

      if (opened) --used_;
      if (branching_) forests_[p].undo();
      if (top_budget_ && p == top) --top_out_[arc.tail];
      part_of_[a] = -1;
      in = 0;
      if (!keep_going) return false;
    }
    return true;
  }

  const Digraph& d_;
  int parts_;
  int interchangeable_;
  std::optional<int> top_budget_;
  bool branching_;
  const DecompositionVisitor& visit_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  std::vector<int> part_of_;
  std::vector<char> has_in_;
  std::vector<int> top_out_;
  std::vector<RollbackUnionFind> forests_;
  int used_ = 0;
  std::int64_t nodes_ = 0;
  std::int64_t found_ = 0;
};

}  // namespace

std::int64_t enumerate_decompositions(const Digraph& d, int parts, std::optional<int> top_budget,
                                      DecompositionKind kind, const DecompositionVisitor& visit,
                                      const OracleBudget& budget) {
  Search search(d, parts, top_budget, kind, budget, visit);
  search.run();
  return search.found();
}

OracleOutcome brute_decompose(const Digraph& d, int k, std::optional<int> top_budget,
                              DecompositionKind kind, const OracleBudget& budget) {
  if (k < 1) throw InputError("k must be positive");
  const int parts = top_budget ? k + 1 : k;
  std::optional<std::vector<int>> first;
  const DecompositionVisitor keep_first = [&](const std::vector<int>& part_of) {
    first = part_of;
    return false;
  };
  Search search(d, parts, top_budget, kind, budget, keep_first);
  search.run();
  if (first) return Decomposition{d, parts, std::move(*first), kind};
  return ProvenInfeasible{search.nodes()};
}

}  // namespace ndt
