// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "ndt/decompose.hpp"
#include "ndt/density.hpp"
#include "ndt/error.hpp"
#include "ndt/families.hpp"
#include "ndt/hall.hpp"
#include "ndt/oracle.hpp"
#include "support.hpp"

using namespace ndt;
namespace t = ndt::testing;

namespace {

struct Report {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

std::string describe(const Digraph& d) {
  std::ostringstream os;
  os << "n=" << d.num_vertices() << " arcs=[";
  for (const Arc& a : d.arcs()) os << a.tail << ">" << a.head << ' ';
  os << ']';
  return os.str();
}

std::uint32_t mask_of(const VertexSet& s) {
  std::uint32_t m = 0;
  for (VertexId v : s) m |= 1U << v;
  return m;
}

// Random digraph where each vertex gets either no in-arcs or exactly k+1 of
// them, so the last-part machinery has work to do.
Digraph random_saturated(t::Rng& rng, int n, int max_arcs, int k) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Arc> arcs;
  for (VertexId v : order) {
    if (static_cast<int>(arcs.size()) + k + 1 > max_arcs) break;
    if (t::uniform(rng, 0, 2) == 0) continue;
    for (int i = 0; i <= k; ++i) {
      VertexId u = t::uniform(rng, 0, n - 2);
      if (u >= v) ++u;
      arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

// 1. Glued sharpness digraphs: exact γ, Δ⁻ and oracle infeasibility.
void sharpness(Report& r) {
  struct Params {
    int k, d, n;
  };
  for (const Params p : {Params{1, 1, 2}, {1, 1, 3}, {1, 2, 3}, {2, 1, 3}, {2, 2, 3}}) {
    const GluedDigraph g = gen_sharp_glued({p.k, p.d, p.n});
    const Rational expected(std::int64_t{p.d} * (p.k + 1) * p.n, std::int64_t{p.d + 1} * p.n - 1);
    const Rational computed = fractional_arboricity(g.graph).value;
    const Rational listed = t::naive_gamma(g.graph);
    const int in = t::in_degree_max(g.graph);
    r.detail << "(" << p.k << "," << p.d << "," << p.n << ") gamma=" << computed;
    if (computed != expected || listed != expected)
      r.fail("gamma " + computed.to_string() + " / listed " + listed.to_string() + " vs " +
             expected.to_string());
    if (in != p.k + 1) r.fail("in-degree " + std::to_string(in));
    if (g.graph.num_arcs() <= OracleBudget{}.max_arcs) {
      const OracleOutcome o = brute_decompose(g.graph, p.k, p.d, DecompositionKind::Branching);
      const bool infeasible = std::holds_alternative<ProvenInfeasible>(o);
      r.detail << " oracle=" << (infeasible ? "infeasible" : "FOUND");
      if (!infeasible) r.fail("oracle found a decomposition");
    } else if (p.k == 1 && p.d == 1 && p.n == 2) {
      r.fail("oracle budget too small for (1,1,2)");
    }
    r.detail << "; ";
  }
}

// 2. Branching decomposition with a bounded last part, d <= k.
void branching_suite(Report& r) {
  t::Rng rng(20240601);
  int accepted = 0, attempts = 0, nontrivial = 0;
  while (accepted < 500 && attempts < 500000) {
    ++attempts;
    const int k = t::uniform(rng, 1, 3);
    const int d = t::uniform(rng, 1, k);
    const int n = t::uniform(rng, 2, 12);
    const Digraph g = attempts % 2 ? t::random_digraph(rng, n, t::uniform(rng, 1, 14), k + 1)
                                   : random_saturated(rng, n, 14, k);
    if (t::in_degree_max(g) > k + 1) continue;
    if (brute_gamma(g) > ndt_density_bound(k, d)) continue;
    ++accepted;
    nontrivial += t::in_degree_max(g) == k + 1;
    try {
      const Decomposition dec = ndt_branching_decompose(g, k, d);
      const bool ok = !verify_decomposition(dec, d) && dec.parts == k + 1 &&
                      t::valid_partition(g, dec.part_of, k + 1, true, d);
      if (!ok) r.fail("invalid output k=" + std::to_string(k) + " d=" + std::to_string(d) + " " + describe(g));
    } catch (const std::exception& e) {
      r.fail(std::string(e.what()) + " on k=" + std::to_string(k) + " d=" + std::to_string(d) + " " + describe(g));
    }
  }
  if (accepted < 500) r.fail("only " + std::to_string(accepted) + " instances generated");
  r.detail << accepted << " instances (" << nontrivial << " with a vertex of in-degree k+1) from "
           << attempts << " draws";
}

// 3. Pseudo-branching decomposition; certificates only off-hypothesis.
void pseudo_suite(Report& r) {
  t::Rng rng(1010);
  int accepted = 0, attempts = 0, certificates = 0, swaps = 0;
  while (accepted < 500 && attempts < 500000) {
    ++attempts;
    const int k = t::uniform(rng, 1, 3);
    const int d = t::uniform(rng, 1, k + 2);
    const int n = t::uniform(rng, 2, 12);
    const Digraph g = attempts % 2 ? t::random_digraph(rng, n, t::uniform(rng, 1, 14), k + 1)
                                   : random_saturated(rng, n, 14, k);
    const Rational bound = ndt_density_bound(k, d);
    const bool hypothesis = brute_mad(g) / Rational(2) <= bound;
    try {
      const PseudoNdtResult res = pseudo_ndt_decompose(g, k, d);
      swaps += res.swaps;
      if (res.succeeded()) {
        const auto& dec = std::get<Decomposition>(res.outcome);
        if (verify_decomposition(dec, d) || !t::valid_partition(g, dec.part_of, k + 1, false, d))
          r.fail("invalid output " + describe(g));
      } else {
        ++certificates;
        const auto& cert = std::get<DensityCertificate>(res.outcome);
        const int inside = t::arcs_inside(g, mask_of(cert.vertices));
        const Rational ratio(inside, static_cast<std::int64_t>(cert.vertices.size()));
        if (hypothesis) r.fail("certificate under the hypothesis " + describe(g));
        if (!(ratio > bound) || inside < cert.arc_count || !certificate_holds(g, cert))
          r.fail("certificate does not recompute " + describe(g));
      }
    } catch (const std::exception& e) {
      r.fail(std::string(e.what()) + " " + describe(g));
    }
    accepted += hypothesis;
  }
  if (accepted < 500) r.fail("only " + std::to_string(accepted) + " instances generated");
  r.detail << accepted << " instances under the hypothesis, " << attempts << " runs in total, "
           << certificates << " certificates off-hypothesis (all recomputed), " << swaps << " swaps";
}

// 4. frank_decompose succeeds iff Δ⁻ <= k and γ <= k, and iff a brute-force
// decomposition exists.
void frank_suite(Report& r) {
  std::int64_t checked = 0, feasible = 0;
  auto check = [&](const Digraph& g) {
    for (int k = 1; k <= 3; ++k) {
      ++checked;
      const bool hypothesis =
          t::in_degree_max(g) <= k && (g.num_vertices() < 2 || brute_gamma(g) <= Rational(k));
      const bool exists = std::holds_alternative<Decomposition>(
          brute_decompose(g, k, std::nullopt, DecompositionKind::Branching));
      bool succeeded = false;
      try {
        const Decomposition dec = frank_decompose(g, k);
        succeeded = true;
        if (verify_decomposition(dec) || !t::valid_partition(g, dec.part_of, k, true, std::nullopt))
          r.fail("invalid output k=" + std::to_string(k) + " " + describe(g));
      } catch (const HypothesisError&) {
      }
      feasible += succeeded;
      if (succeeded != hypothesis || hypothesis != exists)
        r.fail("mismatch k=" + std::to_string(k) + " " + describe(g));
    }
  };
  // Every simple digraph on 2, 3 and 4 vertices with at most 10 arcs.
  for (int n = 2; n <= 4; ++n) {
    std::vector<Arc> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v) pairs.push_back({u, v});
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      if (std::popcount(mask) > 10) continue;
      std::vector<Arc> arcs;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1U) arcs.push_back(pairs[i]);
      check(Digraph(n, arcs));
    }
  }
  // Every multidigraph on 3 vertices with multiplicities <= 2, and on 2
  // vertices with at most 10 arcs.
  for (int code = 0; code < 729; ++code) {
    std::vector<Arc> arcs;
    int c = code;
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v) {
        if (u == v) continue;
        for (int i = c % 3; i > 0; --i) arcs.push_back({u, v});
        c /= 3;
      }
    check(Digraph(3, arcs));
  }
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; a + b <= 10; ++b) {
      std::vector<Arc> arcs(a, Arc{0, 1});
      arcs.insert(arcs.end(), b, Arc{1, 0});
      check(Digraph(2, arcs));
    }
  // Random multidigraphs up to 8 vertices and 10 arcs.
  t::Rng rng(44);
  for (int i = 0; i < 2000; ++i) {
    const int n = t::uniform(rng, 2, 8);
    check(t::random_digraph(rng, n, t::uniform(rng, 0, 10), t::uniform(rng, 1, 4)));
  }
  r.detail << checked << " (digraph, k) pairs, " << feasible << " decomposable";
}

// 5. Flow-based γ and mad equal the subset maxima.
void density_suite(Report& r) {
  int count = 0;
  auto check = [&](const Digraph& g, const std::string& label) {
    ++count;
    if (g.num_vertices() >= 2 && fractional_arboricity(g).value != brute_gamma(g))
      r.fail("gamma on " + label);
    if (g.num_vertices() >= 1 && max_average_degree(g).value != brute_mad(g))
      r.fail("mad on " + label);
  };
  t::Rng rng(555);
  for (int i = 0; i < 200; ++i) {
    const int n = t::uniform(rng, 2, 14);
    const Digraph g = t::random_digraph(rng, n, t::uniform(rng, 0, 3 * n));
    check(g, describe(g));
  }
  int families = 0;
  for (int k = 1; k <= 4; ++k)
    for (int d = 1; d <= 4; ++d)
      for (int n = k + 1; n <= 16; ++n) {
        if (n + d * n <= 16) {
          check(gen_sharp_base({k, d, n}), "base");
          ++families;
        }
        if (2 * (n + d * n) - 1 <= 16) {
          check(gen_sharp_glued({k, d, n}).graph, "glued");
          ++families;
        }
      }
  for (int k = 1; k <= 4; ++k) {
    int size = 1, layer = 1;
    for (int depth = 0; size <= 16; ++depth) {
      check(gen_tree_family({k, depth}), "tree");
      ++families;
      layer *= k + 1;
      size += layer;
    }
  }
  r.detail << count << " digraphs (200 random, " << families << " family instances)";
}

// 6. Extraction invariants, tight-set intersection closure.
void extraction_suite(Report& r) {
  t::Rng rng(606);
  int instances = 0, attempts = 0, steps = 0, closure_checks = 0, tight_pairs = 0;
  while (instances < 200 && attempts < 200000) {
    ++attempts;
    const int n = t::uniform(rng, 2, 12);
    const Digraph g = t::random_digraph(rng, n, t::uniform(rng, 1, 20));
    HallInstance inst{g, {}, {}, std::vector<int>(n)};
    std::vector<char> is_target(n);
    for (int v = 0; v < n; ++v) {
      is_target[v] = t::uniform(rng, 0, 4) < 3;
      (is_target[v] ? inst.targets : inst.sources).push_back(v);
      // Mostly unit budgets, so many sets are exactly paid for.
      inst.budget[v] = std::max(0, t::uniform(rng, -1, 3) / 2);
    }
    if (inst.targets.size() < 2 || !t::naive_hall(g, is_target, inst.budget)) continue;
    ++instances;

    ExtractionState state(inst);
    while (!state.done()) {
      ++steps;
      const auto s0 = state.next_source();
      if (!s0) {
        r.fail("no source with budget " + describe(g));
        break;
      }
      const VertexSet open = state.uncovered();
      const auto& f = state.residual_budget();
      if (open.size() <= 8) {
        // ℰ: X ⊆ T* with s0 ∈ N⁻(X) and f̃*(N⁻(X)) = |X|.
        std::vector<std::uint32_t> tight;
        for (std::uint32_t sub = 1; sub < (1U << open.size()); ++sub) {
          std::uint32_t x = 0;
          for (std::size_t i = 0; i < open.size(); ++i)
            if ((sub >> i) & 1U) x |= 1U << open[i];
          std::uint32_t nbr = 0;
          for (const Arc& a : g.arcs())
            if ((x >> a.head) & 1U && !((x >> a.tail) & 1U)) nbr |= 1U << a.tail;
          std::int64_t pay = 0;
          for (int v = 0; v < n; ++v)
            if ((nbr >> v) & 1U) pay += f[v];
          if ((nbr >> *s0) & 1U && pay == std::popcount(x)) tight.push_back(x);
        }
        ++closure_checks;
        for (std::uint32_t a : tight)
          for (std::uint32_t b : tight) {
            tight_pairs += a < b;
            if (std::find(tight.begin(), tight.end(), a & b) == tight.end())
              r.fail("tight sets not closed under intersection " + describe(g));
          }
      }
      std::optional<VertexId> chosen;
      for (VertexId t0 : state.candidate_targets(*s0)) {
        // Brute-force the Hall inequality after the tentative commit.
        std::vector<char> next_target = state.uncovered_mask();
        next_target[t0] = 0;
        std::vector<int> next_budget = f;
        --next_budget[*s0];
        const bool brute = t::naive_hall(g, next_target, next_budget);
        const bool tested = state.commit_test(*s0, t0);
        if (brute != tested) r.fail("commit_test disagrees with brute force " + describe(g));
        if (tested && !chosen) chosen = t0;
      }
      if (!chosen) {
        r.fail("dead end " + describe(g));
        break;
      }
      state.commit(*s0, *chosen);
      if (auto broken = state.check_properties()) r.fail(*broken + " " + describe(g));
    }
    if (!state.done()) continue;

    const ArcSubset b = state.branching();
    std::vector<int> in(n, 0), out(n, 0), root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
    for (ArcId a : b.to_vector()) {
      const Arc arc = g.arc(a);
      ++in[arc.head];
      ++out[arc.tail];
      const int x = find(arc.tail), y = find(arc.head);
      if (x == y) r.fail("B has a cycle " + describe(g));
      root[x] = y;
    }
    for (int v = 0; v < n; ++v) {
      if (in[v] != (is_target[v] ? 1 : 0)) r.fail("in-degree of B wrong " + describe(g));
      if (out[v] > inst.budget[v]) r.fail("out-degree of B over budget " + describe(g));
    }
    if (extract_bounded_branching(inst) != b) r.fail("driver and manual run differ " + describe(g));
  }
  if (instances < 200) r.fail("only " + std::to_string(instances) + " instances generated");
  r.detail << instances << " instances, " << steps << " commits, " << closure_checks
           << " tight-set enumerations, " << tight_pairs << " tight pairs intersected";
}

int longest_path(const Digraph& g, const std::vector<int>& part_of, int part) {
  // Parts are branchings of an acyclic digraph, so relax until stable.
  std::vector<int> depth(g.num_vertices(), 0);
  int best = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < g.num_arcs(); ++a) {
      if (part_of[a] != part) continue;
      const Arc arc = g.arc(a);
      if (depth[arc.head] < depth[arc.tail] + 1) {
        depth[arc.head] = depth[arc.tail] + 1;
        best = std::max(best, depth[arc.head]);
        changed = true;
      }
    }
  }
  return best;
}

// 7. Tree family size, density, and forced long paths.
void tree_suite(Report& r) {
  const Digraph t13 = gen_tree_family({1, 3});
  if (t13.num_vertices() != 15 || t13.num_arcs() != 14) r.fail("tree(1,3) size");
  if (brute_gamma(t13) != Rational(1)) r.fail("tree(1,3) gamma");
  if (t::in_degree_max(t13) != 2) r.fail("tree(1,3) in-degree");
  // Level structure: 1, 2, 4, 8 vertices; older levels have in-degree 2.
  for (int v = 0; v < 15; ++v)
    if (t13.in_degree(v) != (v < 7 ? 2 : 0)) r.fail("tree(1,3) level structure");
  r.detail << "tree(1,3): 15 vertices, 14 arcs, gamma=1, in-degree 2; ";

  struct Case {
    int k, depth;
  };
  for (const Case c : {Case{1, 2}, {1, 3}, {2, 2}}) {
    const Digraph g = gen_tree_family({c.k, c.depth});
    std::int64_t seen = 0;
    const std::int64_t total = enumerate_decompositions(
        g, c.k + 1, std::nullopt, DecompositionKind::Branching, [&](const std::vector<int>& p) {
          ++seen;
          for (int part = 0; part <= c.k; ++part)
            if (longest_path(g, p, part) < c.depth)
              r.fail("part without a path of length " + std::to_string(c.depth));
          return true;
        });
    if (total == 0 || total != seen) r.fail("no decompositions enumerated");
    r.detail << "(" << c.k << "," << c.depth << "): " << total
             << " decompositions, every part has a path of length " << c.depth << "; ";
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Report&)> run;
  };
  const Criterion criteria[] = {
      {"sharpness reproduction", sharpness},
      {"branching decomposition property suite", branching_suite},
      {"pseudo-branching decomposition property suite", pseudo_suite},
      {"Frank equivalence", frank_suite},
      {"density oracle equivalence", density_suite},
      {"extraction invariant suite", extraction_suite},
      {"tree family", tree_suite},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    Report report;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(report);
    } catch (const std::exception& e) {
      report.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !report.pass;
    std::printf("[%s] criterion %d %s (%.2fs): %s\n", report.pass ? "PASS" : "FAIL", index, c.name,
                secs, report.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed;
}
