#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <variant>

#include "ndt/decompose.hpp"
#include "ndt/density.hpp"
#include "ndt/error.hpp"
#include "ndt/families.hpp"
#include "ndt/io.hpp"
#include "ndt/oracle.hpp"

namespace ndt::cli {

namespace {

using json = nlohmann::json;

// Thrown to leave a subcommand with a specific exit code and document.
struct Finished {
  int code;
  json document;
};

json to_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

json to_json(const DensityWitness& w) {
  return json{{"type", "density"},
              {"mode", to_string(w.mode)},
              {"vertices", w.vertices},
              {"ratio", to_json(w.ratio)}};
}

json to_json(const InDegreeWitness& w) {
  return json{{"type", "in-degree"}, {"vertex", w.vertex}, {"in_degree", w.in_degree}, {"bound", w.bound}};
}

json to_json(const Decomposition& dec, std::optional<int> budget) {
  std::vector<int> one_based(dec.part_of.size());
  for (std::size_t a = 0; a < one_based.size(); ++a) one_based[a] = dec.part_of[a] + 1;
  json j{{"kind", to_string(dec.kind)}, {"parts", dec.parts}, {"assignment", one_based}};
  j["budget"] = budget ? json(*budget) : json(nullptr);
  if (dec.parts > 0) j["last_part_max_out_degree"] = dec.max_out_degree_in_part(dec.parts - 1);
  return j;
}

json to_json(const DensityCertificate& c) {
  return json{{"start", c.start},          {"vertices", c.vertices}, {"heads", c.heads},
              {"tails_only", c.tails_only}, {"arc_count", c.arc_count}, {"ratio", to_json(c.ratio)},
              {"bound", to_json(c.bound)}};
}

DecompositionKind parse_kind(const std::string& text) {
  if (text == "branching") return DecompositionKind::Branching;
  if (text == "pseudo-branching" || text == "pseudo") return DecompositionKind::PseudoBranching;
  throw InputError("unknown kind '" + text + "' (expected branching or pseudo-branching)");
}

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

struct Input {
  Digraph graph;
  std::string digest;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  Input load(const std::string& path) {
    const std::string text = read_source(path, in_);
    return Input{parse_digraph(text), "fnv1a64:" + fnv1a_digest(text)};
  }

  [[noreturn]] void finish(int code, const std::string& status, json payload) {
    throw Finished{code, json{{"command", command_}, {"input_digest", digest_},
                              {"status", status}, {"payload", std::move(payload)}}};
  }

  void set_command(std::string command) { command_ = std::move(command); }
  void set_digest(std::string digest) { digest_ = std::move(digest); }
  std::ostream& out() { return out_; }
  std::istream& in() { return in_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::string command_;
  json digest_ = nullptr;
};

void run_density(Runner& r, const std::string& path, DensityMode mode) {
  Input input = r.load(path);
  r.set_digest(input.digest);
  const DensityResult result = mode == DensityMode::Arboricity ? fractional_arboricity(input.graph)
                                                               : max_average_degree(input.graph);
  r.finish(kOk, "ok", json{{"value", to_json(result.value)}, {"witness", to_json(result.witness)}});
}

template <typename Solve>
void run_decompose(Runner& r, const std::string& path, std::optional<int> budget, Solve&& solve) {
  Input input = r.load(path);
  r.set_digest(input.digest);
  try {
    const Decomposition dec = solve(input.graph);
    r.finish(kOk, "ok", to_json(dec, budget));
  } catch (const HypothesisError& e) {
    json witness = std::visit([](const auto& w) { return to_json(w); }, e.witness());
    r.finish(kHypothesisViolation, "infeasible",
             json{{"message", e.what()}, {"bound", to_json(e.bound())}, {"witness", std::move(witness)}});
  }
}

void run_pseudo(Runner& r, const std::string& path, int k, int budget) {
  Input input = r.load(path);
  r.set_digest(input.digest);
  try {
    const PseudoNdtResult result = pseudo_ndt_decompose(input.graph, k, budget);
    json stats{{"peeled_vertices", result.peeled_vertices},
               {"initial_residue", result.initial_residue},
               {"swaps", result.swaps}};
    if (const auto* dec = std::get_if<Decomposition>(&result.outcome)) {
      json payload = to_json(*dec, budget);
      payload["stats"] = std::move(stats);
      r.finish(kOk, "ok", std::move(payload));
    }
    r.finish(kHypothesisViolation, "certificate",
             json{{"certificate", to_json(std::get<DensityCertificate>(result.outcome))},
                  {"stats", std::move(stats)}});
  } catch (const HypothesisError& e) {
    json witness = std::visit([](const auto& w) { return to_json(w); }, e.witness());
    r.finish(kHypothesisViolation, "infeasible",
             json{{"message", e.what()}, {"bound", to_json(e.bound())}, {"witness", std::move(witness)}});
  }
}

struct AssignmentFile {
  std::vector<int> part_of;  // 0-based
  std::optional<int> parts;
  std::optional<int> budget;
};

AssignmentFile parse_assignment(const std::string& text) {
  AssignmentFile file;
  const auto first = text.find_first_not_of(" \t\r\n");
  std::vector<long long> raw;
  if (first != std::string::npos && text[first] == '{') {
    const json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw InputError("assignment file is not valid JSON");
    const json& payload = doc.contains("payload") ? doc.at("payload") : doc;
    if (!payload.contains("assignment")) throw InputError("JSON assignment file has no 'assignment'");
    raw = payload.at("assignment").get<std::vector<long long>>();
    if (payload.contains("parts")) file.parts = payload.at("parts").get<int>();
    if (payload.contains("budget") && !payload.at("budget").is_null())
      file.budget = payload.at("budget").get<int>();
  } else {
    std::istringstream words(text);
    std::string word;
    while (words >> word) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(word, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != word.size()) throw InputError("bad part index '" + word + "'");
      raw.push_back(value);
    }
  }
  for (long long v : raw) {
    if (v < 1 || v > 1'000'000) throw InputError("part indices must be 1-based positive integers");
    file.part_of.push_back(static_cast<int>(v - 1));
  }
  return file;
}

void run_verify(Runner& r, const std::string& path, const std::string& assignment_path,
                const std::string& kind_text, std::optional<int> budget, std::optional<int> parts) {
  const DecompositionKind kind = parse_kind(kind_text);
  if (assignment_path == "-" && path == "-") throw InputError("FILE and ASSIGNMENT cannot both be stdin");
  Input input = r.load(path);
  r.set_digest(input.digest);
  const std::string assignment_text = read_source(assignment_path, r.in());
  AssignmentFile file = parse_assignment(assignment_text);
  if (!budget) budget = file.budget;
  if (!parts) parts = file.parts;
  if (!parts) {
    int highest = 0;
    for (int p : file.part_of) highest = std::max(highest, p + 1);
    parts = highest;
  }
  Decomposition dec{input.graph, *parts, std::move(file.part_of), kind};
  if (auto violation = verify_decomposition(dec, budget)) {
    r.finish(kHypothesisViolation, "infeasible",
             json{{"violation",
                   json{{"type", to_string(violation->type)},
                        {"part", violation->part >= 0 ? json(violation->part + 1) : json(nullptr)},
                        {"vertex", violation->vertex >= 0 ? json(violation->vertex) : json(nullptr)},
                        {"arcs", violation->arcs},
                        {"message", violation->message}}}});
  }
  r.finish(kOk, "ok", json{{"kind", to_string(kind)}, {"parts", *parts}, {"budget", budget ? json(*budget) : json(nullptr)}});
}

void run_oracle(Runner& r, const std::string& path, int k, std::optional<int> budget,
                const std::string& kind_text, int max_arcs, std::optional<int> time_limit_ms) {
  const DecompositionKind kind = parse_kind(kind_text);
  Input input = r.load(path);
  r.set_digest(input.digest);
  OracleBudget limits;
  limits.max_arcs = max_arcs;
  if (time_limit_ms) limits.time_limit = std::chrono::milliseconds(*time_limit_ms);
  const OracleOutcome outcome = brute_decompose(input.graph, k, budget, kind, limits);
  if (const auto* dec = std::get_if<Decomposition>(&outcome)) {
    json payload = to_json(*dec, budget);
    payload["verdict"] = "decomposition";
    r.finish(kOk, "ok", std::move(payload));
  }
  r.finish(kOk, "infeasible",
           json{{"verdict", "proven-infeasible"},
                {"nodes", std::get<ProvenInfeasible>(outcome).nodes},
                {"parts", budget ? k + 1 : k},
                {"kind", to_string(kind)},
                {"budget", budget ? json(*budget) : json(nullptr)}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Branching and pseudo-branching decompositions of digraphs"};
  app.require_subcommand(1);
  Runner runner(in, out);

  std::string file, assignment, kind;
  int k = 0, d = 0, n = 0, max_arcs = OracleBudget{}.max_arcs, parts = 0, time_limit = 0;
  bool glued = false;

  auto* gamma = app.add_subcommand("gamma", "Exact fractional arboricity with a witness set");
  gamma->add_option("FILE", file, "Digraph file or - for stdin")->required();
  auto* mad = app.add_subcommand("mad", "Exact maximum average degree with a witness set");
  mad->add_option("FILE", file, "Digraph file or - for stdin")->required();

  auto* frank = app.add_subcommand("decompose-frank", "Split into k branchings");
  frank->add_option("FILE", file)->required();
  frank->add_option("-k", k, "Number of branchings")->required();

  auto* ndt_cmd = app.add_subcommand("decompose-ndt", "k+1 branchings, last with out-degree <= d (d <= k)");
  ndt_cmd->add_option("FILE", file)->required();
  ndt_cmd->add_option("-k", k)->required();
  ndt_cmd->add_option("-d", d)->required();

  auto* pseudo = app.add_subcommand("decompose-pseudo", "k+1 pseudo-branchings, last with out-degree <= d");
  pseudo->add_option("FILE", file)->required();
  pseudo->add_option("-k", k)->required();
  pseudo->add_option("-d", d)->required();

  auto* gen = app.add_subcommand("gen", "Generate extremal digraph families");
  gen->require_subcommand(1);
  auto* sharp = gen->add_subcommand("sharp", "Bipartite sharpness digraph (optionally glued)");
  sharp->add_option("-k", k)->required();
  sharp->add_option("-d", d)->required();
  sharp->add_option("-n", n)->required();
  sharp->add_flag("--glued", glued, "Glue two copies at u_0");
  auto* tree = gen->add_subcommand("tree", "Tree family of depth n");
  tree->add_option("-k", k)->required();
  tree->add_option("-n", n)->required();

  auto* verify = app.add_subcommand("verify", "Check an assignment of arcs to parts");
  verify->add_option("FILE", file)->required();
  verify->add_option("ASSIGNMENT", assignment, "Result document or 1-based part indices")->required();
  verify->add_option("--kind", kind)->required();
  auto* verify_budget = verify->add_option("-d", d, "Out-degree budget of the last part");
  auto* verify_parts = verify->add_option("--parts", parts, "Number of parts");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive decomposition search");
  oracle->add_option("FILE", file)->required();
  oracle->add_option("-k", k)->required();
  auto* oracle_budget = oracle->add_option("-d", d);
  oracle->add_option("--kind", kind)->required();
  oracle->add_option("--max-arcs", max_arcs);
  auto* oracle_time = oracle->add_option("--time-limit-ms", time_limit);

  std::vector<const char*> argv{"ndt"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto* chosen = app.get_subcommands().front();
  std::string command = chosen->get_name();
  if (chosen == gen) command += " " + gen->get_subcommands().front()->get_name();
  runner.set_command(command);

  auto opt = [](const CLI::Option* o, int value) -> std::optional<int> {
    return o->count() > 0 ? std::optional<int>(value) : std::nullopt;
  };

  try {
    if (chosen == gamma) run_density(runner, file, DensityMode::Arboricity);
    if (chosen == mad) run_density(runner, file, DensityMode::AverageDegree);
    if (chosen == frank)
      run_decompose(runner, file, std::nullopt, [&](const Digraph& g) { return frank_decompose(g, k); });
    if (chosen == ndt_cmd)
      run_decompose(runner, file, d, [&](const Digraph& g) { return ndt_branching_decompose(g, k, d); });
    if (chosen == pseudo) run_pseudo(runner, file, k, d);
    if (chosen == verify)
      run_verify(runner, file, assignment, kind, opt(verify_budget, d), opt(verify_parts, parts));
    if (chosen == oracle)
      run_oracle(runner, file, k, opt(oracle_budget, d), kind, max_arcs, opt(oracle_time, time_limit));
    if (sharp->parsed()) {
      const SharpnessParams params{k, d, n};
      std::ostringstream comment;
      comment << "sharp k=" << k << " d=" << d << " n=" << n;
      if (glued) {
        const GluedDigraph g = gen_sharp_glued(params);
        comment << " glued at vertex " << g.glued;
        write_digraph(out, g.graph, comment.str());
      } else {
        write_digraph(out, gen_sharp_base(params), comment.str());
      }
      return kOk;
    }
    if (tree->parsed()) {
      write_digraph(out, gen_tree_family(TreeFamilyParams{k, n}),
                    "tree k=" + std::to_string(k) + " depth=" + std::to_string(n));
      return kOk;
    }
    throw std::logic_error("subcommand not dispatched");
  } catch (const Finished& done) {
    out << done.document.dump(2) << '\n';
    return done.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    out << json{{"command", command}, {"status", "error"}, {"payload", {{"reason", "input"}, {"message", e.what()}}}}.dump(2)
        << '\n';
    return kInputError;
  } catch (const UnsupportedCase& e) {
    err << "error: " << e.what() << '\n';
    out << json{{"command", command},
                {"status", "error"},
                {"payload", {{"reason", "unsupported"}, {"message", e.what()}, {"hint", "ndt oracle FILE -k K -d D --kind branching"}}}}
               .dump(2)
        << '\n';
    return kUnsupported;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    out << json{{"command", command}, {"status", "error"}, {"payload", {{"reason", "refusal"}, {"message", e.what()}}}}.dump(2)
        << '\n';
    return kRefused;
  }
}

}  // namespace ndt::cli
