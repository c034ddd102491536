#include "pmint/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "pmint/error.hpp"
#include "pmint/fixtures.hpp"
#include "pmint/instance_io.hpp"

namespace pmint::cli {

namespace {

constexpr std::string_view kBanner =
    "SUBOPTIMALITY-POSSIBLE: greedy-heuristic cuts the closest leaf edges in one step and may "
    "miss the optimum";

std::int64_t parse_int(std::string_view word, const std::string& context) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (word.empty() || ec != std::errc() || ptr != word.data() + word.size())
    throw InputError("bad integer '" + std::string(word) + "' in " + context);
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::string read_input(const CliConfig& config, std::istream& in) {
  std::ostringstream buffer;
  if (config.input) {
    std::ifstream file(*config.input, std::ios::binary);
    if (!file) throw InputError("cannot open '" + *config.input + "'");
    buffer << file.rdbuf();
  } else {
    buffer << in.rdbuf();
  }
  return buffer.str();
}

Instance load(const CliConfig& config, std::istream& in) {
  Instance inst = parse_instance(read_input(config, in));
  if (config.p) {
    if (*config.p < 1 || *config.p > inst.graph.vertex_count())
      throw InputError("--p must lie in 1.." + std::to_string(inst.graph.vertex_count()));
    inst.p = *config.p;
  }
  if (config.budget) {
    if (*config.budget < 0) throw InputError("--budget must be nonnegative");
    inst.budget = *config.budget;
  }
  return inst;
}

void print_ids(std::ostream& out, const std::vector<VertexId>& ids, char prefix) {
  if (ids.empty()) out << " (none)";
  for (auto id : ids) {
    out << ' ';
    if (prefix) out << prefix;
    out << id;
  }
  out << '\n';
}

int do_solve(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  const Instance inst = load(config, in);
  Algorithm algorithm = Algorithm::Oracle;
  if (config.algorithm == "auto") {
    algorithm = route_auto(inst.graph, inst.p, inst.budget);
  } else if (const auto parsed = parse_algorithm(config.algorithm)) {
    algorithm = *parsed;
  } else {
    throw InputError("unknown algorithm '" + config.algorithm + "'");
  }
  if (algorithm == Algorithm::GreedyHeuristic) (config.machine ? err : out) << kBanner << '\n';
  const SolveResult result = solve_with(algorithm, inst.graph, inst.p, inst.budget);
  if (config.machine) {
    out << serialize_result(result);
    return kOk;
  }
  out << "algorithm:  " << algorithm_name(result.algorithm) << '\n';
  out << "value:      " << result.value.to_string() << '\n';
  out << "strategy:  ";
  print_ids(out, result.strategy.edge_ids(), 'e');
  out << "cost:       " << result.strategy.total_cost() << " of " << inst.budget << '\n';
  out << "facilities:";
  print_ids(out, result.locator_response.vertices(), 'v');
  if (!result.note.empty()) out << "note:       " << result.note << '\n';
  return kOk;
}

int do_check(const CliConfig& config, std::istream& in, std::ostream& out) {
  const Instance inst = load(config, in);
  const InterdictionStrategy strategy(inst.graph, parse_edge_list(config.strategy));
  const MedianSolution response = strategy_value(inst.graph, strategy, inst.p, inst.budget);
  if (config.machine) {
    out << "value " << response.value.to_string() << '\n';
    out << "strategy";
    for (auto e : strategy.edge_ids()) out << ' ' << e;
    out << "\ncost " << strategy.total_cost() << '\n';
    out << "facilities";
    for (auto v : response.facilities.vertices()) out << ' ' << v;
    out << '\n';
    return kOk;
  }
  out << "value:      " << response.value.to_string() << '\n';
  out << "strategy:  ";
  print_ids(out, strategy.edge_ids(), 'e');
  out << "cost:       " << strategy.total_cost() << " of " << inst.budget << '\n';
  out << "facilities:";
  print_ids(out, response.facilities.vertices(), 'v');
  return kOk;
}

int do_generate(const CliConfig& config, std::ostream& out) {
  GeneratorSpec spec;
  const auto kind = parse_generator_kind(config.kind);
  if (!kind) throw InputError("unknown generator kind '" + config.kind + "'");
  spec.kind = *kind;
  spec.size = config.size;
  spec.p = config.p;
  spec.budget = config.budget;
  spec.seed = config.seed;
  spec.min_length = config.zero_lengths ? 0 : config.min_length;
  spec.max_length = config.max_length;
  for (auto w : split(config.weights, ',')) spec.weights.push_back(parse_int(w, "--weights"));
  for (auto item : split(config.items, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 2) throw InputError("--items expects weight:profit pairs");
    spec.items.push_back({parse_int(parts[0], "--items"), parse_int(parts[1], "--items")});
  }
  spec.capacity = config.capacity;
  spec.target = config.target;
  out << serialize_instance(generate(spec));
  return kOk;
}

int do_verify(std::ostream& out) {
  int failures = 0;
  const auto outcomes = verify_fixtures();
  for (const auto& o : outcomes) {
    out << (o.pass ? "PASS " : "FAIL ") << o.fixture << ": " << o.claim;
    if (!o.pass) out << " (observed " << o.observed << ')';
    out << '\n';
    failures += o.pass ? 0 : 1;
  }
  out << outcomes.size() - static_cast<std::size_t>(failures) << '/' << outcomes.size()
      << " claims hold\n";
  return failures == 0 ? kOk : kCheckFailed;
}

}  // namespace

Algorithm route_auto(const Graph& graph, int p, Cost budget) {
  if (!path_unit_violation(graph, p, budget)) return Algorithm::PathUnit;
  if (!path_matrix_violation(graph, p, budget)) return Algorithm::PathMatrix;
  if (!tree_leaf_violation(graph, p, budget)) return Algorithm::TreeLeaf;
  return Algorithm::Oracle;
}

SolveResult solve_with(Algorithm algorithm, const Graph& graph, int p, Cost budget) {
  switch (algorithm) {
    case Algorithm::Oracle:
      return oracle(graph, p, budget);
    case Algorithm::PathUnit:
      return solve_path_unit(graph, p, budget);
    case Algorithm::PathMatrix:
      return solve_path_arbitrary(graph, p, budget);
    case Algorithm::TreeLeaf:
      if (auto why = tree_leaf_violation(graph, p, budget))
        throw PreconditionError("tree-leaf: " + *why);
      return solve_tree_unit_B1(graph);
    case Algorithm::GreedyHeuristic:
      return solve_tree_greedy_leaves(graph, p, budget);
  }
  throw InputError("unknown algorithm");
}

std::vector<EdgeId> parse_edge_list(const std::string& text) {
  std::vector<EdgeId> ids;
  for (auto word : split(text, ',')) {
    if (!word.empty() && (word.front() == 'e' || word.front() == 'E')) word.remove_prefix(1);
    const auto id = parse_int(word, "edge list '" + text + "'");
    if (id < 1 || id > std::numeric_limits<EdgeId>::max())
      throw InputError("edge id out of range in '" + text + "'");
    ids.push_back(static_cast<EdgeId>(id));
  }
  return ids;
}

int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (config.verb == "solve") return do_solve(config, in, out, err);
    if (config.verb == "check") return do_check(config, in, out);
    if (config.verb == "generate") return do_generate(config, out);
    if (config.verb == "verify-paper") return do_verify(out);
    throw InputError("unknown verb '" + config.verb + "'");
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailed;
  }
}

int run_args(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CliConfig config;
  CLI::App app{"p-median edge interdiction solver", "pmint"};
  app.require_subcommand(1, 1);

  auto instance_flags = [&](CLI::App* sub) {
    sub->add_option("--input", config.input, "instance file (default: stdin)");
    sub->add_option("--p", config.p, "override the number of facilities");
    sub->add_option("--budget", config.budget, "override the interdiction budget");
    sub->add_flag("--machine", config.machine, "print key-value lines only");
  };

  auto* solve = app.add_subcommand("solve", "optimal interdiction of an instance");
  instance_flags(solve);
  solve->add_option("--algorithm", config.algorithm,
                    "auto, oracle, path-unit, path-matrix, tree-leaf, greedy-heuristic");
  solve->add_option("--seed", config.seed, "accepted for uniformity; solvers are deterministic");

  auto* check = app.add_subcommand("check", "value of a given strategy");
  instance_flags(check);
  check->add_option("--strategy", config.strategy, "comma-separated edge ids, e.g. e3,e5")
      ->required();

  auto* gen = app.add_subcommand("generate", "write a generated instance to stdout");
  gen->add_option("--kind", config.kind,
                  "path-unit, path-random-lengths, tree-unit-random, gadget-from-knapsack, "
                  "gadget-from-partition")
      ->required();
  gen->add_option("--size,-n", config.size, "vertex count (paths and trees)");
  gen->add_option("--seed", config.seed);
  gen->add_option("--p", config.p);
  gen->add_option("--budget", config.budget);
  gen->add_option("--min-length", config.min_length);
  gen->add_option("--max-length", config.max_length);
  gen->add_flag("--zero-lengths", config.zero_lengths, "allow length 0 (sets the minimum to 0)");
  gen->add_option("--weights", config.weights, "partition weights, e.g. 1,1,1,1");
  gen->add_option("--items", config.items, "knapsack items weight:profit, e.g. 1:1,1:2");
  gen->add_option("--capacity", config.capacity);
  gen->add_option("--target", config.target);
  gen->add_flag("--machine", config.machine, "no effect; output is always the instance");

  auto* verify = app.add_subcommand("verify-paper", "check the bundled fixtures");
  verify->add_flag("--machine", config.machine);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInputError;
  }
  for (auto* sub : {solve, check, gen, verify})
    if (sub->parsed()) config.verb = sub->get_name();
  return run(config, in, out, err);
}

}  // namespace pmint::cli
