#include "fcd/cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fcd/cli/dispatch.hpp"
#include "fcd/cli/format.hpp"
#include "fcd/generators.hpp"

namespace fcd::cli {

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write '" + path + "'");
  f << text;
}

struct Limits {
  std::uint64_t budget = 0;  // 0: from FCD_BUDGET or default
  double timeout = 0;        // seconds, 0: none
  int threads = 1;
};

std::uint64_t budget_limit(const Limits& lim) {
  if (lim.budget > 0) return lim.budget;
  if (const char* env = std::getenv("FCD_BUDGET"); env && *env) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0)
      throw std::invalid_argument("FCD_BUDGET must be a positive integer");
    return v;
  }
  return kDefaultWorkBudget;
}

WorkBudget make_budget(const Limits& lim) {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (lim.timeout > 0)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(lim.timeout));
  return WorkBudget(budget_limit(lim), deadline);
}

void add_limits(CLI::App* cmd, Limits& lim) {
  cmd->add_option("--budget", lim.budget, "Work budget in solver units (default: FCD_BUDGET or 2e8)");
  cmd->add_option("--timeout", lim.timeout, "Timeout in seconds, checked cooperatively")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--threads", lim.threads, "Worker threads")->check(CLI::PositiveNumber);
}

struct SolveArgs {
  std::string input;
  std::string algo = "auto";
  std::string output;
};

int cmd_solve(const SolveArgs& a, const Limits& lim, std::ostream& out, std::ostream& err) {
  const Algorithm algo = parse_algorithm(a.algo);
  const ParsedInstance parsed = parse_instance(read_text(a.input));
  WorkBudget budget = make_budget(lim);
  const RunOutcome run = run_algorithm(algo, parsed.instance, parsed.td, budget);
  err << "algorithm: " << to_string(run.algorithm) << '\n';
  out << (run.result.feasible ? "YES" : "NO") << '\n';
  if (!a.output.empty()) {
    if (run.result.witness)
      write_text(a.output, write_solution(*run.result.witness), out);
    else if (run.result.feasible)
      err << "note: " << to_string(run.algorithm) << " decides without a witness\n";
  }
  return run.result.feasible ? kExitYes : kExitNo;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path,
               std::ostream& out) {
  const ParsedInstance parsed = parse_instance(read_text(instance_path));
  const Districting d = parse_solution(read_text(solution_path), parsed.instance.graph.n());
  const Verdict v = verify_districting(parsed.instance, d);
  if (v.valid()) {
    out << "valid\n";
    return kExitYes;
  }
  out << "invalid: " << v.describe() << '\n';
  return kExitNo;
}

struct GenerateArgs {
  std::string cls;
  std::string reduction;
  std::string params;
  int n = 0;
  int colors = 2;
  int k = 1;
  std::int64_t ell = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string witness_output;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.cls.empty() == a.reduction.empty())
    throw std::invalid_argument("give exactly one of --class or --reduction");
  if (!a.cls.empty()) {
    const Instance inst = gen_random_instance(parse_generator_class(a.cls), a.n, a.colors, a.k, a.ell, a.seed);
    write_text(a.output, write_instance(inst), out);
    return kExitYes;
  }
  if (a.params.empty()) throw std::invalid_argument("--reduction needs --params");
  const std::string text = read_text(a.params);
  Instance inst;
  std::optional<Districting> witness;
  if (a.reduction == "grid") {
    const GridTilingBlock block = parse_grid_tiling(text);
    const GridTilingReduction red = reduce_grid_tiling(block.instance);
    inst = red.instance;
    if (block.selection) {
      if (!block.instance.is_solution(*block.selection))
        err << "warning: selection is not a tiling solution\n";
      witness = red.witness(*block.selection);
    }
  } else if (a.reduction == "nae") {
    const NaeBlock block = parse_nae(text);
    const NaeReduction red = reduce_nae3sat(block.instance);
    inst = red.instance;
    if (block.assignment) {
      if (!block.instance.is_solution(*block.assignment))
        err << "warning: assignment is not a not-all-equal solution\n";
      witness = red.witness(*block.assignment);
    }
  } else if (a.reduction == "pbcp") {
    const PbcpBlock block = parse_pbcp(text);
    inst = reduce_pbcp(block.n, block.edges, block.v, block.v2);
  } else {
    throw std::invalid_argument("unknown reduction '" + a.reduction + "' (grid, nae, pbcp)");
  }
  write_text(a.output, write_instance(inst), out);
  if (!a.witness_output.empty()) {
    if (!witness) throw std::invalid_argument("no source solution given for --witness-out");
    write_text(a.witness_output, write_solution(*witness), out);
  }
  return kExitYes;
}

int cmd_classify(const std::string& input, std::ostream& out) {
  const ParsedInstance parsed = parse_instance(read_text(input));
  const auto& g = parsed.instance.graph;
  const StructureReport r = classify_graph(g);
  out << "class: " << to_string(r.class_tag) << '\n';
  out << "n: " << g.n() << '\n';
  out << "m: " << r.num_edges << '\n';
  out << "colors: " << g.num_colors() << '\n';
  out << "connected: " << (r.is_connected ? "yes" : "no") << '\n';
  out << "components: " << r.num_components << '\n';
  out << "fen: " << r.fen << '\n';
  out << "degree_ge2: " << r.degree_ge2_count << '\n';
  if (r.is_connected) out << "branches: " << branch_decomposition(g).branches.size() << '\n';
  if (r.spine) {
    out << "spine:";
    for (Vertex v : *r.spine) out << ' ' << v;
    out << '\n';
  }
  if (parsed.td) out << "td_width: " << parsed.td->width() << '\n';
  return kExitYes;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::string cls;
  int n = 8;
  int colors = 2;
  int k = 2;
  std::int64_t ell = 0;
  int count = 10;
  std::uint64_t seed = 1;
  std::vector<std::string> algos{"auto"};
  bool no_timing = false;
  std::string output;
};

struct BenchRow {
  std::string decision;
  double wall_ms = 0;
  std::uint64_t work = 0;
};

int cmd_bench(const BenchArgs& a, const Limits& lim, std::ostream& out) {
  std::vector<Algorithm> algos;
  for (const auto& name : a.algos) algos.push_back(parse_algorithm(name));
  std::vector<std::pair<std::string, ParsedInstance>> instances;
  for (const auto& path : a.inputs) instances.emplace_back(path, parse_instance(read_text(path)));
  if (!a.cls.empty()) {
    const GeneratorClass cls = parse_generator_class(a.cls);
    for (int i = 0; i < a.count; ++i) {
      const std::uint64_t seed = a.seed + static_cast<std::uint64_t>(i);
      ParsedInstance p;
      p.instance = gen_random_instance(cls, a.n, a.colors, a.k, a.ell, seed);
      instances.emplace_back(to_string(cls) + "-" + std::to_string(seed), std::move(p));
    }
  }
  if (instances.empty()) throw std::invalid_argument("bench needs instance files or --class");

  const std::size_t tasks = instances.size() * algos.size();
  std::vector<BenchRow> rows(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t t = next++; t < tasks; t = next++) {
      const auto& [id, parsed] = instances[t / algos.size()];
      BenchRow& row = rows[t];
      WorkBudget budget = make_budget(lim);
      const auto start = std::chrono::steady_clock::now();
      try {
        const RunOutcome run = run_algorithm(algos[t % algos.size()], parsed.instance, parsed.td, budget);
        row.decision = run.result.feasible ? "YES" : "NO";
        row.work = run.result.work;
      } catch (const BudgetExceeded&) {
        row.decision = "UNDECIDED";
        row.work = budget.used();
      } catch (const std::invalid_argument&) {
        row.decision = "NA";
      }
      row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int threads = std::max(1, std::min<int>(lim.threads, static_cast<int>(tasks)));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::ostringstream csv;
  csv << "instance_id,algorithm,decision,wall_ms,work\n";
  for (std::size_t t = 0; t < tasks; ++t) {
    const BenchRow& row = rows[t];
    csv << instances[t / algos.size()].first << ',' << to_string(algos[t % algos.size()]) << ','
        << row.decision << ',';
    if (a.no_timing) csv << "NA";
    else csv << std::fixed << std::setprecision(3) << row.wall_ms;
    csv << ',' << row.work << '\n';
  }
  write_text(a.output, csv.str(), out);
  return kExitYes;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fair connected districting solvers", "fcd"};
  app.require_subcommand(1);
  Limits lim;

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide an instance");
  solve->add_option("instance", solve_args.input, "Instance file ('-' for stdin)")->required();
  solve->add_option("--algo,-a", solve_args.algo,
                    "auto, path, cycle, star, caterpillar, mln, treewidth, fen-k, vc, vc-colors, deg2, brute");
  solve->add_option("--out,-o", solve_args.output, "Write the witness districting here");
  add_limits(solve, lim);

  std::string verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "Check a districting against an instance");
  verify->add_option("instance", verify_instance, "Instance file")->required();
  verify->add_option("solution", verify_solution, "Solution file")->required();

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a random or reduction instance");
  generate->add_option("--class", gen.cls,
                       "path, cycle, star, caterpillar, tree, unicyclic, bounded_vc(B), general(P)");
  generate->add_option("--reduction", gen.reduction, "grid, nae or pbcp");
  generate->add_option("--params", gen.params, "Reduction parameter file");
  generate->add_option("--n", gen.n, "Vertex count");
  generate->add_option("--colors", gen.colors, "Number of colors");
  generate->add_option("--k", gen.k, "Number of districts");
  generate->add_option("--ell", gen.ell, "Fairness bound");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--out,-o", gen.output, "Output instance file");
  generate->add_option("--witness-out", gen.witness_output, "Output witness file (reductions)");

  std::string classify_input;
  auto* classify = app.add_subcommand("classify", "Report graph structure");
  classify->add_option("instance", classify_input, "Instance file")->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Run algorithms over instances and emit CSV");
  bench->add_option("instances", bench_args.inputs, "Instance files");
  bench->add_option("--class", bench_args.cls, "Generate instances of this class");
  bench->add_option("--n", bench_args.n, "Vertex count of generated instances");
  bench->add_option("--colors", bench_args.colors, "Number of colors");
  bench->add_option("--k", bench_args.k, "Number of districts");
  bench->add_option("--ell", bench_args.ell, "Fairness bound");
  bench->add_option("--count", bench_args.count, "Generated instances")->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", bench_args.seed, "Seed of the first generated instance");
  bench->add_option("--algos", bench_args.algos, "Algorithms to run")->delimiter(',');
  bench->add_flag("--no-timing", bench_args.no_timing, "Write NA instead of wall times");
  bench->add_option("--out,-o", bench_args.output, "CSV output file");
  add_limits(bench, lim);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitYes;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args, lim, out, err);
    if (verify->parsed()) return cmd_verify(verify_instance, verify_solution, out);
    if (generate->parsed()) return cmd_generate(gen, out, err);
    if (classify->parsed()) return cmd_classify(classify_input, out);
    if (bench->parsed()) return cmd_bench(bench_args, lim, out);
  } catch (const BudgetExceeded& e) {
    err << "undecided: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"fcd"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fcd::cli
