// Command-line front end: solve, improve, oracle, wfc, generate, bench.

#include "CLI11.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "csp/baselines.hpp"
#include "csp/bench.hpp"
#include "csp/instance_io.hpp"
#include "csp/local_search.hpp"
#include "csp/tsa.hpp"

namespace {

csp::Instance load(const std::string& path, const std::string& alphabet) {
  std::optional<csp::Alphabet> declared;
  if (!alphabet.empty()) declared = csp::parse_alphabet(alphabet);
  return csp::read_instance(path, declared);
}

void print_solution(const csp::Instance& inst, const csp::SymbolString& symbols, int distance) {
  std::cout << "solution " << inst.alphabet().decode(symbols) << '\n' << "distance " << distance << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closest string solver"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string alphabet;
  std::uint64_t seed = 0;
  std::string timing = "wall";

  // solve
  auto* solve = app.add_subcommand("solve", "Run the three-stage solver");
  double t_max = 0.0;
  std::size_t beta = 300;
  std::size_t beta_trial = 15;
  double ls_budget = 5.0;
  std::string rank = "auto";
  solve->add_option("--instance", instance_path, "Instance file (plain or FASTA)")->required();
  solve->add_option("--alphabet", alphabet, "dna, protein or a symbol list; inferred when omitted");
  solve->add_option("--t-max", t_max, "Total time limit in seconds (default by string length)");
  solve->add_option("--beta", beta, "Initial beam width")->check(CLI::PositiveNumber);
  solve->add_option("--beta-trial", beta_trial, "Beam width of the rank trials")->check(CLI::PositiveNumber);
  solve->add_option("--ls-budget", ls_budget, "Local search time in seconds")->check(CLI::NonNegativeNumber);
  solve->add_option("--rank", rank, "auto, r1 or r2")->check(CLI::IsMember({"auto", "r1", "r2"}));
  solve->add_option("--seed", seed, "Random seed");
  solve->add_option("--timing", timing, "wall or virtual")->check(CLI::IsMember({"wall", "virtual"}));

  // improve
  auto* improve = app.add_subcommand("improve", "Run local search from a given solution");
  std::string start;
  double budget = 5.0;
  improve->add_option("--instance", instance_path)->required();
  improve->add_option("--alphabet", alphabet);
  improve->add_option("--solution", start, "Initial solution string")->required();
  improve->add_option("--budget", budget, "Time budget in seconds")->check(CLI::NonNegativeNumber);
  improve->add_option("--seed", seed);
  improve->add_option("--timing", timing)->check(CLI::IsMember({"wall", "virtual"}));

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration (tiny instances)");
  std::uint64_t cap = csp::kDefaultOracleCap;
  oracle->add_option("--instance", instance_path)->required();
  oracle->add_option("--alphabet", alphabet);
  oracle->add_option("--cap", cap, "Maximum search space size m^L");

  // wfc
  auto* wfc = app.add_subcommand("wfc", "Frequency-table baseline");
  wfc->add_option("--instance", instance_path)->required();
  wfc->add_option("--alphabet", alphabet);
  wfc->add_option("--seed", seed);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a uniform random instance");
  std::size_t n = 10;
  std::size_t len = 100;
  std::string gen_alphabet = "dna";
  std::string out_path;
  std::string format;
  generate->add_option("--n", n, "Number of strings")->check(CLI::PositiveNumber);
  generate->add_option("--len", len, "String length")->check(CLI::PositiveNumber);
  generate->add_option("--alphabet", gen_alphabet, "dna, protein or a symbol list");
  generate->add_option("--seed", seed);
  generate->add_option("--out", out_path, "Output file (stdout when omitted)");
  generate->add_option("--format", format, "plain or fasta (default from the file extension)")
      ->check(CLI::IsMember({"plain", "fasta"}));

  // bench
  auto* bench = app.add_subcommand("bench", "Run repeated experiments over a directory of instances");
  std::string instances_dir;
  std::string methods = "tsa,wfc";
  std::size_t runs = 10;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  std::string out_dir = "bench-out";
  bench->add_option("--instances", instances_dir, "Directory of instance files")->required();
  bench->add_option("--methods", methods, "Comma-separated: tsa, wfc, oracle");
  bench->add_option("--runs", runs, "Runs per instance and method")->check(CLI::PositiveNumber);
  bench->add_option("--master-seed", master_seed);
  bench->add_option("--workers", workers)->check(CLI::PositiveNumber);
  bench->add_option("--out", out_dir, "Output directory");
  bench->add_option("--t-max", t_max, "Override the per-instance time limit");
  bench->add_option("--beta", beta)->check(CLI::PositiveNumber);
  bench->add_option("--beta-trial", beta_trial)->check(CLI::PositiveNumber);
  bench->add_option("--ls-budget", ls_budget)->check(CLI::NonNegativeNumber);
  bench->add_option("--timing", timing)->check(CLI::IsMember({"wall", "virtual"}));

  CLI11_PARSE(app, argc, argv);

  try {
    auto solver_config = [&]() {
      csp::SolverConfig cfg;
      cfg.beta_initial = beta;
      cfg.beta_trial = beta_trial;
      if (t_max > 0.0) cfg.t_max = t_max;
      cfg.ls_budget = ls_budget;
      cfg.rank_mode = csp::parse_rank_mode(rank);
      cfg.rng_seed = seed;
      cfg.timing = csp::parse_timing_mode(timing);
      return cfg;
    };

    if (*solve) {
      const auto inst = load(instance_path, alphabet);
      const auto report = csp::solve_tsa(inst, solver_config());
      std::cout << csp::format_report(report, inst);
    } else if (*improve) {
      const auto inst = load(instance_path, alphabet);
      const auto result = csp::local_search(inst.alphabet().encode(start), inst, budget, seed,
                                            csp::parse_timing_mode(timing));
      print_solution(inst, result.solution.symbols, result.solution.distance);
      std::cout << "initial_distance " << csp::hamming_to_set(inst.alphabet().encode(start), inst) << '\n'
                << "iterations " << result.iterations << '\n'
                << "local_optimum " << (result.local_optimum ? "yes" : "no") << '\n';
    } else if (*oracle) {
      const auto inst = load(instance_path, alphabet);
      const auto opt = csp::brute_force_optimum(inst, cap);
      print_solution(inst, opt.solution, opt.distance);
      std::cout << "examined " << opt.examined << '\n'
                << "lower_bound " << csp::pairwise_lower_bound(inst) << '\n';
    } else if (*wfc) {
      const auto inst = load(instance_path, alphabet);
      const auto sol = csp::wfc_solve(inst, seed);
      print_solution(inst, sol.symbols, sol.distance);
    } else if (*generate) {
      csp::GeneratorSpec spec;
      spec.count = n;
      spec.length = len;
      spec.alphabet = csp::parse_alphabet(gen_alphabet);
      spec.seed = seed;
      const auto inst = csp::generate_uniform(spec);
      if (out_path.empty()) {
        std::cout << (format == "fasta" ? csp::write_fasta(inst) : csp::write_plain(inst));
      } else {
        const auto fmt = format.empty() ? csp::format_for_path(out_path)
                                        : (format == "fasta" ? csp::InstanceFormat::fasta : csp::InstanceFormat::plain);
        csp::write_instance(out_path, inst, fmt);
      }
    } else if (*bench) {
      csp::BenchConfig cfg;
      cfg.solver = solver_config();
      cfg.runs = runs;
      cfg.master_seed = master_seed;
      cfg.workers = workers;
      const auto instances = csp::load_instance_dir(instances_dir);
      if (instances.empty()) throw std::runtime_error("no instance files in " + instances_dir);
      const auto records = csp::run_benchmark(instances, csp::parse_methods(methods), cfg);
      const auto summary = csp::summarize(records);
      csp::write_bench_outputs(out_dir, records, summary);
      std::cout << csp::summary_csv(summary);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
