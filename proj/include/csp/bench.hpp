#pragma once

// Multi-run experiment driver: every (instance, method, seed) combination,
// then per-instance best/worst/average tables and per-method aggregates.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "csp/core.hpp"
#include "csp/tsa.hpp"

namespace csp {

enum class Method { oracle, tsa, wfc };

Method parse_method(std::string_view text);
std::string_view to_string(Method method);
/// Comma-separated list such as "tsa,wfc".
std::vector<Method> parse_methods(std::string_view text);

struct NamedInstance {
  std::string id;
  Instance instance;
};

/// Instance files of a directory (plain or FASTA), ids are file stems,
/// sorted by id.
std::vector<NamedInstance> load_instance_dir(const std::filesystem::path& dir);

struct BenchConfig {
  SolverConfig solver;  // t_max unset: per-instance default by length
  std::size_t runs = 10;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
};

/// Seed of run k; the same for every method so that adding a method never
/// changes the other methods' runs.
std::uint64_t run_seed(std::uint64_t master_seed, std::size_t run);

struct RunRecord {
  Method method = Method::tsa;
  std::string instance_id;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  int distance = -1;
  double seconds = 0.0;
  double t_max = 0.0;
  StageTimings stages;  // tsa only
  int lower_bound = 0;
  bool ok = true;
  std::string error;
};

/// Records sorted by (instance id, method, run). Failed runs are recorded
/// with ok = false.
std::vector<RunRecord> run_benchmark(const std::vector<NamedInstance>& instances, const std::vector<Method>& methods,
                                     const BenchConfig& cfg);

struct SummaryRow {
  std::string instance_id;
  Method method = Method::tsa;
  std::size_t runs = 0;  // successful runs
  int best = 0;
  int worst = 0;
  double average = 0.0;
  double average_seconds = 0.0;
  bool best_marker = false;
};

struct MethodAggregate {
  Method method = Method::tsa;
  double mean_of_averages = 0.0;
  std::size_t best_count = 0;
  std::size_t instances = 0;
};

struct Summary {
  std::vector<SummaryRow> rows;            // sorted by (instance id, method)
  std::vector<MethodAggregate> aggregates;  // sorted by method
};

Summary summarize(const std::vector<RunRecord>& records);

std::string runs_csv(const std::vector<RunRecord>& records);
std::string summary_csv(const Summary& summary);
std::string summary_json(const Summary& summary);

/// Writes runs.csv, summary.csv and summary.json into `dir`.
void write_bench_outputs(const std::filesystem::path& dir, const std::vector<RunRecord>& records,
                         const Summary& summary);

}  // namespace csp
