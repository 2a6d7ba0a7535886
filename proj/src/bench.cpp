#include "csp/bench.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "csp/baselines.hpp"
#include "csp/instance_io.hpp"
#include "csp/random.hpp"

namespace csp {

namespace {

std::string fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

RunRecord execute(const NamedInstance& named, Method method, std::size_t run, const BenchConfig& cfg) {
  const Instance& inst = named.instance;
  RunRecord rec;
  rec.method = method;
  rec.instance_id = named.id;
  rec.run = run;
  rec.seed = run_seed(cfg.master_seed, run);
  rec.t_max = cfg.solver.time_limit(inst.length());
  rec.lower_bound = pairwise_lower_bound(inst);
  const auto n = static_cast<std::uint64_t>(inst.count());
  try {
    switch (method) {
      case Method::tsa: {
        SolverConfig solver = cfg.solver;
        solver.rng_seed = rec.seed;
        const SolveReport report = solve_tsa(inst, solver);
        rec.distance = report.solution.distance;
        rec.stages = report.timings;
        rec.seconds = report.timings.total();
        rec.t_max = report.t_max;
        break;
      }
      case Method::wfc: {
        Stopwatch clock(cfg.solver.timing);
        rec.distance = wfc_solve(inst, rec.seed).distance;
        clock.charge(n * inst.length());
        rec.seconds = clock.seconds();
        break;
      }
      case Method::oracle: {
        Stopwatch clock(cfg.solver.timing);
        const OracleResult opt = brute_force_optimum(inst);
        clock.charge(n * opt.examined);
        rec.distance = opt.distance;
        rec.seconds = clock.seconds();
        break;
      }
    }
  } catch (const std::exception& e) {
    rec.ok = false;
    rec.distance = -1;
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

Method parse_method(std::string_view text) {
  if (text == "tsa") return Method::tsa;
  if (text == "wfc") return Method::wfc;
  if (text == "oracle") return Method::oracle;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::oracle: return "oracle";
    case Method::tsa: return "tsa";
    case Method::wfc: return "wfc";
  }
  return "tsa";
}

std::vector<Method> parse_methods(std::string_view text) {
  std::vector<Method> methods;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (!item.empty()) {
      const Method m = parse_method(item);
      if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (methods.empty()) throw std::invalid_argument("no methods given");
  return methods;
}

std::vector<NamedInstance> load_instance_dir(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedInstance> out;
  for (const auto& f : files) {
    if (f.filename().string().front() == '.') continue;
    out.push_back({f.stem().string(), read_instance(f)});
  }
  std::sort(out.begin(), out.end(), [](const NamedInstance& a, const NamedInstance& b) { return a.id < b.id; });
  return out;
}

std::uint64_t run_seed(std::uint64_t master_seed, std::size_t run) { return splitmix64(master_seed + run); }

std::vector<RunRecord> run_benchmark(const std::vector<NamedInstance>& instances, const std::vector<Method>& methods,
                                     const BenchConfig& cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("runs per instance must be at least 1");
  cfg.solver.validate();

  struct Job {
    std::size_t instance;
    Method method;
    std::size_t run;
  };
  std::vector<std::size_t> order(instances.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return instances[a].id < instances[b].id; });
  std::vector<Method> sorted_methods = methods;
  std::sort(sorted_methods.begin(), sorted_methods.end(),
            [](Method a, Method b) { return to_string(a) < to_string(b); });

  std::vector<Job> jobs;
  for (std::size_t i : order)
    for (Method m : sorted_methods)
      for (std::size_t k = 0; k < cfg.runs; ++k) jobs.push_back({i, m, k});

  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t j = next++; j < jobs.size(); j = next++)
      records[j] = execute(instances[jobs[j].instance], jobs[j].method, jobs[j].run, cfg);
  };
  const std::size_t workers = std::clamp<std::size_t>(cfg.workers, 1, std::max<std::size_t>(jobs.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return records;
}

Summary summarize(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no run records to summarize");

  struct Acc {
    std::size_t runs = 0;
    int best = 0;
    int worst = 0;
    long long sum = 0;
    double seconds = 0.0;
  };
  std::map<std::pair<std::string, std::string>, Acc> acc;
  for (const auto& r : records) {
    auto& a = acc[{r.instance_id, std::string(to_string(r.method))}];
    if (!r.ok) continue;
    if (a.runs == 0) {
      a.best = a.worst = r.distance;
    } else {
      a.best = std::min(a.best, r.distance);
      a.worst = std::max(a.worst, r.distance);
    }
    a.sum += r.distance;
    a.seconds += r.seconds;
    ++a.runs;
  }

  Summary summary;
  std::map<std::string, std::vector<std::size_t>> by_instance;
  std::vector<std::pair<long long, std::size_t>> sums;  // (sum, runs) per row
  for (const auto& [key, a] : acc) {
    SummaryRow row;
    row.instance_id = key.first;
    row.method = parse_method(key.second);
    row.runs = a.runs;
    row.best = a.best;
    row.worst = a.worst;
    row.average = a.runs ? static_cast<double>(a.sum) / static_cast<double>(a.runs) : 0.0;
    row.average_seconds = a.runs ? a.seconds / static_cast<double>(a.runs) : 0.0;
    by_instance[row.instance_id].push_back(summary.rows.size());
    sums.emplace_back(a.sum, a.runs);
    summary.rows.push_back(row);
  }

  // Best marker: minimal average, compared exactly as sum_a * runs_b vs sum_b * runs_a.
  for (const auto& [id, rows] : by_instance) {
    std::optional<std::size_t> best;
    for (std::size_t r : rows) {
      if (sums[r].second == 0) continue;
      if (!best || sums[r].first * static_cast<long long>(sums[*best].second) <
                       sums[*best].first * static_cast<long long>(sums[r].second))
        best = r;
    }
    if (!best) continue;
    for (std::size_t r : rows)
      if (sums[r].second != 0 && sums[r].first * static_cast<long long>(sums[*best].second) ==
                                     sums[*best].first * static_cast<long long>(sums[r].second))
        summary.rows[r].best_marker = true;
  }

  std::map<std::string, MethodAggregate> agg;
  for (const auto& row : summary.rows) {
    if (row.runs == 0) continue;
    auto& a = agg[std::string(to_string(row.method))];
    a.method = row.method;
    a.mean_of_averages += row.average;
    a.best_count += row.best_marker ? 1 : 0;
    ++a.instances;
  }
  for (auto& [name, a] : agg) {
    a.mean_of_averages /= static_cast<double>(a.instances);
    summary.aggregates.push_back(a);
  }
  return summary;
}

std::string runs_csv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  out << "instance,method,run,seed,distance,lower_bound,seconds,t_max,time_prune,time_beam,time_local,status\n";
  for (const auto& r : records) {
    out << r.instance_id << ',' << to_string(r.method) << ',' << r.run << ',' << r.seed << ',' << r.distance << ','
        << r.lower_bound << ',' << fixed(r.seconds) << ',' << fixed(r.t_max) << ',' << fixed(r.stages.prune) << ','
        << fixed(r.stages.beam) << ',' << fixed(r.stages.local) << ',' << (r.ok ? "ok" : "error") << '\n';
  }
  return out.str();
}

std::string summary_csv(const Summary& summary) {
  std::ostringstream out;
  out << "instance,method,runs,best,worst,average,average_seconds,best_marker\n";
  for (const auto& r : summary.rows) {
    out << r.instance_id << ',' << to_string(r.method) << ',' << r.runs << ',' << r.best << ',' << r.worst << ','
        << fixed(r.average) << ',' << fixed(r.average_seconds) << ',' << (r.best_marker ? "*" : "") << '\n';
  }
  return out.str();
}

std::string summary_json(const Summary& summary) {
  nlohmann::ordered_json doc;
  doc["instances"] = nlohmann::ordered_json::array();
  for (const auto& r : summary.rows) {
    doc["instances"].push_back({{"instance", r.instance_id},
                                {"method", to_string(r.method)},
                                {"runs", r.runs},
                                {"best", r.best},
                                {"worst", r.worst},
                                {"average", r.average},
                                {"average_seconds", r.average_seconds},
                                {"best_marker", r.best_marker}});
  }
  doc["methods"] = nlohmann::ordered_json::array();
  for (const auto& a : summary.aggregates) {
    doc["methods"].push_back({{"method", to_string(a.method)},
                              {"mean_of_averages", a.mean_of_averages},
                              {"best_count", a.best_count},
                              {"instances", a.instances}});
  }
  return doc.dump(2) + "\n";
}

void write_bench_outputs(const std::filesystem::path& dir, const std::vector<RunRecord>& records,
                         const Summary& summary) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    out << text;
  };
  write("runs.csv", runs_csv(records));
  write("summary.csv", summary_csv(summary));
  write("summary.json", summary_json(summary));
}

}  // namespace csp
