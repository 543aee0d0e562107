#include "leo/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "leo/benchmarks.hpp"
#include "leo/data_io.hpp"
#include "leo/metrics.hpp"

namespace leo {

namespace {

nlohmann::json snapshot(const ExperimentSpec& spec, const std::string& algorithm,
                        std::uint64_t run_seed) {
  nlohmann::json j{{"algorithm", algorithm},
                   {"master_seed", spec.config.seed},
                   {"run_seed", run_seed}};
  if (algorithm == "leo") {
    j["population_size"] = spec.config.population_size;
    j["iterations"] = spec.config.iterations;
    j["crossover_rate"] = spec.config.crossover_rate;
    j["mutation_rate"] = spec.config.mutation_rate;
    j["alpha"] = {spec.config.alpha_low, spec.config.alpha_high};
    j["sigma"] = {spec.config.sigma_low, spec.config.sigma_high};
    j["epsilon_div"] = spec.config.epsilon_div;
    j["crossover_acceptance"] =
        spec.leo_variant.acceptance == CrossoverAcceptance::keep_better ? "keep_better" : "replace";
    j["population_mutation_stage"] = spec.leo_variant.population_mutation_stage;
  } else if (algorithm == "ga") {
    j["population_size"] = spec.ga.population_size;
    j["iterations"] = spec.ga.iterations;
    j["crossover_rate"] = spec.ga.crossover_rate;
    j["mutation_rate"] = spec.ga.mutation_rate;
    j["tournament_size"] = spec.ga.tournament_size;
    j["mutation_sigma_fraction"] = spec.ga.mutation_sigma_fraction;
  } else if (algorithm == "pso") {
    j["population_size"] = spec.pso.population_size;
    j["iterations"] = spec.pso.iterations;
    j["inertia"] = {spec.pso.inertia_start, spec.pso.inertia_end};
    j["cognitive"] = spec.pso.cognitive;
    j["social"] = spec.pso.social;
    j["velocity_clamp_fraction"] = spec.pso.velocity_clamp_fraction;
  }
  return j;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5e", v);
  return buf;
}

}  // namespace

Problem resolve_problem(const ExperimentSpec& spec, const std::string& function_id) {
  if (function_id == "igg") return apps::igg_problem();
  if (function_id.rfind("cpams", 0) == 0) return apps::cpams_problem(spec.cpams);
  return make_benchmark(function_id);
}

RunResult run_algorithm(const std::string& algorithm, const Problem& problem,
                        const ExperimentSpec& spec, std::uint64_t seed) {
  if (algorithm == "leo") {
    RunConfig config = spec.config;
    config.seed = seed;
    return leo_run(problem, config, spec.leo_variant);
  }
  if (algorithm == "ga") return ga_run(problem, spec.ga, seed);
  if (algorithm == "pso") return pso_run(problem, spec.pso, seed);
  throw std::invalid_argument("unknown algorithm: " + algorithm);
}

ExperimentOutput run_experiment(const ExperimentSpec& spec) {
  spec.config.validate();
  spec.ga.validate();
  spec.pso.validate();
  if (spec.algorithms.empty()) throw std::invalid_argument("no algorithms requested");

  std::vector<std::string> functions = spec.functions;
  if (!spec.app.empty()) {
    if (spec.app != "igg" && spec.app != "cpams")
      throw std::invalid_argument("unknown application: " + spec.app);
    functions = {spec.app == "igg" ? std::string("igg") : std::string("cpams")};
  }
  if (functions.empty()) throw std::invalid_argument("no functions requested");

  struct Task {
    int fn_index;
    int alg_index;
    int repetition;
  };
  std::vector<Task> tasks;
  // Resolve every problem up front so configuration errors (unknown ids,
  // missing data files) surface before any run starts.
  std::vector<Problem> problems;
  for (const auto& fn : functions) problems.push_back(resolve_problem(spec, fn));

  const int reps = spec.config.repetitions;
  for (int f = 0; f < static_cast<int>(functions.size()); ++f)
    for (int a = 0; a < static_cast<int>(spec.algorithms.size()); ++a)
      for (int r = 0; r < reps; ++r) tasks.push_back({f, a, r});

  ExperimentOutput output;
  output.records.resize(tasks.size());
  std::vector<std::string> failures(tasks.size());

  std::string trace_dir;
  if (spec.config.trace_positions && !spec.out_dir.empty())
    trace_dir = (std::filesystem::path(spec.out_dir) / "traces").string();

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      const std::string& algorithm = spec.algorithms[static_cast<std::size_t>(task.alg_index)];
      const std::string& function = functions[static_cast<std::size_t>(task.fn_index)];
      std::uint64_t seed = mix_seed(spec.config.seed, static_cast<std::uint64_t>(task.repetition));
      ResultRecord& record = output.records[i];
      record.algorithm = algorithm;
      record.function = function;
      record.repetition = task.repetition;
      record.seed = seed;
      try {
        const Problem& problem = problems[static_cast<std::size_t>(task.fn_index)];
        RunResult result = run_algorithm(algorithm, problem, spec, seed);
        record.final_best = result.best.value;
        record.best_genes = result.best.genes;
        record.wall_ms = result.wall_ms;
        record.evaluations = result.evaluations;
        record.config_snapshot = snapshot(spec, algorithm, seed);
        if (!trace_dir.empty()) {
          std::string prefix =
              algorithm + "_" + function + "_rep" + std::to_string(task.repetition);
          record.trace_files = metrics::export_traces(result.traces, trace_dir, prefix);
        }
      } catch (const std::exception& e) {
        failures[i] = "(" + algorithm + ", " + function + ", " + std::to_string(seed) +
                      "): " + e.what();
      }
    }
  };

  int jobs = std::max(1, spec.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Record order follows the task layout: (function, algorithm, repetition).
  std::map<std::string, std::map<std::string, stats::SampleSet>> grouped;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (!failures[i].empty()) {
      output.failures.push_back(std::move(failures[i]));
      continue;
    }
    const auto& record = output.records[i];
    auto& samples = grouped[record.function][record.algorithm];
    samples.label = record.algorithm + "/" + record.function;
    samples.values.push_back(record.final_best);
  }
  if (!grouped.empty() && output.failures.empty())
    output.report = stats::comparison_table(grouped, spec.algorithms.front());
  return output;
}

void write_records_jsonl(const std::string& path, const std::vector<ResultRecord>& records) {
  if (auto parent = std::filesystem::path(path).parent_path(); !parent.empty())
    std::filesystem::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& r : records) {
    nlohmann::json j{{"type", "run"},
                     {"algorithm", r.algorithm},
                     {"function", r.function},
                     {"repetition", r.repetition},
                     {"seed", r.seed},
                     {"final_best", r.final_best},
                     {"best_genes", r.best_genes},
                     {"wall_ms", r.wall_ms},
                     {"evaluations", r.evaluations},
                     {"config", r.config_snapshot}};
    if (!r.trace_files.empty()) j["trace_files"] = r.trace_files;
    out << j.dump() << '\n';
  }
}

std::vector<ResultRecord> read_records_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<ResultRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (j.value("type", "") != "run") continue;
    ResultRecord r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.function = j.at("function").get<std::string>();
    r.repetition = j.value("repetition", 0);
    r.seed = j.at("seed").get<std::uint64_t>();
    r.final_best = j.at("final_best").get<double>();
    r.best_genes = j.value("best_genes", std::vector<double>{});
    r.wall_ms = j.value("wall_ms", 0.0);
    r.evaluations = j.value("evaluations", std::uint64_t{0});
    if (j.contains("config")) r.config_snapshot = j["config"];
    if (j.contains("trace_files")) r.trace_files = j["trace_files"].get<std::vector<std::string>>();
    records.push_back(std::move(r));
  }
  return records;
}

void write_summary_jsonl(const std::string& path, const stats::StatsReport& report,
                         int repetitions) {
  if (auto parent = std::filesystem::path(path).parent_path(); !parent.empty())
    std::filesystem::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& row : report.rows) {
    for (const auto& [alg, summary] : row.summaries) {
      nlohmann::json j{{"type", "summary"}, {"algorithm", alg},     {"function", row.function},
                       {"repetitions", repetitions}, {"mean", summary.mean}, {"std", summary.std}};
      out << j.dump() << '\n';
    }
    for (const auto& [alg, wilcoxon] : row.p_versus_subject) {
      nlohmann::json j{{"type", "wilcoxon"},
                       {"function", row.function},
                       {"subject", report.subject},
                       {"versus", alg},
                       {"u", wilcoxon.u_statistic},
                       {"p", wilcoxon.p_value},
                       {"method", wilcoxon.method == stats::WilcoxonMethod::exact
                                      ? "exact"
                                      : "normal_approximation"},
                       {"significant_at_0_05", wilcoxon.significant_at_0_05}};
      out << j.dump() << '\n';
    }
  }
}

std::map<std::string, std::map<std::string, stats::Summary>> load_reference_results() {
  auto path = (std::filesystem::path(data_directory()) / "reference_results.json").string();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing reference data file: " + path);
  nlohmann::json j;
  in >> j;
  std::map<std::string, std::map<std::string, stats::Summary>> out;
  for (const auto& [function, per_alg] : j.at("values").items()) {
    for (const auto& [alg, entry] : per_alg.items()) {
      stats::Summary s;
      s.mean = entry.at("ava").get<double>();
      s.std = entry.at("std").get<double>();
      out[function][alg] = s;
    }
  }
  return out;
}

std::string render_table(
    const stats::StatsReport& report,
    const std::map<std::string, std::map<std::string, stats::Summary>>* reference) {
  std::ostringstream out;
  std::vector<std::string> ref_algorithms;
  if (reference) {
    std::set<std::string> names;
    for (const auto& row : report.rows) {
      auto it = reference->find(row.function);
      if (it == reference->end()) continue;
      for (const auto& [alg, _] : it->second) names.insert(alg);
    }
    ref_algorithms.assign(names.begin(), names.end());
  }

  constexpr int kw = 13;
  out << std::left;
  out.width(10);
  out << "Function";
  for (const auto& alg : report.algorithms) {
    out.width(2 * kw);
    out << (alg + " AVA / STD");
  }
  for (const auto& alg : ref_algorithms) {
    out.width(2 * kw);
    out << (alg + "* AVA / STD");
  }
  for (const auto& alg : report.algorithms)
    if (alg != report.subject) {
      out.width(kw);
      out << ("p vs " + alg);
    }
  out << '\n';

  for (const auto& row : report.rows) {
    out.width(10);
    out << row.function;
    for (const auto& alg : report.algorithms) {
      auto it = row.summaries.find(alg);
      std::string cell = it == row.summaries.end()
                             ? "-"
                             : format_sci(it->second.mean) + "  " + format_sci(it->second.std);
      out.width(2 * kw);
      out << cell;
    }
    for (const auto& alg : ref_algorithms) {
      std::string cell = "-";
      if (reference) {
        auto fit = reference->find(row.function);
        if (fit != reference->end()) {
          auto ait = fit->second.find(alg);
          if (ait != fit->second.end())
            cell = format_sci(ait->second.mean) + "  " + format_sci(ait->second.std);
        }
      }
      out.width(2 * kw);
      out << cell;
    }
    for (const auto& alg : report.algorithms) {
      if (alg == report.subject) continue;
      auto pit = row.p_versus_subject.find(alg);
      out.width(kw);
      out << (pit == row.p_versus_subject.end() ? "-" : format_sci(pit->second.p_value));
    }
    out << '\n';
  }
  if (!ref_algorithms.empty())
    out << "* published reference values shipped with the toolkit, not computed by this run\n";
  return out.str();
}

}  // namespace leo
