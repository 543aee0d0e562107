// Command-line driver for the optimization toolkit: single runs, benchmark
// suites, statistical comparisons, the bundled applications, and the
// function catalog.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leo/benchmarks.hpp"
#include "leo/experiment.hpp"

namespace {

struct CliOptions {
  std::vector<std::string> algorithms{"leo"};
  std::vector<std::string> functions;
  std::string app;
  int reps = 30;
  int iters = 500;
  int pop = 100;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string out = "results";
  bool traces = false;
  bool reference = false;
  int cpams_d = 15;
  double cpams_k1 = 0.0;
  double cpams_k2 = 0.1;
};

void add_common(CLI::App* cmd, CliOptions& opt, bool with_functions) {
  cmd->add_option("--alg", opt.algorithms, "algorithms to run (leo, ga, pso)")
      ->check(CLI::IsMember({"leo", "ga", "pso"}));
  if (with_functions) cmd->add_option("--fn", opt.functions, "benchmark ids, e.g. TF1 CEC04");
  cmd->add_option("--reps", opt.reps, "repetitions per (algorithm, function)");
  cmd->add_option("--iters", opt.iters, "iterations per run");
  cmd->add_option("--pop", opt.pop, "population size (even)");
  cmd->add_option("--seed", opt.seed, "master seed; repetition seeds derive from it");
  cmd->add_option("--jobs", opt.jobs, "max concurrent repetitions");
  cmd->add_option("--out", opt.out, "output directory");
  cmd->add_flag("--traces", opt.traces, "export per-iteration position traces");
}

leo::ExperimentSpec to_spec(const CliOptions& opt) {
  leo::ExperimentSpec spec;
  spec.algorithms = opt.algorithms;
  spec.functions = opt.functions;
  spec.app = opt.app;
  if (opt.app == "cpams") spec.cpams = leo::apps::CpamsParams::make(opt.cpams_d, opt.cpams_k1, opt.cpams_k2);
  spec.config.population_size = opt.pop;
  spec.config.iterations = opt.iters;
  spec.config.repetitions = opt.reps;
  spec.config.seed = opt.seed;
  spec.config.trace_positions = opt.traces;
  spec.ga.population_size = opt.pop;
  spec.ga.iterations = opt.iters;
  spec.ga.trace_positions = opt.traces;
  spec.pso.population_size = opt.pop;
  spec.pso.iterations = opt.iters;
  spec.pso.trace_positions = opt.traces;
  spec.out_dir = opt.out;
  spec.reference_data = opt.reference;
  spec.jobs = opt.jobs;
  return spec;
}

int execute(const leo::ExperimentSpec& spec) {
  leo::ExperimentOutput output = leo::run_experiment(spec);

  std::filesystem::create_directories(spec.out_dir);
  auto results_path = (std::filesystem::path(spec.out_dir) / "results.jsonl").string();
  leo::write_records_jsonl(results_path, output.records);

  if (!output.failures.empty()) {
    std::cerr << "failed runs:\n";
    for (const auto& f : output.failures) std::cerr << "  " << f << '\n';
    return 1;
  }

  auto summary_path = (std::filesystem::path(spec.out_dir) / "summary.jsonl").string();
  leo::write_summary_jsonl(summary_path, output.report, spec.config.repetitions);

  std::map<std::string, std::map<std::string, leo::stats::Summary>> reference;
  if (spec.reference_data) reference = leo::load_reference_results();
  std::string table = leo::render_table(output.report, spec.reference_data ? &reference : nullptr);
  auto table_path = (std::filesystem::path(spec.out_dir) / "table.txt").string();
  std::ofstream(table_path) << table;
  std::cout << table;
  std::cout << "records: " << results_path << "\nsummary: " << summary_path << '\n';
  return 0;
}

int run_stats(const std::string& file_a, const std::string& file_b, const std::string& out) {
  auto records_a = leo::read_records_jsonl(file_a);
  auto records_b = leo::read_records_jsonl(file_b);

  auto group = [](const std::vector<leo::ResultRecord>& records) {
    std::map<std::string, leo::stats::SampleSet> by_fn;
    for (const auto& r : records) {
      auto& s = by_fn[r.function];
      s.label = r.algorithm + "/" + r.function;
      s.values.push_back(r.final_best);
    }
    return by_fn;
  };
  auto a = group(records_a);
  auto b = group(records_b);

  nlohmann::json report = nlohmann::json::array();
  bool any_shared = false;
  for (const auto& [function, samples_a] : a) {
    auto it = b.find(function);
    if (it == b.end()) continue;
    any_shared = true;
    if (samples_a.values.size() != it->second.values.size())
      throw std::invalid_argument(function + ": repetition counts differ between files");
    auto w = leo::stats::wilcoxon_rank_sum(samples_a, it->second);
    report.push_back({{"type", "wilcoxon"},
                      {"function", function},
                      {"u", w.u_statistic},
                      {"p", w.p_value},
                      {"method", w.method == leo::stats::WilcoxonMethod::exact
                                     ? "exact"
                                     : "normal_approximation"},
                      {"significant_at_0_05", w.significant_at_0_05}});
    std::printf("%-10s p=%.6g %s\n", function.c_str(), w.p_value,
                w.significant_at_0_05 ? "significant" : "not significant");
  }
  if (!any_shared) std::cerr << "warning: the two result files share no functions\n";

  std::filesystem::create_directories(out);
  auto path = (std::filesystem::path(out) / "wilcoxon.jsonl").string();
  std::ofstream f(path);
  for (const auto& j : report) f << j.dump() << '\n';
  std::cout << "report: " << path << '\n';
  return 0;
}

void print_catalog() {
  std::printf("%-8s %-10s %4s %18s %12s\n", "id", "family", "dim", "range", "f_min");
  for (const auto& s : leo::benchmark_catalog()) {
    const char* family = s.family == leo::Family::unimodal     ? "unimodal"
                         : s.family == leo::Family::multimodal ? "multimodal"
                         : s.family == leo::Family::composite  ? "composite"
                                                               : "cec2019";
    std::printf("%-8s %-10s %4d [%8.5g, %8.5g] %12g\n", s.id.c_str(), family, s.dimension,
                s.lower, s.upper, s.f_min);
  }
  std::printf("applications: igg (12d, maximize), cpams (1d root residual, minimize)\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leo metaheuristic benchmark toolkit"};
  app.require_subcommand(1);
  app.set_config("--config");

  CliOptions opt;

  CLI::App* cmd_run = app.add_subcommand("run", "run algorithms on selected functions");
  add_common(cmd_run, opt, true);

  CLI::App* cmd_suite =
      app.add_subcommand("suite", "run the full cross-product and emit comparison tables");
  add_common(cmd_suite, opt, true);
  cmd_suite->add_flag("--reference-data", opt.reference,
                      "merge published reference values into the table");

  std::string stats_a, stats_b, stats_out = "results";
  CLI::App* cmd_stats =
      app.add_subcommand("stats", "Wilcoxon rank-sum comparison of two result files");
  cmd_stats->add_option("file_a", stats_a)->required();
  cmd_stats->add_option("file_b", stats_b)->required();
  cmd_stats->add_option("--out", stats_out, "output directory");

  CLI::App* cmd_catalog = app.add_subcommand("catalog", "list available functions");

  CLI::App* cmd_app = app.add_subcommand("app", "run a real-world application (igg | cpams)");
  cmd_app->add_option("name", opt.app, "application id")
      ->required()
      ->check(CLI::IsMember({"igg", "cpams"}));
  add_common(cmd_app, opt, false);
  cmd_app->add_option("--d", opt.cpams_d, "cpams node count (15..36)");
  cmd_app->add_option("--k1", opt.cpams_k1, "cpams variable parameter (0..1)");
  cmd_app->add_option("--k2", opt.cpams_k2, "cpams feedback parameter (0.1..0.5)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_catalog->parsed()) {
      print_catalog();
      return 0;
    }
    if (cmd_stats->parsed()) return run_stats(stats_a, stats_b, stats_out);

    if (cmd_app->parsed()) {
      if (cmd_app->count("--pop") == 0)
        opt.pop = opt.app == "igg" ? leo::apps::kIgGAgents : leo::apps::kCpamsAgents;
      if (cmd_app->count("--iters") == 0)
        opt.iters = opt.app == "igg" ? leo::apps::kIgGIterations : leo::apps::kCpamsIterations;
    }
    return execute(to_spec(opt));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
