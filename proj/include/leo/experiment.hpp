#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "leo/algorithm.hpp"
#include "leo/applications.hpp"
#include "leo/baselines.hpp"
#include "leo/stats.hpp"

namespace leo {

/// What to run: a cross-product of algorithms and functions, or one of the
/// two applications. Repetition seeds derive from config.seed via mix_seed.
struct ExperimentSpec {
  std::vector<std::string> algorithms{"leo"};  // of {"leo","ga","pso"}
  std::vector<std::string> functions;          // benchmark catalog ids
  std::string app;                             // "igg" | "cpams" | empty
  apps::CpamsParams cpams = apps::CpamsParams::make(15, 0.0, 0.1);
  RunConfig config;
  GaConfig ga;
  PsoConfig pso;
  LeoVariant leo_variant;
  std::string out_dir;
  bool reference_data = false;
  int jobs = 1;
};

/// One repetition's outcome, reproducible in isolation from its snapshot.
struct ResultRecord {
  std::string algorithm;
  std::string function;
  int repetition = 0;
  std::uint64_t seed = 0;
  double final_best = 0.0;
  std::vector<double> best_genes;
  double wall_ms = 0.0;
  std::uint64_t evaluations = 0;
  nlohmann::json config_snapshot;
  std::vector<std::string> trace_files;
};

struct ExperimentOutput {
  std::vector<ResultRecord> records;  // ordered by (function, algorithm, repetition)
  stats::StatsReport report;
  std::vector<std::string> failures;  // "(algorithm, function, seed): reason"
};

/// Runs the cross-product (repetitions may execute concurrently up to
/// spec.jobs); output ordering is independent of completion order.
ExperimentOutput run_experiment(const ExperimentSpec& spec);

/// Resolves the Problem an experiment entry refers to (catalog id or app).
Problem resolve_problem(const ExperimentSpec& spec, const std::string& function_id);

/// One run of a named algorithm under the spec's parameters.
RunResult run_algorithm(const std::string& algorithm, const Problem& problem,
                        const ExperimentSpec& spec, std::uint64_t seed);

// --- serialization --------------------------------------------------------

void write_records_jsonl(const std::string& path, const std::vector<ResultRecord>& records);
std::vector<ResultRecord> read_records_jsonl(const std::string& path);

void write_summary_jsonl(const std::string& path, const stats::StatsReport& report,
                         int repetitions);

/// Published comparison values (reference data for algorithms this toolkit
/// does not implement), keyed function -> algorithm -> summary.
std::map<std::string, std::map<std::string, stats::Summary>> load_reference_results();

/// Fixed-width text table, scientific notation with 6 significant digits.
/// Reference columns, when provided, are tagged as published values.
std::string render_table(
    const stats::StatsReport& report,
    const std::map<std::string, std::map<std::string, stats::Summary>>* reference = nullptr);

}  // namespace leo
