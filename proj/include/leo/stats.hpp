#pragma once

#include <map>
#include <string>
#include <vector>

namespace leo::stats {

/// One final-best value per repetition for a given (algorithm, function).
struct SampleSet {
  std::vector<double> values;
  std::string label;
};

struct Summary {
  double mean = 0.0;
  double std = 0.0;  ///< sample standard deviation, (n-1) denominator
  bool degenerate = false;  ///< singleton sample, std reported as 0 by convention
};

/// Throws std::invalid_argument on an empty sample.
Summary summarize(const SampleSet& samples);

enum class WilcoxonMethod { exact, normal_approximation };

struct WilcoxonResult {
  double u_statistic = 0.0;  ///< Mann-Whitney U of the first sample
  double p_value = 1.0;      ///< two-sided
  WilcoxonMethod method = WilcoxonMethod::exact;
  bool significant_at_0_05 = false;
};

/// Two-sided rank-sum test. Exact p by full enumeration of rank assignments
/// when both samples have at most 12 values and the pooled values are
/// tie-free; otherwise the normal approximation with mid-ranks, tie-corrected
/// variance and continuity correction. Each sample needs at least 3 values.
WilcoxonResult wilcoxon_rank_sum(const SampleSet& a, const SampleSet& b);

/// Forces the approximate branch; exposed so the exact path can be
/// cross-validated against it.
WilcoxonResult wilcoxon_rank_sum_approx(const SampleSet& a, const SampleSet& b);

struct FunctionRow {
  std::string function;
  std::map<std::string, Summary> summaries;           // per algorithm
  std::map<std::string, WilcoxonResult> p_versus_subject;  // per non-subject algorithm
};

struct StatsReport {
  std::string subject;                  // the algorithm every pair involves
  std::vector<std::string> algorithms;  // subject first
  std::vector<FunctionRow> rows;
};

/// Per function: each algorithm's (mean, std); per pair involving `subject`:
/// the two-sided Wilcoxon p-value. All sample sets must share one repetition
/// count (std::invalid_argument otherwise).
StatsReport comparison_table(
    const std::map<std::string, std::map<std::string, SampleSet>>& by_function_algorithm,
    const std::string& subject);

}  // namespace leo::stats
