#include "leo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace leo::stats {

namespace {

/// Mid-ranks of the pooled samples; returns (rank-sum of a, tie groups).
std::pair<double, std::vector<int>> rank_sum_of_first(const std::vector<double>& a,
                                                      const std::vector<double>& b) {
  struct Entry {
    double value;
    bool from_a;
  };
  std::vector<Entry> pooled;
  pooled.reserve(a.size() + b.size());
  for (double v : a) pooled.push_back({v, true});
  for (double v : b) pooled.push_back({v, false});
  std::stable_sort(pooled.begin(), pooled.end(),
                   [](const Entry& x, const Entry& y) { return x.value < y.value; });

  double w_a = 0.0;
  std::vector<int> tie_groups;
  std::size_t i = 0;
  while (i < pooled.size()) {
    std::size_t j = i;
    while (j < pooled.size() && pooled[j].value == pooled[i].value) ++j;
    double mid_rank = 0.5 * static_cast<double>(i + 1 + j);  // average of ranks i+1..j
    for (std::size_t k = i; k < j; ++k)
      if (pooled[k].from_a) w_a += mid_rank;
    tie_groups.push_back(static_cast<int>(j - i));
    i = j;
  }
  return {w_a, tie_groups};
}

/// Number of na-subsets of ranks {1..n} per rank-sum value, as doubles.
/// Index: counts[s] for s in [0, n*(n+1)/2].
std::vector<double> rank_sum_distribution(int n, int na) {
  int max_sum = n * (n + 1) / 2;
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(na + 1),
                                      std::vector<double>(static_cast<std::size_t>(max_sum + 1), 0.0));
  dp[0][0] = 1.0;
  for (int rank = 1; rank <= n; ++rank) {
    for (int k = std::min(rank, na); k >= 1; --k) {
      for (int s = max_sum; s >= rank; --s) {
        dp[k][s] += dp[k - 1][s - rank];
      }
    }
  }
  return dp[static_cast<std::size_t>(na)];
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

WilcoxonResult approx_result(const SampleSet& a, const SampleSet& b) {
  const double na = static_cast<double>(a.values.size());
  const double nb = static_cast<double>(b.values.size());
  const double n = na + nb;
  auto [w_a, tie_groups] = rank_sum_of_first(a.values, b.values);
  double u = w_a - na * (na + 1.0) / 2.0;

  double tie_term = 0.0;
  for (int t : tie_groups) tie_term += static_cast<double>(t) * t * t - t;
  double mu = na * nb / 2.0;
  double var = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));

  WilcoxonResult result;
  result.u_statistic = u;
  result.method = WilcoxonMethod::normal_approximation;
  if (var <= 0.0) {
    result.p_value = 1.0;  // complete tie degeneracy
  } else {
    double diff = u - mu;
    double corrected = std::abs(diff) - 0.5;  // continuity correction toward the mean
    if (corrected < 0.0) corrected = 0.0;
    double z = corrected / std::sqrt(var);
    result.p_value = std::min(1.0, 2.0 * normal_sf(z));
  }
  result.significant_at_0_05 = result.p_value < 0.05;
  return result;
}

}  // namespace

Summary summarize(const SampleSet& samples) {
  if (samples.values.empty()) throw std::invalid_argument("summarize: empty sample set");
  for (double v : samples.values)
    if (!std::isfinite(v)) throw std::invalid_argument("summarize: non-finite sample");
  Summary s;
  double sum = 0.0;
  for (double v : samples.values) sum += v;
  s.mean = sum / static_cast<double>(samples.values.size());
  if (samples.values.size() == 1) {
    s.std = 0.0;
    s.degenerate = true;
    return s;
  }
  double sq = 0.0;
  for (double v : samples.values) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(samples.values.size() - 1));
  return s;
}

WilcoxonResult wilcoxon_rank_sum_approx(const SampleSet& a, const SampleSet& b) {
  if (a.values.size() < 3 || b.values.size() < 3)
    throw std::invalid_argument("wilcoxon_rank_sum: each sample needs at least 3 values");
  return approx_result(a, b);
}

WilcoxonResult wilcoxon_rank_sum(const SampleSet& a, const SampleSet& b) {
  if (a.values.size() < 3 || b.values.size() < 3)
    throw std::invalid_argument("wilcoxon_rank_sum: each sample needs at least 3 values");

  const int na = static_cast<int>(a.values.size());
  const int nb = static_cast<int>(b.values.size());
  bool tie_free = [&] {
    std::set<double> seen;
    for (double v : a.values)
      if (!seen.insert(v).second) return false;
    for (double v : b.values)
      if (!seen.insert(v).second) return false;
    return true;
  }();

  if (na > 12 || nb > 12 || !tie_free) return approx_result(a, b);

  auto [w_a, tie_groups] = rank_sum_of_first(a.values, b.values);
  (void)tie_groups;
  const int n = na + nb;
  std::vector<double> counts = rank_sum_distribution(n, na);
  double total = 0.0;
  for (double c : counts) total += c;

  int w = static_cast<int>(std::llround(w_a));  // integral: tie-free integer ranks
  double below = 0.0, above = 0.0;
  for (int s = 0; s < static_cast<int>(counts.size()); ++s) {
    if (s <= w) below += counts[s];
    if (s >= w) above += counts[s];
  }
  WilcoxonResult result;
  result.u_statistic = w_a - na * (na + 1.0) / 2.0;
  result.method = WilcoxonMethod::exact;
  result.p_value = std::min(1.0, 2.0 * std::min(below, above) / total);
  result.significant_at_0_05 = result.p_value < 0.05;
  return result;
}

StatsReport comparison_table(
    const std::map<std::string, std::map<std::string, SampleSet>>& by_function_algorithm,
    const std::string& subject) {
  StatsReport report;
  report.subject = subject;

  std::set<std::string> algorithms;
  std::size_t repetitions = 0;
  bool first = true;
  for (const auto& [function, per_alg] : by_function_algorithm) {
    for (const auto& [alg, samples] : per_alg) {
      algorithms.insert(alg);
      if (first) {
        repetitions = samples.values.size();
        first = false;
      } else if (samples.values.size() != repetitions) {
        throw std::invalid_argument("comparison_table: mismatched repetition counts");
      }
    }
  }
  if (algorithms.count(subject)) report.algorithms.push_back(subject);
  for (const auto& alg : algorithms)
    if (alg != subject) report.algorithms.push_back(alg);

  for (const auto& [function, per_alg] : by_function_algorithm) {
    FunctionRow row;
    row.function = function;
    for (const auto& [alg, samples] : per_alg) row.summaries[alg] = summarize(samples);
    auto subject_it = per_alg.find(subject);
    if (subject_it != per_alg.end() && subject_it->second.values.size() >= 3) {
      for (const auto& [alg, samples] : per_alg) {
        if (alg == subject) continue;
        row.p_versus_subject[alg] = wilcoxon_rank_sum(subject_it->second, samples);
      }
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace leo::stats
