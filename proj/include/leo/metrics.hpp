#pragma once

#include <string>
#include <vector>

#include "leo/core.hpp"

namespace leo::metrics {

enum class TraceKind { search_history, trajectory, average_fitness, convergence };

std::string trace_kind_name(TraceKind kind);

struct HistoryRecord {
  int iteration = 0;
  int agent = 0;
  double x0 = 0.0;
  double x1 = 0.0;
};

struct ScalarRecord {
  int iteration = 0;
  double value = 0.0;
};

/// One measurement trace. Search history carries positional records; the
/// other three kinds carry scalar records. Record count is iterations + 1
/// (the initial state is sampled too).
struct MetricTrace {
  TraceKind kind = TraceKind::convergence;
  std::vector<HistoryRecord> history;
  std::vector<ScalarRecord> scalars;
  /// Set when positions were requested on a problem with dimension < 2;
  /// x1 is then recorded as 0.
  bool low_dimension = false;

  std::size_t size() const {
    return kind == TraceKind::search_history ? history.size() : scalars.size();
  }
};

/// The four traces of one run. Convergence and average fitness are always
/// recorded; positional traces only when enabled. Recording draws nothing
/// from any random stream, so enabling traces cannot change a run's outcome.
struct TraceSet {
  bool positions_enabled = false;
  MetricTrace search_history{TraceKind::search_history};
  MetricTrace trajectory{TraceKind::trajectory};
  MetricTrace average_fitness{TraceKind::average_fitness};
  MetricTrace convergence{TraceKind::convergence};

  /// Appends one iteration. Agent 0 is the population's first slot;
  /// trajectory records its first gene.
  void record(int iteration, const std::vector<Candidate>& population, double mean_value,
              double best_so_far);

  std::vector<const MetricTrace*> active() const;
};

/// Writes one CSV file per active trace into `directory`, named
/// <prefix>_<kind>.csv. Returns the created paths. Values are printed with
/// full round-trip precision.
std::vector<std::string> export_traces(const TraceSet& traces, const std::string& directory,
                                       const std::string& prefix);

/// Re-reads a single exported trace file.
MetricTrace import_trace(const std::string& path);

}  // namespace leo::metrics
