#include <doctest.h>

#include <filesystem>

#include "leo/algorithm.hpp"
#include "leo/benchmarks.hpp"
#include "leo/metrics.hpp"

using namespace leo;

namespace {

RunConfig small_config(bool traces) {
  RunConfig cfg;
  cfg.population_size = 10;
  cfg.iterations = 25;
  cfg.seed = 7;
  cfg.trace_positions = traces;
  return cfg;
}

}  // namespace

TEST_CASE("every trace holds iterations + 1 records") {
  RunResult result = leo_run(make_classical(2, 10), small_config(true));
  CHECK(result.traces.convergence.size() == 26);
  CHECK(result.traces.average_fitness.size() == 26);
  CHECK(result.traces.trajectory.size() == 26);
  CHECK(result.traces.search_history.size() == 26 * 10);
  CHECK(result.best_curve.size() == 26);
  CHECK(result.mean_curve.size() == 26);
}

TEST_CASE("convergence trace is monotone under minimization") {
  RunResult result = leo_run(make_classical(9, 10), small_config(false));
  const auto& records = result.traces.convergence.scalars;
  for (std::size_t i = 1; i < records.size(); ++i)
    CHECK(records[i].value <= records[i - 1].value);
}

TEST_CASE("average fitness decreases over a run") {
  RunConfig cfg = small_config(false);
  cfg.population_size = 100;
  cfg.iterations = 100;
  RunResult result = leo_run(make_classical(2, 10), cfg);
  const auto& records = result.traces.average_fitness.scalars;
  CHECK(records.front().value > records.back().value);
}

TEST_CASE("enabling traces does not change the outcome") {
  Problem p = make_classical(7, 10);  // noisy, so stream usage must match exactly
  RunResult off = leo_run(p, small_config(false));
  RunResult on = leo_run(p, small_config(true));
  CHECK(off.best.value == on.best.value);
  CHECK(off.best.genes == on.best.genes);
  CHECK(off.best_curve == on.best_curve);
}

TEST_CASE("export and re-import round-trips every record") {
  RunResult result = leo_run(make_classical(1, 10), small_config(true));
  auto dir = std::filesystem::temp_directory_path() / "leo_trace_test";
  std::filesystem::remove_all(dir);
  auto files = metrics::export_traces(result.traces, dir.string(), "t");
  CHECK(files.size() == 4);
  for (const auto& path : files) {
    auto trace = metrics::import_trace(path);
    const metrics::MetricTrace* original = nullptr;
    for (const auto* t : result.traces.active())
      if (metrics::trace_kind_name(t->kind) == metrics::trace_kind_name(trace.kind)) original = t;
    REQUIRE(original != nullptr);
    REQUIRE(trace.size() == original->size());
    if (trace.kind == metrics::TraceKind::search_history) {
      for (std::size_t i = 0; i < trace.history.size(); ++i) {
        CHECK(trace.history[i].iteration == original->history[i].iteration);
        CHECK(trace.history[i].agent == original->history[i].agent);
        CHECK(trace.history[i].x0 == original->history[i].x0);
        CHECK(trace.history[i].x1 == original->history[i].x1);
      }
    } else {
      for (std::size_t i = 0; i < trace.scalars.size(); ++i) {
        CHECK(trace.scalars[i].iteration == original->scalars[i].iteration);
        CHECK(trace.scalars[i].value == original->scalars[i].value);
      }
    }
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("an empty trace set exports zero files") {
  metrics::TraceSet traces;
  auto dir = std::filesystem::temp_directory_path() / "leo_trace_empty";
  auto files = metrics::export_traces(traces, dir.string(), "none");
  CHECK(files.empty());
  std::filesystem::remove_all(dir);
}

TEST_CASE("one-dimensional problems record a flagged zero second coordinate") {
  Problem p;
  p.id = "line";
  p.dimension = 1;
  p.lower = {-1.0};
  p.upper = {1.0};
  p.objective = [](std::span<const double> x, RandomStream*) { return x[0] * x[0]; };
  RunConfig cfg = small_config(true);
  RunResult result = leo_run(p, cfg);
  CHECK(result.traces.search_history.low_dimension);
  for (const auto& r : result.traces.search_history.history) CHECK(r.x1 == 0.0);
}
