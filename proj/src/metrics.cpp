#include "leo/metrics.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace leo::metrics {

namespace {

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

std::string trace_kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::search_history: return "search_history";
    case TraceKind::trajectory: return "trajectory";
    case TraceKind::average_fitness: return "average_fitness";
    case TraceKind::convergence: return "convergence";
  }
  return "unknown";
}

void TraceSet::record(int iteration, const std::vector<Candidate>& population, double mean_value,
                      double best_so_far) {
  average_fitness.scalars.push_back({iteration, mean_value});
  convergence.scalars.push_back({iteration, best_so_far});
  if (!positions_enabled || population.empty()) return;
  bool low_dim = population.front().genes.size() < 2;
  search_history.low_dimension = search_history.low_dimension || low_dim;
  for (std::size_t a = 0; a < population.size(); ++a) {
    const auto& genes = population[a].genes;
    double x0 = genes.empty() ? 0.0 : genes[0];
    double x1 = low_dim ? 0.0 : genes[1];
    search_history.history.push_back({iteration, static_cast<int>(a), x0, x1});
  }
  const auto& first = population.front().genes;
  trajectory.scalars.push_back({iteration, first.empty() ? 0.0 : first[0]});
}

std::vector<const MetricTrace*> TraceSet::active() const {
  std::vector<const MetricTrace*> out;
  if (positions_enabled) {
    out.push_back(&search_history);
    out.push_back(&trajectory);
  }
  out.push_back(&average_fitness);
  out.push_back(&convergence);
  return out;
}

std::vector<std::string> export_traces(const TraceSet& traces, const std::string& directory,
                                       const std::string& prefix) {
  std::vector<std::string> paths;
  std::filesystem::create_directories(directory);
  for (const MetricTrace* trace : traces.active()) {
    if (trace->size() == 0) continue;
    auto path = (std::filesystem::path(directory) /
                 (prefix + "_" + trace_kind_name(trace->kind) + ".csv"))
                    .string();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    if (trace->kind == TraceKind::search_history) {
      out << "iteration,agent,x0,x1\n";
      for (const auto& r : trace->history)
        out << r.iteration << ',' << r.agent << ',' << format_double(r.x0) << ','
            << format_double(r.x1) << '\n';
    } else {
      out << "iteration,value\n";
      for (const auto& r : trace->scalars)
        out << r.iteration << ',' << format_double(r.value) << '\n';
    }
    paths.push_back(path);
  }
  return paths;
}

MetricTrace import_trace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read trace file: " + path);
  std::string header;
  std::getline(in, header);
  MetricTrace trace;
  bool positional = header == "iteration,agent,x0,x1";
  if (!positional && header != "iteration,value")
    throw std::runtime_error("unrecognized trace header in " + path);

  auto name = std::filesystem::path(path).stem().string();
  if (name.ends_with("search_history")) trace.kind = TraceKind::search_history;
  else if (name.ends_with("trajectory")) trace.kind = TraceKind::trajectory;
  else if (name.ends_with("average_fitness")) trace.kind = TraceKind::average_fitness;
  else trace.kind = TraceKind::convergence;

  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    if (positional) {
      HistoryRecord r;
      std::getline(ss, field, ','); r.iteration = std::stoi(field);
      std::getline(ss, field, ','); r.agent = std::stoi(field);
      std::getline(ss, field, ','); r.x0 = std::stod(field);
      std::getline(ss, field, ','); r.x1 = std::stod(field);
      trace.history.push_back(r);
    } else {
      ScalarRecord r;
      std::getline(ss, field, ','); r.iteration = std::stoi(field);
      std::getline(ss, field, ','); r.value = std::stod(field);
      trace.scalars.push_back(r);
    }
  }
  return trace;
}

}  // namespace leo::metrics
