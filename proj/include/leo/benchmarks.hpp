#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leo/core.hpp"

namespace leo {

enum class Family { unimodal, multimodal, composite, cec2019 };

struct BenchmarkSpec {
  std::string id;
  int dimension = 10;
  double lower = 0.0;
  double upper = 0.0;
  std::optional<std::vector<double>> shift;
  bool rotated = false;
  double f_min = 0.0;
  Family family = Family::unimodal;
  /// Location in x-space where f_min is attained, when known in closed form.
  std::optional<std::vector<double>> optimum;
};

/// All 29 specs: TF1-TF7 (unimodal), TF8-TF13 (multimodal), TF14-TF19
/// (composite), CEC01-CEC10.
const std::vector<BenchmarkSpec>& benchmark_catalog();

/// Lookup by id, e.g. "TF5" or "CEC04". Throws std::invalid_argument.
const BenchmarkSpec& benchmark_spec(const std::string& id);

/// Builds the runnable Problem for a catalog id. Composite and CEC04-CEC10
/// problems load their auxiliary data files on first use; a missing file is
/// a configuration error (std::runtime_error).
Problem make_benchmark(const std::string& id);

/// Classical function (1..13) at an arbitrary dimension; the catalog's shift
/// pattern is re-sized to fit. Used by desk-scale experiments.
Problem make_classical(int tf, int dimension);

/// TF1..TF13 at x, applying z = x - shift first when a shift is given.
/// TF7's additive uniform noise comes from `rng`; pass nullptr to force the
/// noise term to zero.
double eval_classical(int tf, std::span<const double> x, std::span<const double> shift,
                      RandomStream* rng);

/// TF14..TF19 (ids 14..19) at x.
double eval_composite(int tf, std::span<const double> x);

/// CEC01..CEC10 (ids 1..10) at x.
double eval_cec2019(int fn, std::span<const double> x);

}  // namespace leo
