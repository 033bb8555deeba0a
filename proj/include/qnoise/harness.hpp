// Copyright 2026 The qnoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnoise/benchlib.hpp"
#include "qnoise/noise.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

struct DepthRange {
  std::size_t min = 2;
  std::size_t max = 70;
  std::size_t step = 1;
};

struct FineSweep {
  double start = 0;
  double stop = 0;
  double step = 0;
};

struct ExperimentConfig {
  BenchmarkId benchmark = BenchmarkId::Idle;
  NoiseKind noise = NoiseKind::Pauli;
  // Exactly one source of noise points: explicit params, a fine sweep, or
  // tabulated levels (the default).
  std::vector<int> levels = {0, 1, 2, 3};
  std::optional<FineSweep> sweep;
  std::vector<double> params;
  bool rc = false;
  std::size_t trials = 100;
  DepthRange depths;
  Seed seed = 1;
  double synthesis_eps = kDefaultSynthesisEps;
  std::size_t threads = 0;  // 0: hardware concurrency
  std::string out_path;
  std::string format = "csv";
};

/// Parses the JSON config document. Unknown fields and bad values raise
/// ConfigError naming the field.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::string &path);
/// Throws ConfigError.
void validate(const ExperimentConfig &cfg);

/// Noise models of the sweep, in order.
std::vector<NoiseModel> sweep_points(const ExperimentConfig &cfg);

struct ResultRow {
  std::string benchmark;
  std::string noise;
  double param = 0;
  std::size_t depth = 0;
  bool rc = false;
  std::string metric;
  double mean = 0;
  double stderr_ = 0;
  std::size_t trials = 0;
  Seed seed = 0;

  bool operator==(const ResultRow &) const = default;
};

/// One row per (noise point, depth). Throws ConfigError.
std::vector<ResultRow> run_experiment(const ExperimentConfig &cfg);

inline constexpr std::string_view kCsvHeader = "benchmark,noise,param,depth,rc,metric,mean,stderr,trials,seed";

std::string to_csv(const std::vector<ResultRow> &rows);
std::string to_json(const std::vector<ResultRow> &rows);
std::vector<ResultRow> rows_from_csv(std::string_view text);
std::vector<ResultRow> rows_from_json(std::string_view text);
/// Writes rows as csv or json. Throws IoError.
void emit(const std::vector<ResultRow> &rows, const std::string &path, std::string_view format);

}  // namespace qnoise
