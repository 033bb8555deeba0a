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


#include "qnoise/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qnoise/errors.hpp"
#include "qnoise/metrics.hpp"
#include "qnoise/simulate.hpp"

namespace qnoise {

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string &field, const std::string &msg) {
  throw ConfigError(field + ": " + msg);
}

template <typename T>
T get_as(const json &j, const std::string &field) {
  try {
    return j.get<T>();
  } catch (const json::exception &) {
    config_error(field, "wrong type (got " + std::string(j.type_name()) + ")");
  }
}

std::size_t get_count(const json &j, const std::string &field) {
  if (!j.is_number_integer() || j.get<long long>() < 0) config_error(field, "expected a non-negative integer");
  return j.get<std::size_t>();
}

void reject_unknown(const json &obj, std::initializer_list<std::string_view> known, const std::string &prefix) {
  for (const auto &[key, _] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) config_error(prefix + key, "unknown field");
  }
}

bool parse_rc(const json &j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "on") return true;
    if (s == "off") return false;
  }
  config_error("rc", "expected on, off or a boolean");
}

std::string fmt10(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double round10(double v) { return std::strtod(fmt10(v).c_str(), nullptr); }

bool deterministic(const ExperimentConfig &cfg) {
  const auto id = cfg.benchmark;
  return (id == BenchmarkId::Qaoa || id == BenchmarkId::QaoaCT) && !cfg.rc;
}

std::vector<std::size_t> depth_points(const ExperimentConfig &cfg) {
  if (benchmark_spec(cfg.benchmark).max_depth == 0) return {0};
  std::vector<std::size_t> d;
  for (std::size_t x = cfg.depths.min; x <= cfg.depths.max; x += cfg.depths.step) d.push_back(x);
  return d;
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(doc,
                 {"benchmark", "noise", "levels", "sweep", "params", "rc", "trials", "depths", "seed",
                  "synthesis_eps", "threads", "output"},
                 "");

  ExperimentConfig cfg;
  if (doc.contains("benchmark")) {
    const auto name = get_as<std::string>(doc["benchmark"], "benchmark");
    const auto id = parse_benchmark(name);
    if (!id) config_error("benchmark", "unknown benchmark '" + name + "'");
    cfg.benchmark = *id;
  }
  if (doc.contains("noise")) {
    const auto name = get_as<std::string>(doc["noise"], "noise");
    const auto kind = parse_noise_kind(name);
    if (!kind) config_error("noise", "unknown noise kind '" + name + "'");
    cfg.noise = *kind;
  }
  if (doc.contains("levels")) cfg.levels = get_as<std::vector<int>>(doc["levels"], "levels");
  if (doc.contains("sweep")) {
    const json &s = doc["sweep"];
    if (!s.is_object()) config_error("sweep", "expected an object");
    reject_unknown(s, {"start", "stop", "step"}, "sweep.");
    for (const char *k : {"start", "stop", "step"})
      if (!s.contains(k)) config_error(std::string("sweep.") + k, "missing");
    cfg.sweep = FineSweep{get_as<double>(s["start"], "sweep.start"), get_as<double>(s["stop"], "sweep.stop"),
                          get_as<double>(s["step"], "sweep.step")};
  }
  if (doc.contains("params")) cfg.params = get_as<std::vector<double>>(doc["params"], "params");
  if (doc.contains("rc")) cfg.rc = parse_rc(doc["rc"]);
  if (doc.contains("trials")) cfg.trials = get_count(doc["trials"], "trials");
  if (doc.contains("depths")) {
    const json &d = doc["depths"];
    if (!d.is_object()) config_error("depths", "expected an object");
    reject_unknown(d, {"min", "max", "step"}, "depths.");
    if (d.contains("min")) cfg.depths.min = get_count(d["min"], "depths.min");
    if (d.contains("max")) cfg.depths.max = get_count(d["max"], "depths.max");
    if (d.contains("step")) cfg.depths.step = get_count(d["step"], "depths.step");
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) config_error("seed", "expected a non-negative integer");
    cfg.seed = doc["seed"].get<Seed>();
  }
  if (doc.contains("synthesis_eps")) cfg.synthesis_eps = get_as<double>(doc["synthesis_eps"], "synthesis_eps");
  if (doc.contains("threads")) cfg.threads = get_count(doc["threads"], "threads");
  if (doc.contains("output")) {
    const json &o = doc["output"];
    if (!o.is_object()) config_error("output", "expected an object");
    reject_unknown(o, {"path", "format"}, "output.");
    if (o.contains("path")) cfg.out_path = get_as<std::string>(o["path"], "output.path");
    if (o.contains("format")) cfg.format = get_as<std::string>(o["format"], "output.format");
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void validate(const ExperimentConfig &cfg) {
  const BenchmarkSpec &spec = benchmark_spec(cfg.benchmark);
  if (cfg.trials < 1) config_error("trials", "must be >= 1");
  if (spec.max_depth > 0) {
    if (cfg.depths.step < 1) config_error("depths.step", "must be >= 1");
    if (cfg.depths.min < spec.min_depth || cfg.depths.max > spec.max_depth) {
      config_error("depths", "range must lie within " + std::to_string(spec.min_depth) + ".." +
                                 std::to_string(spec.max_depth) + " for " + std::string(spec.name));
    }
    if (cfg.depths.min > cfg.depths.max) config_error("depths.min", "exceeds depths.max");
  }
  if (cfg.sweep) {
    if (!(cfg.sweep->step > 0)) config_error("sweep.step", "must be > 0");
    if (!(cfg.sweep->stop >= cfg.sweep->start)) config_error("sweep.stop", "must be >= sweep.start");
  }
  if (cfg.sweep && !cfg.params.empty()) config_error("params", "cannot be combined with sweep");
  for (int level : cfg.levels)
    if (level < 0 || level > 3) config_error("levels", "level " + std::to_string(level) + " not in 0..3");
  if (cfg.rc && spec.gate_set == GateSet::ParamRotations) {
    config_error("rc", std::string(spec.name) + " uses parameterized rotations and cannot be randomly compiled");
  }
  if (!(cfg.synthesis_eps >= 1e-4)) config_error("synthesis_eps", "must be >= 1e-4");
  if (cfg.format != "csv" && cfg.format != "json") config_error("format", "expected csv or json");
  try {
    sweep_points(cfg);
  } catch (const InvalidParams &e) {
    config_error(cfg.sweep ? "sweep" : "params", e.what());
  }
}

std::vector<NoiseModel> sweep_points(const ExperimentConfig &cfg) {
  std::vector<NoiseModel> out;
  if (!cfg.params.empty()) {
    for (double p : cfg.params) out.push_back(noise_from_param(cfg.noise, p));
  } else if (cfg.sweep) {
    const auto count = static_cast<std::size_t>(std::floor((cfg.sweep->stop - cfg.sweep->start) / cfg.sweep->step + 1e-9));
    for (std::size_t k = 0; k <= count; ++k) {
      out.push_back(noise_from_param(cfg.noise, cfg.sweep->start + static_cast<double>(k) * cfg.sweep->step));
    }
  } else {
    for (int level : cfg.levels) out.push_back(noise_level_table(cfg.noise, level));
  }
  return out;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig &cfg) {
  validate(cfg);
  const BenchmarkSpec &spec = benchmark_spec(cfg.benchmark);
  const std::vector<NoiseModel> points = sweep_points(cfg);
  const std::vector<std::size_t> depths = depth_points(cfg);
  const std::size_t trials = deterministic(cfg) ? 1 : cfg.trials;
  const std::uint64_t bench_key = hash_name(spec.name);
  const bool random_circuits = cfg.benchmark == BenchmarkId::Random;
  const MaxCutGraph graph = hypercube_graph();

  // Circuits that do not depend on the trial are built once per depth.
  std::map<std::size_t, Circuit> fixed;
  if (!random_circuits) {
    for (std::size_t d : depths) fixed.emplace(d, build_benchmark(cfg.benchmark, d, 0, cfg.synthesis_eps));
  }

  struct Task {
    std::size_t point, depth_index, trial;
  };
  std::vector<Task> tasks;
  for (std::size_t p = 0; p < points.size(); ++p)
    for (std::size_t di = 0; di < depths.size(); ++di)
      for (std::size_t t = 0; t < trials; ++t) tasks.push_back({p, di, t});

  std::vector<double> values(tasks.size());
  auto run_task = [&](const Task &task) {
    const std::size_t depth = depths[task.depth_index];
    // Inputs and random circuits are shared across noise points; the RC
    // stream is keyed by the noise point as well.
    const Seed circuit_seed = derive_seed(cfg.seed, {bench_key, 1, depth, task.trial});
    const Seed input_seed = derive_seed(cfg.seed, {bench_key, 2, task.trial});
    const Seed rc_seed = derive_seed(cfg.seed, {bench_key, 3, task.point, depth, task.trial});
    const Circuit circ = random_circuits ? build_benchmark(cfg.benchmark, depth, circuit_seed, cfg.synthesis_eps)
                                         : fixed.at(depth);
    const NoiseModel &noise = points[task.point];
    if (spec.metric == Metric::ExpectationValue) {
      const DensityMatrix rho = simulate(circ, DensityMatrix::zero_state(circ.n_qubits()), noise, cfg.rc, rc_seed);
      return maxcut_expectation(measurement_distribution(rho), graph);
    }
    const Ket psi = random_product_state(circ.n_qubits(), input_seed);
    const Ket ideal = apply_circuit(psi, circ);
    const DensityMatrix rho = simulate(circ, ket_to_density(psi), noise, cfg.rc, rc_seed);
    return process_fidelity(ideal, rho);
  };

  std::size_t n_threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min(n_threads, tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        values[i] = run_task(tasks[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
    }
  };
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < n_threads; ++k) pool.emplace_back(worker);
    for (auto &t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ResultRow> rows;
  std::size_t i = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t di = 0; di < depths.size(); ++di) {
      double sum = 0;
      for (std::size_t t = 0; t < trials; ++t) sum += values[i + t];
      const double mean = sum / static_cast<double>(trials);
      double ss = 0;
      for (std::size_t t = 0; t < trials; ++t) ss += (values[i + t] - mean) * (values[i + t] - mean);
      const double err = trials > 1 ? std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials)) : 0.0;
      i += trials;
      const std::size_t depth = spec.max_depth > 0 ? depths[di] : fixed.at(depths[di]).depth();
      rows.push_back({std::string(spec.name), std::string(noise_kind_name(cfg.noise)), noise_param(points[p]), depth,
                      cfg.rc, std::string(metric_name(spec.metric)), mean, err, trials, cfg.seed});
    }
  }
  return rows;
}

std::string to_csv(const std::vector<ResultRow> &rows) {
  std::string out(kCsvHeader);
  out += "\n";
  for (const auto &r : rows) {
    out += r.benchmark + "," + r.noise + "," + fmt10(r.param) + "," + std::to_string(r.depth) + "," +
           (r.rc ? "on" : "off") + "," + r.metric + "," + fmt10(r.mean) + "," + fmt10(r.stderr_) + "," +
           std::to_string(r.trials) + "," + std::to_string(r.seed) + "\n";
  }
  return out;
}

std::string to_json(const std::vector<ResultRow> &rows) {
  json arr = json::array();
  for (const auto &r : rows) {
    arr.push_back({{"benchmark", r.benchmark},
                   {"noise", r.noise},
                   {"param", round10(r.param)},
                   {"depth", r.depth},
                   {"rc", r.rc ? "on" : "off"},
                   {"metric", r.metric},
                   {"mean", round10(r.mean)},
                   {"stderr", round10(r.stderr_)},
                   {"trials", r.trials},
                   {"seed", r.seed}});
  }
  return arr.dump(2) + "\n";
}

std::vector<ResultRow> rows_from_json(std::string_view text) {
  std::vector<ResultRow> rows;
  try {
    for (const auto &o : json::parse(text)) {
      rows.push_back({o.at("benchmark").get<std::string>(), o.at("noise").get<std::string>(),
                      o.at("param").get<double>(), o.at("depth").get<std::size_t>(),
                      o.at("rc").get<std::string>() == "on", o.at("metric").get<std::string>(),
                      o.at("mean").get<double>(), o.at("stderr").get<double>(), o.at("trials").get<std::size_t>(),
                      o.at("seed").get<Seed>()});
    }
  } catch (const json::exception &e) {
    throw IoError(std::string("rows_from_json: ") + e.what());
  }
  return rows;
}

std::vector<ResultRow> rows_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw IoError("rows_from_csv: missing or wrong header");
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 10) throw IoError("rows_from_csv: expected 10 fields in '" + line + "'");
    try {
      rows.push_back({f[0], f[1], std::stod(f[2]), std::stoull(f[3]), f[4] == "on", f[5], std::stod(f[6]),
                      std::stod(f[7]), std::stoull(f[8]), std::stoull(f[9])});
    } catch (const std::logic_error &) {
      throw IoError("rows_from_csv: bad number in '" + line + "'");
    }
  }
  return rows;
}

void emit(const std::vector<ResultRow> &rows, const std::string &path, std::string_view format) {
  if (rows.empty()) throw std::invalid_argument("emit: no rows");
  std::string text;
  if (format == "csv") {
    text = to_csv(rows);
  } else if (format == "json") {
    text = to_json(rows);
  } else {
    throw std::invalid_argument("emit: unknown format '" + std::string(format) + "'");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace qnoise
