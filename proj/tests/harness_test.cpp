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


#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qnoise/errors.hpp"
#include "qnoise/harness.hpp"

namespace qnoise {
namespace {

std::string config_field_error(const std::string &json) {
  try {
    parse_config(json);
  } catch (const ConfigError &e) {
    return e.what();
  }
  return "";
}

// ----------------------------------------------------------------------------
// Config parsing

TEST(ParseConfig, Defaults) {
  ExperimentConfig cfg = parse_config("{}");
  EXPECT_EQ(cfg.benchmark, BenchmarkId::Idle);
  EXPECT_EQ(cfg.noise, NoiseKind::Pauli);
  EXPECT_EQ(cfg.levels, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_FALSE(cfg.rc);
  EXPECT_EQ(cfg.format, "csv");
}

TEST(ParseConfig, AllFields) {
  ExperimentConfig cfg = parse_config(R"({
    "benchmark": "QFT_CT", "noise": "amplitude_damping", "levels": [1, 3], "rc": "on",
    "trials": 7, "depths": {"min": 3, "max": 5, "step": 2}, "seed": 99,
    "synthesis_eps": 0.02, "threads": 2, "output": {"path": "x.json", "format": "json"}})");
  EXPECT_EQ(cfg.benchmark, BenchmarkId::QftCT);
  EXPECT_EQ(cfg.noise, NoiseKind::AmplitudeDamping);
  EXPECT_EQ(cfg.levels, (std::vector<int>{1, 3}));
  EXPECT_TRUE(cfg.rc);
  EXPECT_EQ(cfg.trials, 7u);
  EXPECT_EQ(cfg.depths.min, 3u);
  EXPECT_EQ(cfg.depths.step, 2u);
  EXPECT_EQ(cfg.seed, 99u);
  EXPECT_DOUBLE_EQ(cfg.synthesis_eps, 0.02);
  EXPECT_EQ(cfg.threads, 2u);
  EXPECT_EQ(cfg.out_path, "x.json");
  EXPECT_EQ(cfg.format, "json");
  EXPECT_TRUE(parse_config(R"({"rc": true})").rc);
  EXPECT_FALSE(parse_config(R"({"rc": "off"})").rc);
}

TEST(ParseConfig, ErrorsNameTheField) {
  const std::pair<const char *, const char *> cases[] = {
      {R"({"bogus": 1})", "bogus"},
      {R"({"depths": {"min": 2, "extra": 1}})", "depths.extra"},
      {R"({"benchmark": "grover"})", "benchmark"},
      {R"({"noise": "thermal"})", "noise"},
      {R"({"trials": 0})", "trials"},
      {R"({"trials": -3})", "trials"},
      {R"({"trials": "many"})", "trials"},
      {R"({"levels": [4]})", "levels"},
      {R"({"depths": {"min": 1}})", "depths"},
      {R"({"depths": {"max": 71}})", "depths"},
      {R"({"depths": {"min": 9, "max": 5}})", "depths.min"},
      {R"({"depths": {"step": 0}})", "depths.step"},
      {R"({"sweep": {"start": 0, "stop": 0.1, "step": 0}})", "sweep.step"},
      {R"({"sweep": {"start": 0, "stop": 0.1, "step": -0.01}})", "sweep.step"},
      {R"({"sweep": {"start": 0, "stop": 0.1}})", "sweep.step"},
      {R"({"sweep": {"start": 0.2, "stop": 0.1, "step": 0.01}})", "sweep.stop"},
      {R"({"noise": "amplitude_damping", "params": [1.5]})", "params"},
      {R"({"benchmark": "qft", "rc": "on"})", "rc"},
      {R"({"rc": "maybe"})", "rc"},
      {R"({"output": {"format": "xml"}})", "format"},
      {R"({"synthesis_eps": 0})", "synthesis_eps"},
      {R"({"seed": -1})", "seed"},
      {R"([1, 2])", "config"},
      {R"({"trials": )", "config"},
  };
  for (auto [json, field] : cases) {
    const std::string what = config_field_error(json);
    ASSERT_FALSE(what.empty()) << json;
    EXPECT_EQ(what.rfind("ConfigError: ", 0), 0u) << what;
    EXPECT_NE(what.find(std::string(field) + ":"), std::string::npos) << json << " -> " << what;
  }
  EXPECT_THROW(load_config("/nonexistent/cfg.json"), ConfigError);
}

TEST(ParseConfig, ParamBenchmarksIgnoreDepthRange) {
  ExperimentConfig cfg = parse_config(R"({"benchmark": "qaoa", "depths": {"min": 2, "max": 3}})");
  EXPECT_EQ(cfg.benchmark, BenchmarkId::Qaoa);
}

// ----------------------------------------------------------------------------
// Sweep points

TEST(SweepPoints, LevelsParamsAndFineSweep) {
  ExperimentConfig cfg;
  cfg.noise = NoiseKind::AmplitudeDamping;
  cfg.levels = {0, 2};
  auto pts = sweep_points(cfg);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(noise_param(pts[0]), 0.0);
  EXPECT_EQ(noise_param(pts[1]), noise_param(noise_level_table(NoiseKind::AmplitudeDamping, 2)));

  cfg.params = {0.5, 0.75};
  pts = sweep_points(cfg);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_DOUBLE_EQ(noise_param(pts[1]), 0.75);

  cfg.params.clear();
  cfg.sweep = FineSweep{0.0, 0.1, 0.025};
  pts = sweep_points(cfg);
  ASSERT_EQ(pts.size(), 5u);
  for (std::size_t k = 0; k < pts.size(); ++k) EXPECT_NEAR(noise_param(pts[k]), 0.025 * k, 1e-12);
}

// ----------------------------------------------------------------------------
// Running experiments

ExperimentConfig small(BenchmarkId id, NoiseKind kind) {
  ExperimentConfig cfg;
  cfg.benchmark = id;
  cfg.noise = kind;
  cfg.trials = 4;
  cfg.depths = {2, 6, 2};
  cfg.threads = 1;
  cfg.seed = 5;
  return cfg;
}

TEST(RunExperiment, RowShape) {
  ExperimentConfig cfg = small(BenchmarkId::Idle, NoiseKind::Pauli);
  cfg.levels = {0, 1};
  auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 6u);  // 2 levels x 3 depths
  EXPECT_EQ(rows[0].benchmark, "idle");
  EXPECT_EQ(rows[0].noise, "pauli");
  EXPECT_EQ(rows[0].metric, "process_fidelity");
  EXPECT_EQ(rows[2].depth, 6u);
  EXPECT_EQ(rows[3].depth, 2u);
  EXPECT_EQ(rows[0].trials, 4u);
  EXPECT_EQ(rows[0].seed, 5u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(rows[i].mean, 1.0, 1e-12);
    EXPECT_NEAR(rows[i].stderr_, 0.0, 1e-12);
  }
}

TEST(RunExperiment, PauliFidelityFallsWithDepthAndLevel) {
  ExperimentConfig cfg = small(BenchmarkId::Idle, NoiseKind::Pauli);
  cfg.levels = {1, 2, 3};
  cfg.depths = {2, 20, 6};
  cfg.trials = 10;
  auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t p = 0; p < 3; ++p)
    for (std::size_t d = 1; d < 4; ++d) EXPECT_LT(rows[4 * p + d].mean, rows[4 * p + d - 1].mean);
  for (std::size_t d = 0; d < 4; ++d) {
    EXPECT_LT(rows[4 + d].mean, rows[d].mean);
    EXPECT_LT(rows[8 + d].mean, rows[4 + d].mean);
  }
}

TEST(RunExperiment, DeterministicAcrossThreadCounts) {
  ExperimentConfig cfg = small(BenchmarkId::Random, NoiseKind::Coherent);
  cfg.rc = true;
  cfg.levels = {2};
  auto a = run_experiment(cfg);
  cfg.threads = 3;
  auto b = run_experiment(cfg);
  EXPECT_EQ(a, b);
  cfg.seed = 6;
  auto c = run_experiment(cfg);
  EXPECT_NE(a[0].mean, c[0].mean);
}

TEST(RunExperiment, DeterministicQaoaReportsOneTrial) {
  ExperimentConfig cfg = small(BenchmarkId::Qaoa, NoiseKind::None);
  cfg.levels = {0};
  auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].trials, 1u);
  EXPECT_EQ(rows[0].depth, 11u);
  EXPECT_EQ(rows[0].metric, "maxcut_expectation");
  EXPECT_GE(rows[0].mean, 8.3);
}

TEST(RunExperiment, AmplitudeDampingPullsQaoaTowardsZero) {
  ExperimentConfig cfg = small(BenchmarkId::Qaoa, NoiseKind::AmplitudeDamping);
  cfg.params = {0.5, 0.7, 0.9, 1.0};
  auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i].mean, rows[i - 1].mean);
  EXPECT_LT(rows[0].mean, 6.0);
  EXPECT_NEAR(rows.back().mean, 0.0, 1e-9);
}

TEST(RunExperiment, RcLeavesPauliNoiseUnchanged) {
  ExperimentConfig cfg = small(BenchmarkId::Random, NoiseKind::Pauli);
  cfg.levels = {2};
  auto plain = run_experiment(cfg);
  cfg.rc = true;
  auto rc = run_experiment(cfg);
  ASSERT_EQ(plain.size(), rc.size());
  for (std::size_t i = 0; i < plain.size(); ++i) EXPECT_NEAR(plain[i].mean, rc[i].mean, 1e-10);
}

TEST(RunExperiment, ValidatesDirectlyBuiltConfigs) {
  ExperimentConfig cfg = small(BenchmarkId::Qft, NoiseKind::Pauli);
  cfg.rc = true;
  EXPECT_THROW(run_experiment(cfg), ConfigError);
  cfg = small(BenchmarkId::Idle, NoiseKind::Pauli);
  cfg.trials = 0;
  EXPECT_THROW(run_experiment(cfg), ConfigError);
}

// ----------------------------------------------------------------------------
// Output

std::vector<ResultRow> sample_rows() {
  return {{"idle", "pauli", 0.001, 10, false, "process_fidelity", 0.98123456789123, 0.000123456789012, 100, 42},
          {"qaoa_ct", "amplitude_damping", 0.3, 11, true, "expectation_value", 5.390000000004, 0.0, 10, 1}};
}

TEST(Output, CsvGolden) {
  EXPECT_EQ(to_csv(sample_rows()),
            "benchmark,noise,param,depth,rc,metric,mean,stderr,trials,seed\n"
            "idle,pauli,0.001,10,off,process_fidelity,0.9812345679,0.000123456789,100,42\n"
            "qaoa_ct,amplitude_damping,0.3,11,on,expectation_value,5.39,0,10,1\n");
  EXPECT_EQ(kCsvHeader, "benchmark,noise,param,depth,rc,metric,mean,stderr,trials,seed");
}

TEST(Output, OneRowTwoLines) {
  const std::string s = to_csv({sample_rows()[0]});
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 2);
}

TEST(Output, JsonMirrorsCsv) {
  const auto rows = sample_rows();
  const auto via_json = rows_from_json(to_json(rows));
  const auto via_csv = rows_from_csv(to_csv(rows));
  EXPECT_EQ(via_json, via_csv);
  EXPECT_EQ(to_csv(via_json), to_csv(rows));
  EXPECT_EQ(to_json(rows_from_csv(to_csv(rows))), to_json(rows));
  EXPECT_NE(to_json(rows).find("\"stderr\""), std::string::npos);
}

TEST(Output, ReaderErrors) {
  EXPECT_THROW(rows_from_csv("a,b\n"), IoError);
  EXPECT_THROW(rows_from_csv(std::string(kCsvHeader) + "\nidle,pauli\n"), IoError);
  EXPECT_THROW(rows_from_csv(std::string(kCsvHeader) + "\nidle,pauli,x,1,on,m,1,0,1,1\n"), IoError);
  EXPECT_THROW(rows_from_json("[{\"benchmark\": 1}]"), IoError);
}

TEST(Output, EmitWritesAndReportsFailures) {
  const auto dir = std::filesystem::temp_directory_path() / "qnoise_harness_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "rows.json").string();
  emit(sample_rows(), path, "json");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(rows_from_json(ss.str()), rows_from_json(to_json(sample_rows())));
  EXPECT_THROW(emit(sample_rows(), (dir / "missing" / "x.csv").string(), "csv"), IoError);
  EXPECT_THROW(emit({}, path, "csv"), std::invalid_argument);
  std::filesystem::remove_all(dir);
}

// ----------------------------------------------------------------------------
// Command line

#ifdef QNOISE_BENCH_BIN

int run_cli(const std::string &args) {
  const std::string cmd = std::string(QNOISE_BENCH_BIN) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("qnoise_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string write(const std::string &name, const std::string &text) {
    const std::string p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string read(const std::string &name) {
    std::ifstream in(dir_ / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::filesystem::path dir_;
};

TEST_F(Cli, List) { EXPECT_EQ(run_cli("list"), 0); }

TEST_F(Cli, RunWithOverrides) {
  const std::string cfg =
      write("c.json", R"({"benchmark": "idle", "levels": [1], "depths": {"min": 2, "max": 3}, "trials": 50})");
  const std::string out = (dir_ / "o.csv").string();
  ASSERT_EQ(run_cli("run --config " + cfg + " --trials 2 --seed 7 --rc on --out " + out + " --format csv"), 0);
  const auto rows = rows_from_csv(read("o.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].trials, 2u);
  EXPECT_EQ(rows[0].seed, 7u);
  EXPECT_TRUE(rows[0].rc);

  ASSERT_EQ(run_cli("run --config " + cfg + " --benchmark qaoa --noise none --rc off --out " +
                    (dir_ / "o.json").string() + " --format json"),
            0);
  const auto q = rows_from_json(read("o.json"));
  ASSERT_EQ(q.size(), 1u);
  EXPECT_EQ(q[0].benchmark, "qaoa");
}

TEST_F(Cli, ConfigErrorsExitTwo) {
  const std::string good = write("g.json", R"({"benchmark": "idle", "levels": [0], "depths": {"min": 2, "max": 2}})");
  EXPECT_EQ(run_cli("run --config " + write("bad.json", R"({"trials": 0})")), 2);
  EXPECT_EQ(run_cli("run --config " + write("unk.json", R"({"colour": "red"})")), 2);
  EXPECT_EQ(run_cli("run --config " + write("broken.json", "{")), 2);
  EXPECT_EQ(run_cli("run --config " + (dir_ / "absent.json").string()), 2);
  EXPECT_EQ(run_cli("run --config " + good + " --benchmark grover"), 2);
  EXPECT_EQ(run_cli("run --config " + good + " --benchmark qft --rc on"), 2);
  EXPECT_EQ(run_cli("run --config " + good + " --format xml"), 2);
  EXPECT_EQ(run_cli("run"), 2);
}

#endif

}  // namespace
}  // namespace qnoise
