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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qnoise/circuit.hpp"
#include "qnoise/compile.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

enum class BenchmarkId { Idle, Random, Adder, Qft, QftCT, Qaoa, QaoaCT };
enum class Metric { ProcessFidelity, ExpectationValue };

struct BenchmarkSpec {
  BenchmarkId id;
  std::string_view name;  // lower case, as used on the command line
  std::size_t n_qubits;
  std::size_t min_depth;  // depth range for the swept benchmarks; 0 when fixed
  std::size_t max_depth;
  GateSet gate_set;
  Metric metric;
};

std::span<const BenchmarkSpec> benchmark_specs();
const BenchmarkSpec &benchmark_spec(BenchmarkId id);
/// Case-insensitive lookup ("qft_ct", "QFT_CT").
std::optional<BenchmarkId> parse_benchmark(std::string_view name);
std::string_view metric_name(Metric m);

struct MaxCutGraph {
  std::size_t n_vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// The 3-cube: vertices are 3-bit labels, edges join labels one bit apart.
MaxCutGraph hypercube_graph();
/// Edges whose endpoints fall in different parts. Vertex v reads bit
/// (n - 1 - v) of `bits`, matching the qubit order.
std::size_t cut_value(const MaxCutGraph &g, std::uint64_t bits);
/// Throws DimMismatch unless dist has 2^n_vertices entries.
double maxcut_expectation(std::span<const double> dist, const MaxCutGraph &g);

/// p = 1 angles for hypercube_graph(), from a 0.01 grid search over [0, pi]^2
/// refined locally. Rz(kQaoaGamma) sits inside each CNOT pair, Rx(kQaoaBeta)
/// is the mixer.
inline constexpr double kQaoaBeta = 2.356194490192345;
inline constexpr double kQaoaGamma = 2.526112930;
/// Cost angle for the Clifford+T variant: 0.01 grid search over gamma of the
/// compiled circuit's noiseless expectation, with the mixer angle kept at
/// kQaoaBeta (which compiles exactly).
inline constexpr double kQaoaCTGamma = 0.64;

Circuit build_idle(std::size_t n, std::size_t depth);
/// Per cycle: with probability 1/4 one random CNOT pair, every other qubit
/// draws uniformly from {I, X, Y, Z, H}.
Circuit build_random(std::size_t n, std::size_t depth, Seed seed);

struct AdderLayout {
  std::vector<std::size_t> a;  // a_0..a_{n-1}
  std::vector<std::size_t> b;  // b_0..b_n, holds the sum afterwards
  std::vector<std::size_t> c;  // carries c_0..c_{n-1}, restored to 0
  std::size_t n_qubits;
};
/// Interleaved c_i, a_i, b_i triples followed by the top sum bit b_n.
AdderLayout adder_layout(std::size_t bits);
/// Ripple-carry adder over Clifford+T with Toffolis decomposed.
Circuit build_adder(std::size_t bits);

/// QFT without the final swap layer. CliffordT lowers every rotation with
/// approx_rz at `eps`.
Circuit build_qft(std::size_t n, GateSet gate_set, double eps = kDefaultSynthesisEps);

/// Initial H layer, then per stage the edge terms CNOT Rz(gamma) CNOT
/// (edges grouped into parallel matchings) and Rx(beta) on every qubit.
Circuit build_qaoa(const MaxCutGraph &g, double beta, double gamma, std::size_t p, GateSet gate_set,
                   double eps = kDefaultSynthesisEps);

/// The circuit a benchmark actually runs: fixed-depth benchmarks ignore
/// `depth`, Clifford+T circuits are interleaved with idle cycles.
Circuit build_benchmark(BenchmarkId id, std::size_t depth, Seed seed, double eps = kDefaultSynthesisEps);

}  // namespace qnoise
