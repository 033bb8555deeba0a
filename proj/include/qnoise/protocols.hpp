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

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qnoise/circuit.hpp"
#include "qnoise/noise.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

// ---------------------------------------------------------------------------
// Single-qubit state tomography

struct TomographyResult {
  std::array<double, 4> s;       // S0..S3
  std::array<double, 4> std_err;  // binomial standard errors (0 when exact)
  ComplexMatrix raw;             // (S0 I + S1 X + S2 Y + S3 Z) / 2
  DensityMatrix reconstructed;   // raw projected onto the PSD cone
};

using StateSource = std::function<DensityMatrix()>;

/// Z-, X- (H then Z) and Y-basis (Sdg, H then Z) measurements of a
/// re-preparable state. shots_per_basis == 0 uses exact probabilities.
TomographyResult state_tomography_1q(const StateSource &prepare, std::uint64_t shots_per_basis,
                                     Seed seed);
/// Clips negative eigenvalues and renormalizes the trace.
DensityMatrix project_to_density(const ComplexMatrix &m);

// ---------------------------------------------------------------------------
// Randomized benchmarking

struct CliffordElement {
  std::vector<GateKind> word;  // time order over {H, S}
  ComplexMatrix matrix;
};

/// The 24 single-qubit Cliffords; index 0 is the identity.
const std::vector<CliffordElement> &single_qubit_cliffords();
std::size_t clifford_compose(std::size_t second, std::size_t first);
std::size_t clifford_inverse(std::size_t g);

/// m uniformly random Clifford indices followed by the inverse of their product.
std::vector<std::size_t> rb_sequence(std::size_t m, Rng &rng);

struct RBData {
  std::vector<std::size_t> lengths;
  std::vector<double> mean_survival;
  std::vector<double> std_err;
};

struct RBFit {
  double a = 0, b = 0, r = 0;
  double residual = 0;  // sum of squared residuals
  bool degenerate = false;
};

struct RBResult {
  RBData data;
  RBFit fit;
};

inline constexpr std::size_t kDefaultRbSequences = 50;

/// Probability of returning to |0> per length, averaged over random
/// sequences with the noise channel applied after every Clifford.
RBData rb_experiment(std::span<const std::size_t> lengths, std::size_t sequences_per_length,
                     const NoiseModel &noise, Seed seed);
/// Least squares fit of A (1 - 2r)^m + B. Needs >= 3 distinct lengths.
/// Throws FitDiverged when the residual exceeds `max_residual`.
RBFit rb_fit(std::span<const std::size_t> lengths, std::span<const double> survival,
             double max_residual = 0.1);
RBResult run_rb(std::span<const std::size_t> lengths, std::size_t sequences_per_length,
                const NoiseModel &noise, Seed seed);

// ---------------------------------------------------------------------------
// Cross-entropy benchmarking

inline constexpr double kEulerGamma = 0.57721566490153286;

struct XEBResult {
  double h0;
  double cross_entropy;
  double delta_h;
  double alpha;
  double alpha_stderr;
};

/// Exact scores for a test distribution p_a; alpha equals delta_h.
/// Throws ZeroIdealProbability where p_a > 0 meets p_u < 1e-300.
XEBResult xeb_score(std::span<const double> p_u, std::span<const double> p_a);
/// Estimator from sampled outcome indices.
XEBResult xeb_score_samples(std::span<const double> p_u, std::span<const std::uint64_t> samples);

// ---------------------------------------------------------------------------
// Heavy outputs and quantum volume

struct HeavyOutputResult {
  std::vector<std::size_t> heavy_set;
  double heavy_prob;
  bool pass;
};

/// Outcomes whose ideal probability is strictly above the median.
std::vector<std::size_t> heavy_set(std::span<const double> ideal);
HeavyOutputResult heavy_output_test(std::span<const double> ideal, std::span<const double> test);
HeavyOutputResult heavy_output_test_samples(std::span<const double> ideal,
                                            std::span<const std::uint64_t> samples);

/// `rounds` layers of Haar-random single-qubit rotations (Rz Rx Rz) each
/// followed by a random CNOT pairing.
Circuit random_model_circuit(std::size_t n, std::size_t rounds, Seed seed);

struct QVResult {
  int log2_vq = 0;
  std::vector<std::size_t> sizes;
  std::vector<double> pass_fraction;
  std::vector<double> mean_heavy_prob;
  std::uint64_t volume() const { return std::uint64_t{1} << log2_vq; }
};

/// Square model circuits m = 2..max_m. A size passes when more than half of
/// its circuits have heavy probability above 2/3.
QVResult quantum_volume(const NoiseModel &noise, std::size_t max_m, std::size_t circuits_per_size,
                        Seed seed);

}  // namespace qnoise
