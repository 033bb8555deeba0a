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

#include <algorithm>
#include <numeric>

#include "qnoise/errors.hpp"
#include "qnoise/protocols.hpp"
#include "qnoise/simulate.hpp"
#include "test_util.hpp"

namespace qnoise {
namespace {

using namespace testing;

StateSource fixed(DensityMatrix rho) {
  return [rho] { return rho; };
}

DensityMatrix worked_state() { return ket_to_density(Ket({std::sqrt(0.8), std::sqrt(0.2)})); }

// ----------------------------------------------------------------------------
// Tomography

TEST(Tomography, WorkedExampleExact) {
  TomographyResult t = state_tomography_1q(fixed(worked_state()), 0, 1);
  const double expect[] = {1.0, 0.8, 0.0, 0.6};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(t.s[i], expect[i], 1e-10) << i;
  EXPECT_LT(max_diff(t.reconstructed.matrix(), ComplexMatrix{{0.8, 0.4}, {0.4, 0.2}}), 1e-10);
  EXPECT_LT(max_diff(t.raw, ComplexMatrix{{0.8, 0.4}, {0.4, 0.2}}), 1e-10);
}

TEST(Tomography, ZeroState) {
  TomographyResult t = state_tomography_1q(fixed(DensityMatrix::zero_state(1)), 0, 1);
  const double expect[] = {1, 0, 0, 1};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(t.s[i], expect[i], 1e-12);
}

TEST(Tomography, SampledWithinBinomialBound) {
  const std::uint64_t shots = 100000;
  TomographyResult t = state_tomography_1q(fixed(worked_state()), shots, 2);
  const double expect[] = {1.0, 0.8, 0.0, 0.6};
  // 4 sigma of a +-1 valued mean is at most 4 / sqrt(1e5) = 0.0127.
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(t.s[i], expect[i], 0.02) << i;
  EXPECT_GT(t.std_err[1], 0.0);
  EXPECT_TRUE(is_hermitian(t.reconstructed.matrix(), 1e-12));
  EXPECT_NEAR(trace(t.reconstructed.matrix()).real(), 1.0, 1e-12);
}

TEST(Tomography, RoundTripOnRandomStates) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    ComplexMatrix rho = random_density(2, rng);
    TomographyResult t = state_tomography_1q(fixed(DensityMatrix(1, rho)), 0, 0);
    EXPECT_LT(max_diff(t.reconstructed.matrix(), rho), 1e-10);
    // Pauli expectation values Tr(rho P), computed directly.
    EXPECT_NEAR(t.s[1], real_trace_product(rho, kX), 1e-10);
    EXPECT_NEAR(t.s[2], real_trace_product(rho, kY), 1e-10);
    EXPECT_NEAR(t.s[3], real_trace_product(rho, kZ), 1e-10);
  }
}

TEST(Tomography, ProjectionClipsNegativeSpectrum) {
  // Bloch vector of length 1.2 is outside the ball.
  ComplexMatrix raw = (kI2 + kZ * C(1.2)) * C(0.5);
  DensityMatrix p = project_to_density(raw);
  EXPECT_NO_THROW(p.check_valid());
  EXPECT_LT(max_diff(p.matrix(), ComplexMatrix{{1, 0}, {0, 0}}), 1e-12);
}

TEST(Tomography, RejectsMultiQubitSource) {
  EXPECT_THROW(state_tomography_1q(fixed(DensityMatrix::zero_state(2)), 0, 0), DimMismatch);
}

// ----------------------------------------------------------------------------
// Randomized benchmarking

TEST(Cliffords, GroupStructure) {
  const auto &g = single_qubit_cliffords();
  ASSERT_EQ(g.size(), 24u);
  EXPECT_LT(phase_diff(g[0].matrix, kI2), 1e-12);
  for (std::size_t i = 0; i < 24; ++i) {
    ComplexMatrix w = kI2;
    for (GateKind k : g[i].word) {
      EXPECT_TRUE(k == GateKind::H || k == GateKind::S);
      w = naive_mul(single_qubit_matrix(k), w);
    }
    EXPECT_LT(phase_diff(w, g[i].matrix), 1e-12);
    for (std::size_t j = 0; j < i; ++j) EXPECT_GT(phase_diff(g[i].matrix, g[j].matrix), 1e-3);
    EXPECT_LT(phase_diff(naive_mul(g[clifford_inverse(i)].matrix, g[i].matrix), kI2), 1e-9);
    for (std::size_t j = 0; j < 24; ++j)
      EXPECT_LT(phase_diff(g[clifford_compose(j, i)].matrix, naive_mul(g[j].matrix, g[i].matrix)), 1e-9);
  }
}

TEST(Cliffords, SequencesComposeToIdentity) {
  Rng rng(5);
  const auto &g = single_qubit_cliffords();
  for (int t = 0; t < 1000; ++t) {
    auto seq = rb_sequence(1 + t % 40, rng);
    EXPECT_EQ(seq.size(), 2 + t % 40u);
    ComplexMatrix u = kI2;
    for (std::size_t c : seq) u = naive_mul(g[c].matrix, u);
    EXPECT_LT(phase_diff(u, kI2), 1e-9);
  }
}

std::vector<std::size_t> even_lengths() {
  std::vector<std::size_t> l;
  for (std::size_t m = 2; m <= 64; m += 2) l.push_back(m);
  return l;
}

TEST(RBExperiment, NoiselessSurvivalIsOne) {
  auto lengths = even_lengths();
  RBData d = rb_experiment(lengths, 10, NoNoise{}, 1);
  for (double s : d.mean_survival) EXPECT_NEAR(s, 1.0, 1e-9);
  EXPECT_EQ(d.lengths, lengths);
}

TEST(RBExperiment, DepolarizingMatchesChannelPower) {
  const double eps = 0.01;
  std::vector<std::size_t> lengths{1, 5, 10, 20, 40};
  RBData d = rb_experiment(lengths, 20, symmetric_pauli(eps), 3);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    // m + 1 channel applications on |0><0|, computed as a 2x2 power.
    ComplexMatrix rho{{1, 0}, {0, 0}};
    for (std::size_t k = 0; k <= lengths[i]; ++k) {
      ComplexMatrix next = rho * C(1 - eps);
      for (const ComplexMatrix *p : {&kX, &kY, &kZ}) next += conjugate(*p, rho) * C(eps / 3);
      rho = next;
    }
    EXPECT_NEAR(d.mean_survival[i], rho(0, 0).real(), 1e-10) << lengths[i];
  }
  RBResult r = run_rb(lengths, 20, symmetric_pauli(eps), 3);
  EXPECT_NEAR(r.fit.r, 2 * eps / 3, 0.2 * 2 * eps / 3);
}

TEST(RBFitTest, SyntheticExactData) {
  auto lengths = even_lengths();
  std::vector<double> y;
  for (std::size_t m : lengths) y.push_back(0.5 * std::pow(1 - 2 * 0.01, m) + 0.5);
  RBFit f = rb_fit(lengths, y);
  EXPECT_NEAR(f.a, 0.5, 1e-6);
  EXPECT_NEAR(f.b, 0.5, 1e-6);
  EXPECT_NEAR(f.r, 0.01, 1e-6);
  EXPECT_LT(f.residual, 1e-12);
  EXPECT_FALSE(f.degenerate);
}

TEST(RBFitTest, ConstantDataIsDegenerate) {
  auto lengths = even_lengths();
  std::vector<double> y(lengths.size(), 1.0);
  RBFit f = rb_fit(lengths, y);
  EXPECT_EQ(f.r, 0.0);
  EXPECT_TRUE(f.degenerate);
  EXPECT_NEAR(f.a + f.b, 1.0, 1e-12);
}

TEST(RBFitTest, NoisySyntheticData) {
  auto lengths = even_lengths();
  std::mt19937_64 rng(11);
  std::normal_distribution<double> jitter(0, 0.005);
  double worst = 0, mean = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<double> y;
    for (std::size_t m : lengths) y.push_back(0.5 * std::pow(1 - 2 * 0.02, m) + 0.5 + jitter(rng));
    const double r = rb_fit(lengths, y).r;
    worst = std::max(worst, std::abs(r - 0.02));
    mean += r / 100;
  }
  EXPECT_LT(worst, 0.004);
  EXPECT_NEAR(mean, 0.02, 0.001);
}

TEST(RBFitTest, Errors) {
  std::vector<std::size_t> two{1, 2, 2};
  std::vector<double> y{1, 0.9, 0.8};
  EXPECT_THROW(rb_fit(two, y), std::invalid_argument);
  std::vector<std::size_t> l{1, 2, 3, 4, 5, 6};
  std::vector<double> zigzag{1, 0, 1, 0, 1, 0};
  EXPECT_THROW(rb_fit(l, zigzag), FitDiverged);
}

TEST(RBFitTest, RateClippedToHalf) {
  std::vector<std::size_t> l{1, 2, 3, 4};
  std::vector<double> y{0.2, 0.8, 0.2, 0.8};  // decay base -1 fits best
  RBFit f = rb_fit(l, y, 1.0);
  EXPECT_GE(f.r, 0.0);
  EXPECT_LE(f.r, 0.5);
}

// ----------------------------------------------------------------------------
// Cross-entropy

std::vector<double> ideal_distribution(const Circuit &circ) {
  Ket psi = apply_circuit(Ket::basis(circ.n_qubits(), 0), circ);
  std::vector<double> p;
  for (C a : psi.amplitudes()) p.push_back(std::norm(a));
  return p;
}

TEST(XEB, BaselineEntropy) {
  std::vector<double> u(16, 1.0 / 16);
  XEBResult r = xeb_score(u, u);
  EXPECT_NEAR(r.h0, std::log(16.0) + 0.5772156649, 1e-9);
  EXPECT_NEAR(r.cross_entropy, std::log(16.0), 1e-12);
  EXPECT_NEAR(r.delta_h, 0.5772156649, 1e-9);
}

TEST(XEB, UniformSamplerIdentity) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 10; ++t) {
    std::vector<double> p(8);
    double s = 0;
    for (double &v : p) s += v = std::exponential_distribution<double>(1)(rng);
    for (double &v : p) v /= s;
    std::vector<double> u(8, 1.0 / 8);
    double h = 0;
    for (double v : p) h -= std::log(v) / 8;
    XEBResult r = xeb_score(p, u);
    EXPECT_NEAR(r.cross_entropy, h, 1e-10);
    EXPECT_NEAR(r.delta_h, std::log(8.0) + kEulerGamma - h, 1e-10);
  }
}

TEST(XEB, EnsembleEndpoints) {
  const int circuits = 200;
  double dh_ideal = 0, dh_uniform = 0;
  for (int c = 0; c < circuits; ++c) {
    auto p = ideal_distribution(random_model_circuit(4, 8, 100 + c));
    std::vector<double> u(p.size(), 1.0 / p.size());
    dh_ideal += xeb_score(p, p).delta_h / circuits;
    dh_uniform += xeb_score(p, u).delta_h / circuits;
  }
  EXPECT_NEAR(dh_ideal, 1.0, 0.1);
  EXPECT_NEAR(dh_uniform, 0.0, 0.1);
}

TEST(XEB, SampleEstimatorAgreesWithExactScore) {
  auto p = ideal_distribution(random_model_circuit(4, 8, 7));
  auto samples = sample_outcomes(p, 100000, 9);
  XEBResult est = xeb_score_samples(p, samples);
  XEBResult exact = xeb_score(p, p);
  EXPECT_GT(est.alpha_stderr, 0.0);
  EXPECT_LE(std::abs(est.alpha - exact.delta_h), 3 * est.alpha_stderr);
}

TEST(XEB, ZeroIdealProbability) {
  std::vector<double> p{0.5, 0.5, 0.0, 0.0}, a{0.25, 0.25, 0.25, 0.25};
  EXPECT_THROW(xeb_score(p, a), ZeroIdealProbability);
  std::vector<std::uint64_t> s{0, 1, 2};
  EXPECT_THROW(xeb_score_samples(p, s), ZeroIdealProbability);
  std::vector<double> ok{0.5, 0.5, 0, 0};
  EXPECT_NO_THROW(xeb_score(p, ok));
}

// ----------------------------------------------------------------------------
// Heavy outputs and quantum volume

TEST(HeavyOutput, HeavySetStrictlyAboveMedian) {
  std::vector<double> p{0.1, 0.4, 0.2, 0.3};
  EXPECT_EQ(heavy_set(p), (std::vector<std::size_t>{1, 3}));
  std::vector<double> flat(8, 0.125);
  EXPECT_TRUE(heavy_set(flat).empty());
}

TEST(HeavyOutput, IdealBeatsHalfAndMatchesEnumeration) {
  double mean = 0, oracle = 0;
  const int circuits = 100;
  for (int c = 0; c < circuits; ++c) {
    auto p = ideal_distribution(random_model_circuit(4, 8, 300 + c));
    HeavyOutputResult r = heavy_output_test(p, p);
    EXPECT_GT(r.heavy_prob, 0.5);
    EXPECT_LE(2 * r.heavy_set.size(), p.size());
    EXPECT_EQ(r.pass, r.heavy_prob > 2.0 / 3.0);
    // Enumerate: rank outcomes and add up the top half.
    std::vector<double> s = p;
    std::sort(s.begin(), s.end(), std::greater<>());
    const double med = (s[7] + s[8]) / 2;
    double top = 0;
    for (double v : p)
      if (v > med) top += v;
    EXPECT_NEAR(r.heavy_prob, top, 1e-12);
    mean += r.heavy_prob / circuits;
    oracle += top / circuits;
  }
  EXPECT_NEAR(mean, oracle, 1e-12);
}

TEST(HeavyOutput, UniformScoresHeavyFraction) {
  auto p = ideal_distribution(random_model_circuit(3, 6, 1));
  std::vector<double> u(p.size(), 1.0 / p.size());
  HeavyOutputResult r = heavy_output_test(p, u);
  EXPECT_DOUBLE_EQ(r.heavy_prob, static_cast<double>(r.heavy_set.size()) / p.size());
  EXPECT_LE(r.heavy_prob, 0.5);
  EXPECT_FALSE(r.pass);
}

TEST(HeavyOutput, FullyDepolarizedState) {
  Circuit circ = random_model_circuit(3, 3, 2);
  auto p = ideal_distribution(circ);
  DensityMatrix rho = simulate(circ, DensityMatrix::zero_state(3), PauliNoise{0.25, 0.25, 0.25});
  HeavyOutputResult r = heavy_output_test(p, measurement_distribution(rho));
  EXPECT_NEAR(r.heavy_prob, static_cast<double>(r.heavy_set.size()) / 8, 1e-12);
}

TEST(HeavyOutput, SampleVariant) {
  std::vector<double> p{0.1, 0.4, 0.2, 0.3};
  std::vector<std::uint64_t> s{1, 3, 3, 0};
  HeavyOutputResult r = heavy_output_test_samples(p, s);
  EXPECT_DOUBLE_EQ(r.heavy_prob, 0.75);
  EXPECT_TRUE(r.pass);
}

TEST(QuantumVolume, NoiselessReachesMaximum) {
  QVResult r = quantum_volume(NoNoise{}, 5, 15, 1);
  EXPECT_EQ(r.log2_vq, 5);
  EXPECT_EQ(r.volume(), 32u);
}

TEST(QuantumVolume, FullDepolarizationGivesOne) {
  QVResult r = quantum_volume(PauliNoise{0.25, 0.25, 0.25}, 4, 10, 1);
  EXPECT_EQ(r.volume(), 1u);
  for (double f : r.pass_fraction) EXPECT_EQ(f, 0.0);
}

TEST(QuantumVolume, NonIncreasingInPauliRate) {
  std::uint64_t prev = ~std::uint64_t{0};
  for (int level = 0; level <= 3; ++level) {
    QVResult r = quantum_volume(noise_level_table(NoiseKind::Pauli, level), 5, 15, 4);
    EXPECT_LE(r.volume(), prev) << "level " << level;
    prev = r.volume();
  }
}

TEST(QuantumVolume, Errors) {
  EXPECT_THROW(quantum_volume(NoNoise{}, 9, 1, 0), std::invalid_argument);
  EXPECT_THROW(quantum_volume(NoNoise{}, 1, 1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace qnoise
