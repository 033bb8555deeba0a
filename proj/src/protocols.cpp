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


#include "qnoise/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qnoise/errors.hpp"
#include "qnoise/simulate.hpp"

namespace qnoise {

namespace {

constexpr double kPi = std::numbers::pi;

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stderr_of(std::span<const double> v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double ss = 0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1) / static_cast<double>(v.size()));
}

// <Z> after the rotation `u`, either exact or from `shots` samples.
double rotated_z(const DensityMatrix &rho, const ComplexMatrix &u, std::uint64_t shots, Seed seed) {
  DensityMatrix r = rho;
  r.apply_map(SingleQubitMap::from_unitary(u), 0);
  if (shots == 0) {
    const auto p = measurement_distribution(r);
    return p[0] - p[1];
  }
  const auto counts = sample_measurements(r, shots, seed);
  return (static_cast<double>(counts[0]) - static_cast<double>(counts[1])) / static_cast<double>(shots);
}

void check_same_length(std::span<const double> a, std::size_t b) {
  if (a.size() != b) throw NotADistribution("distribution lengths differ");
}

}  // namespace

// ---------------------------------------------------------------------------

DensityMatrix project_to_density(const ComplexMatrix &m) {
  const ComplexMatrix herm = (m + adjoint(m)) * Complex(0.5);
  const HermitianEigen e = hermitian_eigen(herm);
  const std::size_t d = m.dim();
  double total = 0;
  std::vector<double> vals(e.values.size());
  for (std::size_t k = 0; k < vals.size(); ++k) total += vals[k] = std::max(0.0, e.values[k]);
  if (total <= 0) throw InvalidState("project_to_density: no positive spectrum");
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (vals[k] == 0) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        out(i, j) += vals[k] / total * e.vectors(i, k) * std::conj(e.vectors(j, k));
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return DensityMatrix(n, (out + adjoint(out)) * Complex(0.5));
}

TomographyResult state_tomography_1q(const StateSource &prepare, std::uint64_t shots_per_basis, Seed seed) {
  const ComplexMatrix h = single_qubit_matrix(GateKind::H);
  const ComplexMatrix rotations[] = {h, h * single_qubit_matrix(GateKind::Sdg), ComplexMatrix::identity(2)};

  std::array<double, 4> s{1.0, 0.0, 0.0, 0.0};
  std::array<double, 4> err{};
  for (std::size_t k = 0; k < 3; ++k) {
    const DensityMatrix rho = prepare();
    if (rho.n_qubits() != 1) throw DimMismatch("state_tomography_1q expects a single-qubit state");
    s[k + 1] = rotated_z(rho, rotations[k], shots_per_basis, derive_seed(seed, {k}));
    if (shots_per_basis > 0) {
      err[k + 1] = std::sqrt(std::max(0.0, 1 - s[k + 1] * s[k + 1]) / static_cast<double>(shots_per_basis));
    }
  }
  if (shots_per_basis == 0) {
    // S0 is the total Z-basis probability.
    const auto p = measurement_distribution(prepare());
    s[0] = p[0] + p[1];
  }

  ComplexMatrix raw = ComplexMatrix::identity(2) * Complex(s[0]);
  raw += pauli_matrix('X') * Complex(s[1]);
  raw += pauli_matrix('Y') * Complex(s[2]);
  raw += pauli_matrix('Z') * Complex(s[3]);
  raw *= 0.5;
  return {s, err, raw, project_to_density(raw)};
}

// ---------------------------------------------------------------------------

const std::vector<CliffordElement> &single_qubit_cliffords() {
  static const std::vector<CliffordElement> group = [] {
    std::vector<CliffordElement> g{{{}, ComplexMatrix::identity(2)}};
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (GateKind k : {GateKind::H, GateKind::S}) {
        ComplexMatrix m = single_qubit_matrix(k) * g[i].matrix;
        const bool seen = std::any_of(g.begin(), g.end(), [&](const CliffordElement &e) {
          return equal_up_to_phase(e.matrix, m, 1e-9);
        });
        if (seen) continue;
        auto word = g[i].word;
        word.push_back(k);
        g.push_back({std::move(word), std::move(m)});
      }
    }
    if (g.size() != 24) throw std::logic_error("single-qubit Clifford group has wrong order");
    return g;
  }();
  return group;
}

namespace {

struct CliffordTables {
  std::array<std::array<std::uint8_t, 24>, 24> compose;
  std::array<std::uint8_t, 24> inverse;
};

const CliffordTables &clifford_tables() {
  static const CliffordTables t = [] {
    const auto &g = single_qubit_cliffords();
    CliffordTables out{};
    for (std::size_t a = 0; a < 24; ++a)
      for (std::size_t b = 0; b < 24; ++b) {
        const ComplexMatrix m = g[a].matrix * g[b].matrix;
        std::size_t k = 0;
        while (!equal_up_to_phase(g[k].matrix, m, 1e-9)) ++k;
        out.compose[a][b] = static_cast<std::uint8_t>(k);
        if (k == 0) out.inverse[b] = static_cast<std::uint8_t>(a);
      }
    return out;
  }();
  return t;
}

}  // namespace

std::size_t clifford_compose(std::size_t second, std::size_t first) {
  return clifford_tables().compose.at(second).at(first);
}

std::size_t clifford_inverse(std::size_t g) { return clifford_tables().inverse.at(g); }

std::vector<std::size_t> rb_sequence(std::size_t m, Rng &rng) {
  std::vector<std::size_t> seq(m);
  std::size_t total = 0;
  for (auto &c : seq) {
    c = uniform_index(rng, 24);
    total = clifford_compose(c, total);
  }
  seq.push_back(clifford_inverse(total));
  return seq;
}

RBData rb_experiment(std::span<const std::size_t> lengths, std::size_t sequences_per_length,
                     const NoiseModel &noise, Seed seed) {
  if (sequences_per_length == 0) throw std::invalid_argument("rb_experiment: need at least one sequence");
  const SingleQubitMap noise_map = channel_map(noise);
  std::vector<SingleQubitMap> step;
  for (const auto &c : single_qubit_cliffords()) step.push_back(noise_map.after(SingleQubitMap::from_unitary(c.matrix)));

  RBData out;
  for (std::size_t li = 0; li < lengths.size(); ++li) {
    if (lengths[li] == 0) throw std::invalid_argument("rb_experiment: lengths must be >= 1");
    std::vector<double> survival;
    for (std::size_t s = 0; s < sequences_per_length; ++s) {
      Rng rng(derive_seed(seed, {li, s}));
      ComplexMatrix rho{{1.0, 0.0}, {0.0, 0.0}};
      for (std::size_t c : rb_sequence(lengths[li], rng)) rho = step[c].apply(rho);
      survival.push_back(rho(0, 0).real());
    }
    out.lengths.push_back(lengths[li]);
    out.mean_survival.push_back(mean_of(survival));
    out.std_err.push_back(stderr_of(survival));
  }
  return out;
}

RBFit rb_fit(std::span<const std::size_t> lengths, std::span<const double> survival, double max_residual) {
  if (lengths.size() != survival.size()) throw std::invalid_argument("rb_fit: size mismatch");
  std::vector<std::size_t> distinct(lengths.begin(), lengths.end());
  std::sort(distinct.begin(), distinct.end());
  if (std::unique(distinct.begin(), distinct.end()) - distinct.begin() < 3) {
    throw std::invalid_argument("rb_fit: needs at least 3 distinct lengths");
  }

  const auto [lo, hi] = std::minmax_element(survival.begin(), survival.end());
  if (*hi - *lo < 1e-12) {
    RBFit fit;
    fit.b = mean_of(survival);
    fit.degenerate = true;
    return fit;
  }

  // For fixed decay f the model is linear in (A, B).
  auto solve = [&](double f) {
    double sxx = 0, sx = 0, sxy = 0, sy = 0;
    const double n = static_cast<double>(lengths.size());
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const double x = std::pow(f, static_cast<double>(lengths[i]));
      sxx += x * x;
      sx += x;
      sxy += x * survival[i];
      sy += survival[i];
    }
    RBFit fit;
    fit.r = (1 - f) / 2;
    const double det = n * sxx - sx * sx;
    if (det > 1e-14 * std::max(1.0, n * sxx)) {
      fit.a = (n * sxy - sx * sy) / det;
      fit.b = (sy - fit.a * sx) / n;
    } else {
      fit.a = 0;
      fit.b = sy / n;
    }
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const double d = survival[i] - fit.a * std::pow(f, static_cast<double>(lengths[i])) - fit.b;
      fit.residual += d * d;
    }
    return fit;
  };

  constexpr int kGrid = 2000;
  int best_k = 0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kGrid; ++k) {
    const double res = solve(static_cast<double>(k) / kGrid).residual;
    if (res < best) {
      best = res;
      best_k = k;
    }
  }
  // Golden-section refinement inside the bracketing grid cells.
  double a = std::max(0, best_k - 1) / static_cast<double>(kGrid);
  double b = std::min(kGrid, best_k + 1) / static_cast<double>(kGrid);
  const double phi = (std::sqrt(5.0) - 1) / 2;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = solve(c).residual, fd = solve(d).residual;
  for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = solve(c).residual;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = solve(d).residual;
    }
  }
  RBFit fit = solve((a + b) / 2);
  fit.r = std::clamp(fit.r, 0.0, 0.5);
  if (!(fit.residual <= max_residual)) {
    throw FitDiverged("rb_fit: residual " + std::to_string(fit.residual) + " exceeds " + std::to_string(max_residual));
  }
  return fit;
}

RBResult run_rb(std::span<const std::size_t> lengths, std::size_t sequences_per_length, const NoiseModel &noise,
                Seed seed) {
  RBResult out;
  out.data = rb_experiment(lengths, sequences_per_length, noise, seed);
  out.fit = rb_fit(out.data.lengths, out.data.mean_survival);
  return out;
}

// ---------------------------------------------------------------------------

XEBResult xeb_score(std::span<const double> p_u, std::span<const double> p_a) {
  check_same_length(p_a, p_u.size());
  const double h0 = std::log(static_cast<double>(p_u.size())) + kEulerGamma;
  double h = 0;
  for (std::size_t i = 0; i < p_u.size(); ++i) {
    if (p_a[i] <= 0) continue;
    if (p_u[i] < 1e-300) throw ZeroIdealProbability("outcome " + std::to_string(i) + " has zero ideal probability");
    h -= p_a[i] * std::log(p_u[i]);
  }
  return {h0, h, h0 - h, h0 - h, 0.0};
}

XEBResult xeb_score_samples(std::span<const double> p_u, std::span<const std::uint64_t> samples) {
  if (samples.empty()) throw std::invalid_argument("xeb_score_samples: no samples");
  const double h0 = std::log(static_cast<double>(p_u.size())) + kEulerGamma;
  std::vector<double> surprise;
  surprise.reserve(samples.size());
  for (std::uint64_t x : samples) {
    if (x >= p_u.size()) throw IndexOutOfRange("sample outcome " + std::to_string(x));
    if (p_u[x] < 1e-300) throw ZeroIdealProbability("outcome " + std::to_string(x) + " has zero ideal probability");
    surprise.push_back(-std::log(p_u[x]));
  }
  const double h = mean_of(surprise);
  return {h0, h, h0 - h, h0 - h, stderr_of(surprise)};
}

std::vector<std::size_t> heavy_set(std::span<const double> ideal) {
  std::vector<double> sorted(ideal.begin(), ideal.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double median = n % 2 ? sorted[n / 2] : (sorted[n / 2 - 1] + sorted[n / 2]) / 2;
  std::vector<std::size_t> heavy;
  for (std::size_t i = 0; i < n; ++i)
    if (ideal[i] > median) heavy.push_back(i);
  return heavy;
}

HeavyOutputResult heavy_output_test(std::span<const double> ideal, std::span<const double> test) {
  check_same_length(test, ideal.size());
  HeavyOutputResult out{heavy_set(ideal), 0.0, false};
  for (std::size_t i : out.heavy_set) out.heavy_prob += test[i];
  out.pass = out.heavy_prob > 2.0 / 3.0;
  return out;
}

HeavyOutputResult heavy_output_test_samples(std::span<const double> ideal, std::span<const std::uint64_t> samples) {
  if (samples.empty()) throw std::invalid_argument("heavy_output_test_samples: no samples");
  HeavyOutputResult out{heavy_set(ideal), 0.0, false};
  std::vector<char> is_heavy(ideal.size(), 0);
  for (std::size_t i : out.heavy_set) is_heavy[i] = 1;
  std::size_t hits = 0;
  for (std::uint64_t x : samples) hits += x < is_heavy.size() && is_heavy[x];
  out.heavy_prob = static_cast<double>(hits) / static_cast<double>(samples.size());
  out.pass = out.heavy_prob > 2.0 / 3.0;
  return out;
}

Circuit random_model_circuit(std::size_t n, std::size_t rounds, Seed seed) {
  Rng rng(seed);
  Circuit circ(n, GateSet::ParamRotations);
  std::vector<std::size_t> order(n);
  for (std::size_t r = 0; r < rounds; ++r) {
    Cycle first(n), middle(n), last(n);
    for (std::size_t q = 0; q < n; ++q) {
      // Haar measure in Z-X-Z Euler angles.
      first.add(Gate::rz(2 * kPi * uniform01(rng), q));
      middle.add(Gate::rx(std::acos(1 - 2 * uniform01(rng)), q));
      last.add(Gate::rz(2 * kPi * uniform01(rng), q));
    }
    circ.append(std::move(first)).append(std::move(middle)).append(std::move(last));
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_index(rng, i)]);
    Cycle pairs(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) pairs.add(Gate::cnot(order[i], order[i + 1]));
    circ.append(std::move(pairs));
  }
  return circ;
}

QVResult quantum_volume(const NoiseModel &noise, std::size_t max_m, std::size_t circuits_per_size, Seed seed) {
  if (max_m < 2 || max_m > 8) throw std::invalid_argument("quantum_volume: max_m must be in [2, 8]");
  if (circuits_per_size == 0) throw std::invalid_argument("quantum_volume: circuits_per_size must be >= 1");
  QVResult out;
  for (std::size_t m = 2; m <= max_m; ++m) {
    std::size_t passed = 0;
    double heavy_total = 0;
    for (std::size_t c = 0; c < circuits_per_size; ++c) {
      const Circuit circ = random_model_circuit(m, m, derive_seed(seed, {m, c}));
      const Ket ideal = apply_circuit(Ket::basis(m, 0), circ);
      std::vector<double> p_ideal;
      for (const auto &a : ideal.amplitudes()) p_ideal.push_back(std::norm(a));
      const DensityMatrix rho = simulate(circ, DensityMatrix::zero_state(m), noise);
      const auto res = heavy_output_test(p_ideal, measurement_distribution(rho));
      passed += res.pass;
      heavy_total += res.heavy_prob;
    }
    out.sizes.push_back(m);
    out.pass_fraction.push_back(static_cast<double>(passed) / static_cast<double>(circuits_per_size));
    out.mean_heavy_prob.push_back(heavy_total / static_cast<double>(circuits_per_size));
    if (2 * passed > circuits_per_size) out.log2_vq = static_cast<int>(m);
  }
  return out;
}

}  // namespace qnoise
