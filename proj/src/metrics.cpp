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


#include "qnoise/metrics.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

void check_distribution(std::span<const double> p, const char *name) {
  double total = 0;
  for (double v : p) {
    if (!(v >= 0)) throw NotADistribution(std::string(name) + " has a negative or NaN entry");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-8) {
    throw NotADistribution(std::string(name) + " sums to " + std::to_string(total));
  }
}

}  // namespace

double process_fidelity(const DensityMatrix &ideal, const DensityMatrix &noisy) {
  if (ideal.dim() != noisy.dim()) throw DimMismatch("process_fidelity: dimensions differ");
  if (ideal.purity() < 1 - 1e-6) {
    std::clog << "warning: process_fidelity with a mixed ideal state (purity " << ideal.purity()
              << ") is not the Uhlmann fidelity\n";
  }
  // Tr[AB] = sum_ij A_ij B_ji
  const auto &a = ideal.matrix();
  const auto &b = noisy.matrix();
  Complex acc{};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) acc += a(i, j) * b(j, i);
  return acc.real();
}

double process_fidelity(const Ket &ideal, const DensityMatrix &noisy) {
  const auto psi = ideal.amplitudes();
  if (psi.size() != noisy.dim()) throw DimMismatch("process_fidelity: dimensions differ");
  const auto &m = noisy.matrix();
  Complex acc{};
  for (std::size_t i = 0; i < psi.size(); ++i) {
    Complex row{};
    for (std::size_t j = 0; j < psi.size(); ++j) row += m(i, j) * psi[j];
    acc += std::conj(psi[i]) * row;
  }
  return acc.real();
}

std::span<const Ket> axis_states() {
  static const std::vector<Ket> states = [] {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i(0, 1);
    return std::vector<Ket>{Ket({1.0, 0.0}),  Ket({0.0, 1.0}),  Ket({r, r}),
                            Ket({r, -r}),     Ket({r, i * r}), Ket({r, -i * r})};
  }();
  return states;
}

double average_gate_fidelity(const ComplexMatrix &ideal, const SingleQubitMap &noisy) {
  if (ideal.dim() != 2) throw DimMismatch("average_gate_fidelity: single-qubit gates only");
  double total = 0;
  for (const Ket &psi : axis_states()) {
    const DensityMatrix rho = ket_to_density(psi);
    const DensityMatrix target(1, ideal * rho.matrix() * adjoint(ideal));
    const DensityMatrix out(1, noisy.apply(rho.matrix()));
    total += process_fidelity(target, out);
  }
  return total / static_cast<double>(axis_states().size());
}

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
  if (a.dim() != b.dim()) throw DimMismatch("trace_distance: dimensions differ");
  // For Hermitian a - b, sqrt((a-b)^dagger (a-b)) has eigenvalues |lambda_i|.
  double total = 0;
  for (double ev : hermitian_eigenvalues(a.matrix() - b.matrix())) total += std::abs(ev);
  return total / 2;
}

TraceBounds fidelity_trace_bounds(double f) {
  if (!(f >= 0.0 && f <= 1.0)) throw OutOfRange("fidelity " + std::to_string(f) + " outside [0, 1]");
  return {1.0 - std::sqrt(f), std::sqrt(1.0 - f)};
}

Hellinger hellinger(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw NotADistribution("hellinger: lengths differ");
  check_distribution(p, "p");
  check_distribution(q, "q");
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = std::sqrt(p[i]) - std::sqrt(q[i]);
    s += d * d;
  }
  const double distance = std::sqrt(s) / std::numbers::sqrt2;
  return {distance, 1.0 - distance};
}

}  // namespace qnoise
