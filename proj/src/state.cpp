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

#include "qnoise/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

std::size_t log2_exact(std::size_t dim) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  if ((std::size_t{1} << n) != dim) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  return n;
}

}  // namespace

Ket::Ket(std::vector<Complex> amplitudes)
    : n_qubits_(log2_exact(amplitudes.size())), amplitudes_(std::move(amplitudes)) {}

double Ket::norm_squared() const {
  double s = 0;
  for (const auto &a : amplitudes_) s += std::norm(a);
  return s;
}

Ket Ket::basis(std::size_t n_qubits, std::uint64_t index) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  amps.at(index) = 1.0;
  return Ket(std::move(amps));
}

Ket bloch_ket(BlochAngles angles) {
  return Ket({std::cos(angles.theta / 2),
              std::polar(1.0, angles.phi) * std::sin(angles.theta / 2)});
}

Ket tensor(const Ket &a, const Ket &b) {
  std::vector<Complex> out;
  out.reserve(a.amplitudes().size() * b.amplitudes().size());
  for (const auto &x : a.amplitudes())
    for (const auto &y : b.amplitudes()) out.push_back(x * y);
  return Ket(std::move(out));
}

SingleQubitMap SingleQubitMap::identity() {
  return from_unitary(ComplexMatrix::identity(2));
}

SingleQubitMap SingleQubitMap::from_unitary(const ComplexMatrix &u) {
  const ComplexMatrix ops[] = {u};
  return from_kraus(ops);
}

SingleQubitMap SingleQubitMap::from_kraus(std::span<const ComplexMatrix> kraus) {
  SingleQubitMap s;
  for (const auto &k : kraus) {
    if (k.dim() != 2) throw DimMismatch("SingleQubitMap expects 2x2 operators");
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) s.m_[(a * 2 + b) * 4 + c * 2 + d] += k(a, c) * std::conj(k(b, d));
  }
  return s;
}

SingleQubitMap SingleQubitMap::from_mixture(std::span<const double> probs,
                                            std::span<const ComplexMatrix> unitaries) {
  if (probs.size() != unitaries.size()) throw std::invalid_argument("from_mixture: size mismatch");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] == 0) continue;
    kraus.push_back(unitaries[k] * Complex(std::sqrt(probs[k])));
  }
  return from_kraus(kraus);
}

SingleQubitMap SingleQubitMap::after(const SingleQubitMap &first) const {
  SingleQubitMap out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Complex acc{};
      for (int k = 0; k < 4; ++k) acc += m_[r * 4 + k] * first.m_[k * 4 + c];
      out.m_[r * 4 + c] = acc;
    }
  return out;
}

ComplexMatrix SingleQubitMap::apply(const ComplexMatrix &rho2) const {
  if (rho2.dim() != 2) throw DimMismatch("SingleQubitMap::apply expects a 2x2 matrix");
  ComplexMatrix out(2);
  for (int r = 0; r < 4; ++r) {
    Complex acc{};
    for (int c = 0; c < 4; ++c) acc += m_[r * 4 + c] * rho2.data()[c];
    out.data()[r] = acc;
  }
  return out;
}

DensityMatrix::DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix)
    : n_qubits_(n_qubits), matrix_(std::move(matrix)) {
  if (matrix_.dim() != (std::size_t{1} << n_qubits)) {
    throw DimMismatch("DensityMatrix: dimension " + std::to_string(matrix_.dim()) +
                      " does not match " + std::to_string(n_qubits) + " qubits");
  }
  if (std::abs(trace(matrix_) - 1.0) > 1e-9) {
    throw InvalidState("DensityMatrix: trace deviates from 1 by more than 1e-9");
  }
  if (!is_hermitian(matrix_, 1e-9)) throw InvalidState("DensityMatrix: not Hermitian");
}

DensityMatrix DensityMatrix::zero_state(std::size_t n_qubits) {
  ComplexMatrix m(std::size_t{1} << n_qubits);
  m(0, 0) = 1.0;
  return DensityMatrix(n_qubits, std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
  const std::size_t dim = std::size_t{1} << n_qubits;
  return DensityMatrix(n_qubits, ComplexMatrix::identity(dim) * Complex(1.0 / dim));
}

double DensityMatrix::purity() const {
  // Tr[rho^2] = sum |rho_ij|^2 for Hermitian rho.
  double s = 0;
  for (const auto &e : matrix_.data()) s += std::norm(e);
  return s;
}

void DensityMatrix::check_valid(double tol) const {
  if (std::abs(trace(matrix_) - 1.0) > tol) throw InvalidState("trace deviates from 1");
  if (!is_hermitian(matrix_, tol)) throw InvalidState("not Hermitian");
  for (double ev : hermitian_eigenvalues(matrix_)) {
    if (ev < -tol) throw InvalidState("negative eigenvalue " + std::to_string(ev));
  }
}

ComplexMatrix DensityMatrix::reduced_qubit(std::size_t qubit) const {
  if (qubit >= n_qubits_) throw IndexOutOfRange("reduced_qubit: qubit " + std::to_string(qubit));
  const std::size_t bit = std::size_t{1} << (n_qubits_ - 1 - qubit);
  ComplexMatrix out(2);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i & bit) continue;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) out(a, b) += matrix_(i | (a ? bit : 0), i | (b ? bit : 0));
  }
  return out;
}

void DensityMatrix::apply_map(const SingleQubitMap &map, std::size_t qubit) {
  if (qubit >= n_qubits_) throw IndexOutOfRange("apply_map: qubit " + std::to_string(qubit));
  const std::size_t bit = std::size_t{1} << (n_qubits_ - 1 - qubit);
  const std::size_t d = dim();
  const auto &m = map.entries();
  Complex *data = matrix_.data().data();
  for (std::size_t i = 0; i < d; ++i) {
    if (i & bit) continue;
    Complex *row0 = data + i * d;
    Complex *row1 = data + (i | bit) * d;
    for (std::size_t j = 0; j < d; ++j) {
      if (j & bit) continue;
      const std::size_t j1 = j | bit;
      const Complex b0 = row0[j], b1 = row0[j1], b2 = row1[j], b3 = row1[j1];
      row0[j] = m[0] * b0 + m[1] * b1 + m[2] * b2 + m[3] * b3;
      row0[j1] = m[4] * b0 + m[5] * b1 + m[6] * b2 + m[7] * b3;
      row1[j] = m[8] * b0 + m[9] * b1 + m[10] * b2 + m[11] * b3;
      row1[j1] = m[12] * b0 + m[13] * b1 + m[14] * b2 + m[15] * b3;
    }
  }
}

void DensityMatrix::apply_controlled_x(std::span<const std::size_t> controls, std::size_t target) {
  auto bit_of = [&](std::size_t q) {
    if (q >= n_qubits_) throw IndexOutOfRange("apply_controlled_x: qubit " + std::to_string(q));
    return std::size_t{1} << (n_qubits_ - 1 - q);
  };
  std::size_t control_mask = 0;
  for (std::size_t c : controls) control_mask |= bit_of(c);
  const std::size_t target_bit = bit_of(target);
  auto perm = [&](std::size_t i) {
    return (i & control_mask) == control_mask ? i ^ target_bit : i;
  };
  // The permutation is an involution: swap row pairs, then column pairs.
  const std::size_t d = dim();
  Complex *data = matrix_.data().data();
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t pi = perm(i);
    if (pi > i) std::swap_ranges(data + i * d, data + (i + 1) * d, data + pi * d);
  }
  for (std::size_t i = 0; i < d; ++i) {
    Complex *row = data + i * d;
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t pj = perm(j);
      if (pj > j) std::swap(row[j], row[pj]);
    }
  }
}

void DensityMatrix::apply_unitary(const ComplexMatrix &u) {
  if (u.dim() != dim()) throw DimMismatch("apply_unitary: width mismatch");
  matrix_ = u * matrix_ * adjoint(u);
}

DensityMatrix ket_to_density(const Ket &k) {
  if (std::abs(k.norm_squared() - 1.0) > 1e-8) {
    throw NotNormalized("ket_to_density: sum |amp|^2 = " + std::to_string(k.norm_squared()));
  }
  const auto amps = k.amplitudes();
  ComplexMatrix m(amps.size());
  for (std::size_t r = 0; r < amps.size(); ++r)
    for (std::size_t c = 0; c < amps.size(); ++c) m(r, c) = amps[r] * std::conj(amps[c]);
  return DensityMatrix(k.n_qubits(), std::move(m));
}

BlochAngles random_bloch_angles(Rng &rng) {
  const double cos_theta = 1.0 - 2.0 * uniform01(rng);
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  return {std::acos(std::clamp(cos_theta, -1.0, 1.0)), phi};
}

Ket random_product_state(std::size_t n, Seed seed) {
  if (n == 0) throw std::invalid_argument("random_product_state: n must be >= 1");
  Rng rng(seed);
  Ket out = bloch_ket(random_bloch_angles(rng));
  for (std::size_t q = 1; q < n; ++q) out = tensor(out, bloch_ket(random_bloch_angles(rng)));
  return out;
}

std::vector<double> measurement_distribution(const DensityMatrix &rho) {
  std::vector<double> p(rho.dim());
  double total = 0;
  bool clamped = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double v = rho.matrix()(i, i).real();
    if (v < -1e-8) throw InvalidState("negative diagonal entry " + std::to_string(v));
    if (v < 0) {
      v = 0;
      clamped = true;
    }
    p[i] = v;
    total += v;
  }
  if (clamped) {
    for (auto &v : p) v /= total;
  }
  return p;
}

std::vector<std::uint64_t> sample_outcomes(std::span<const double> probs, std::uint64_t shots,
                                           Seed seed) {
  std::vector<double> cumulative(probs.size());
  double acc = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) cumulative[i] = acc += probs[i];
  Rng rng(seed);
  std::vector<std::uint64_t> outcomes(shots);
  for (auto &o : outcomes) {
    const double u = uniform01(rng) * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    // Skip zero-probability bins sharing the same cumulative value.
    while (probs[static_cast<std::size_t>(it - cumulative.begin())] == 0 && it != cumulative.begin()) --it;
    o = static_cast<std::uint64_t>(it - cumulative.begin());
  }
  return outcomes;
}

std::vector<std::uint64_t> sample_measurements(const DensityMatrix &rho, std::uint64_t shots,
                                               Seed seed) {
  if (shots == 0) throw std::invalid_argument("sample_measurements: shots must be >= 1");
  const auto p = measurement_distribution(rho);
  std::vector<std::uint64_t> counts(p.size());
  for (std::uint64_t o : sample_outcomes(p, shots, seed)) ++counts[o];
  return counts;
}

}  // namespace qnoise
