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
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qnoise/linalg.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

/// Pure state vector over n qubits.
class Ket {
 public:
  explicit Ket(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const { return n_qubits_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  double norm_squared() const;

  static Ket basis(std::size_t n_qubits, std::uint64_t index);

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amplitudes_;
};

struct BlochAngles {
  double theta;  // [0, pi]
  double phi;    // [0, 2 pi)
};

/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Ket bloch_ket(BlochAngles angles);
Ket tensor(const Ket &a, const Ket &b);

/// Linear map on a single qubit's 2x2 blocks, vec(B') = m vec(B) with
/// row-major vec. Built from Kraus operators: m = sum_k K_k (x) conj(K_k).
class SingleQubitMap {
 public:
  static SingleQubitMap identity();
  static SingleQubitMap from_unitary(const ComplexMatrix &u);
  static SingleQubitMap from_kraus(std::span<const ComplexMatrix> kraus);
  /// Mixture sum_k p_k U_k rho U_k^dagger.
  static SingleQubitMap from_mixture(std::span<const double> probs,
                                     std::span<const ComplexMatrix> unitaries);

  /// Map that applies `first` and then `this`.
  SingleQubitMap after(const SingleQubitMap &first) const;

  ComplexMatrix apply(const ComplexMatrix &rho2) const;
  const std::array<Complex, 16> &entries() const { return m_; }

 private:
  std::array<Complex, 16> m_{};
};

/// Mixed state over n qubits. Construction checks unit trace and
/// Hermiticity (1e-9); `check_valid` additionally checks eigenvalues.
class DensityMatrix {
 public:
  DensityMatrix(std::size_t n_qubits, ComplexMatrix matrix);

  static DensityMatrix zero_state(std::size_t n_qubits);
  static DensityMatrix maximally_mixed(std::size_t n_qubits);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return matrix_.dim(); }
  const ComplexMatrix &matrix() const { return matrix_; }

  double purity() const;
  /// Throws InvalidState unless trace, Hermiticity and eigenvalues are
  /// within `tol`.
  void check_valid(double tol = 1e-9) const;
  /// Reduced single-qubit state (partial trace over all other qubits).
  ComplexMatrix reduced_qubit(std::size_t qubit) const;

  void apply_map(const SingleQubitMap &map, std::size_t qubit);
  /// Flip `target` on basis states where every control is |1>.
  void apply_controlled_x(std::span<const std::size_t> controls, std::size_t target);
  /// rho -> U rho U^dagger for a full-width U.
  void apply_unitary(const ComplexMatrix &u);

 private:
  std::size_t n_qubits_;
  ComplexMatrix matrix_;
};

/// |k><k|. Throws NotNormalized when sum |amp|^2 deviates from 1 by more than 1e-8.
DensityMatrix ket_to_density(const Ket &k);

/// Product of n single-qubit pure states with directions uniform on the
/// Bloch sphere (phi ~ U[0, 2 pi), cos theta ~ U[-1, 1]).
Ket random_product_state(std::size_t n, Seed seed);
BlochAngles random_bloch_angles(Rng &rng);

/// p_i = Re rho_ii. Entries in [-1e-10, 0) are clamped and the vector
/// renormalized; anything below -1e-8 throws InvalidState.
std::vector<double> measurement_distribution(const DensityMatrix &rho);

/// Multinomial counts over basis states.
std::vector<std::uint64_t> sample_measurements(const DensityMatrix &rho, std::uint64_t shots,
                                               Seed seed);
/// Draws outcome indices from a probability vector.
std::vector<std::uint64_t> sample_outcomes(std::span<const double> probs, std::uint64_t shots,
                                           Seed seed);

}  // namespace qnoise
