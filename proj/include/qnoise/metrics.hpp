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

#include <span>

#include "qnoise/state.hpp"

namespace qnoise {

/// Tr[ideal * noisy]. Matches the usual fidelity when `ideal` is pure; a
/// warning is logged otherwise. Throws DimMismatch.
double process_fidelity(const DensityMatrix &ideal, const DensityMatrix &noisy);
/// <psi| noisy |psi>.
double process_fidelity(const Ket &ideal, const DensityMatrix &noisy);

/// Mean fidelity over the six Pauli eigenstates between U rho U^dagger and
/// the noisy single-qubit map. Throws DimMismatch unless `ideal` is 2x2.
double average_gate_fidelity(const ComplexMatrix &ideal, const SingleQubitMap &noisy);

/// 1/2 Tr|a - b|. Throws DimMismatch.
double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

struct TraceBounds {
  double lower;
  double upper;
};
/// (1 - sqrt f, sqrt(1 - f)). Throws OutOfRange for f outside [0, 1].
TraceBounds fidelity_trace_bounds(double f);

struct Hellinger {
  double distance;
  double fidelity;
};
/// Throws NotADistribution.
Hellinger hellinger(std::span<const double> p, std::span<const double> q);

/// The six single-qubit axis states |0>, |1>, |+>, |->, |+i>, |-i>.
std::span<const Ket> axis_states();

}  // namespace qnoise
