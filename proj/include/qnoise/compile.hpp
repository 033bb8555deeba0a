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
#include <vector>

#include "qnoise/circuit.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

struct EulerAngles {
  double beta;
  double gamma;
  double delta;
};

/// Angles with Rz(beta) H Rz(gamma) H Rz(delta) = u up to global phase.
/// Throws NotUnitary.
EulerAngles euler_decompose(const ComplexMatrix &u);
ComplexMatrix euler_compose(const EulerAngles &a);

inline constexpr double kDefaultSynthesisEps = 0.05;
inline constexpr std::size_t kMaxSynthesisLength = 25;

struct RzApproximation {
  std::vector<GateKind> sequence;  // time order, over {H, S, Sdg, T, Tdg}
  double error;                    // min over phase of max-abs distance
};

/// Shortest word over {H, S, Sdg, T, Tdg} within `eps` of Rz(theta) up to
/// phase. Among the shortest, the smallest error wins; remaining ties go to
/// the lexicographically first word (H < S < Sdg < T < Tdg). Results are
/// cached. Throws SearchExhausted when nothing of length <= max_length
/// qualifies.
RzApproximation approx_rz(double theta, double eps = kDefaultSynthesisEps,
                          std::size_t max_length = kMaxSynthesisLength);
/// Smallest error reachable with words of length <= max_length.
double best_rz_error(double theta, std::size_t max_length);
/// min over phi of max-abs |u - e^{i phi} Rz(theta)|.
double rz_distance(const ComplexMatrix &u, double theta);
/// Product of a time-ordered gate word.
ComplexMatrix sequence_matrix(std::span<const GateKind> seq);

/// Controlled-Rz(theta) as [Rz(theta/2)@t][CNOT][Rz(-theta/2)@t][CNOT] on
/// `n` qubits (n = 0 picks the smallest width). Throws DuplicateIndex.
Circuit lower_controlled_rz(double theta, std::size_t control, std::size_t target, std::size_t n = 0);

/// Rewrites Rz/Rx gates into Clifford+T words, splitting each cycle into as
/// many sub-cycles as its longest word. `eps` is relaxed by 25% steps (up to
/// `max_eps`) for angles the bounded search cannot reach.
Circuit lower_to_clifford_t(const Circuit &circ, double eps = kDefaultSynthesisEps, double max_eps = 0.1);

/// Inserts an empty cycle between every pair of adjacent hard cycles.
Circuit interleave_idle(const Circuit &circ);
bool is_interleaved(const Circuit &circ);

/// Pauli-frame randomization of every easy cycle with the compensating
/// correction folded into the next easy cycle. Qubits about to enter a T,
/// Tdg or Rz gate only draw from {I, Z}, Rx from {I, X}; Toffoli qubits and
/// the final easy cycle are not randomized. Throws NotInterleaved.
Circuit randomized_compile(const Circuit &circ, Seed seed);

}  // namespace qnoise
