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

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qnoise/state.hpp"

namespace qnoise {

enum class Axis { X, Z };

struct NoNoise {};
struct PauliNoise {
  double ex = 0, ey = 0, ez = 0;
};
/// Conjugation by e^{i theta P} for P in {X, Z}.
struct CoherentNoise {
  Axis axis = Axis::Z;
  double theta = 0;
};
/// Coherent X rotation followed by an X-flip channel with probability ex.
struct PauliPlusCoherentNoise {
  double ex = 0;
  double theta = 0;
};
struct AmplitudeDampingNoise {
  double gamma = 0;
};
/// Z-flip channel with probability lambda.
struct PhaseDampingNoise {
  double lambda = 0;
};

using NoiseModel = std::variant<NoNoise, PauliNoise, CoherentNoise, PauliPlusCoherentNoise,
                                AmplitudeDampingNoise, PhaseDampingNoise>;

enum class NoiseKind { None, Pauli, Coherent, PauliPlusCoherent, AmplitudeDamping, PhaseDamping };

NoiseKind noise_kind(const NoiseModel &m);
std::string_view noise_kind_name(NoiseKind k);
std::optional<NoiseKind> parse_noise_kind(std::string_view name);
std::string describe(const NoiseModel &m);

/// Symmetric depolarizing split of a total error rate.
PauliNoise symmetric_pauli(double total);

/// Throws InvalidParams on probabilities outside [0,1] or ex+ey+ez > 1.
void validate(const NoiseModel &m);
/// Single-qubit superoperator for the channel. Validates first.
SingleQubitMap channel_map(const NoiseModel &m);
/// Channel applied to one qubit of rho. Throws IndexOutOfRange.
DensityMatrix apply_channel(const DensityMatrix &rho, const NoiseModel &m, std::size_t qubit);
bool is_identity_channel(const NoiseModel &m);

/// Tabulated noise levels 0..3. Throws UnknownLevel.
NoiseModel noise_level_table(NoiseKind kind, int level);
/// Model for a continuous sweep parameter: total Pauli rate, coherent Z angle,
/// Pauli+coherent X rate (angle scaled to keep the tabulated pairing),
/// damping probability.
NoiseModel noise_from_param(NoiseKind kind, double param);
/// Scalar sweep coordinate of a model (inverse of noise_from_param).
double noise_param(const NoiseModel &m);

}  // namespace qnoise
