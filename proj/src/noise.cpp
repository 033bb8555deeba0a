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


#include "qnoise/noise.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qnoise/circuit.hpp"
#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

constexpr std::array<std::string_view, 6> kKindNames = {
    "none", "pauli", "coherent", "pauli_coherent", "amplitude_damping", "phase_damping"};

// Pauli+coherent levels pair the X rate with the coherent angle linearly.
constexpr double kPauliCoherentAnglePerRate = (std::numbers::pi / 30) / 0.01;

void check_probability(double p, const char *what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParams(std::string(what) + " = " + std::to_string(p) + " is outside [0, 1]");
  }
}

void check_angle(double t) {
  if (!std::isfinite(t)) throw InvalidParams("rotation angle must be finite");
}

ComplexMatrix exp_i_pauli(Axis axis, double theta) {
  const ComplexMatrix p = pauli_matrix(axis == Axis::X ? 'X' : 'Z');
  return ComplexMatrix::identity(2) * Complex(std::cos(theta)) + p * Complex(0, std::sin(theta));
}

SingleQubitMap pauli_map(double ex, double ey, double ez) {
  const double probs[] = {1.0 - ex - ey - ez, ex, ey, ez};
  const ComplexMatrix ops[] = {pauli_matrix('I'), pauli_matrix('X'), pauli_matrix('Y'),
                               pauli_matrix('Z')};
  return SingleQubitMap::from_mixture(probs, ops);
}

}  // namespace

NoiseKind noise_kind(const NoiseModel &m) { return static_cast<NoiseKind>(m.index()); }

std::string_view noise_kind_name(NoiseKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<NoiseKind> parse_noise_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<NoiseKind>(i);
  return std::nullopt;
}

std::string describe(const NoiseModel &m) {
  char buf[160];
  std::visit(
      [&](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NoNoise>) {
          std::snprintf(buf, sizeof buf, "none");
        } else if constexpr (std::is_same_v<T, PauliNoise>) {
          std::snprintf(buf, sizeof buf, "pauli(ex=%g, ey=%g, ez=%g)", v.ex, v.ey, v.ez);
        } else if constexpr (std::is_same_v<T, CoherentNoise>) {
          std::snprintf(buf, sizeof buf, "coherent(axis=%c, theta=%g)", v.axis == Axis::X ? 'X' : 'Z', v.theta);
        } else if constexpr (std::is_same_v<T, PauliPlusCoherentNoise>) {
          std::snprintf(buf, sizeof buf, "pauli_coherent(ex=%g, theta=%g)", v.ex, v.theta);
        } else if constexpr (std::is_same_v<T, AmplitudeDampingNoise>) {
          std::snprintf(buf, sizeof buf, "amplitude_damping(gamma=%g)", v.gamma);
        } else {
          std::snprintf(buf, sizeof buf, "phase_damping(lambda=%g)", v.lambda);
        }
      },
      m);
  return buf;
}

PauliNoise symmetric_pauli(double total) { return {total / 3, total / 3, total / 3}; }

void validate(const NoiseModel &m) {
  std::visit(
      [](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PauliNoise>) {
          check_probability(v.ex, "ex");
          check_probability(v.ey, "ey");
          check_probability(v.ez, "ez");
          if (v.ex + v.ey + v.ez > 1.0 + 1e-12) throw InvalidParams("ex + ey + ez exceeds 1");
        } else if constexpr (std::is_same_v<T, CoherentNoise>) {
          check_angle(v.theta);
        } else if constexpr (std::is_same_v<T, PauliPlusCoherentNoise>) {
          check_probability(v.ex, "ex");
          check_angle(v.theta);
        } else if constexpr (std::is_same_v<T, AmplitudeDampingNoise>) {
          check_probability(v.gamma, "gamma");
        } else if constexpr (std::is_same_v<T, PhaseDampingNoise>) {
          check_probability(v.lambda, "lambda");
        }
      },
      m);
}

SingleQubitMap channel_map(const NoiseModel &m) {
  validate(m);
  return std::visit(
      [](const auto &v) -> SingleQubitMap {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NoNoise>) {
          return SingleQubitMap::identity();
        } else if constexpr (std::is_same_v<T, PauliNoise>) {
          return pauli_map(v.ex, v.ey, v.ez);
        } else if constexpr (std::is_same_v<T, CoherentNoise>) {
          return SingleQubitMap::from_unitary(exp_i_pauli(v.axis, v.theta));
        } else if constexpr (std::is_same_v<T, PauliPlusCoherentNoise>) {
          return pauli_map(v.ex, 0, 0).after(SingleQubitMap::from_unitary(exp_i_pauli(Axis::X, v.theta)));
        } else if constexpr (std::is_same_v<T, AmplitudeDampingNoise>) {
          const ComplexMatrix kraus[] = {{{1.0, 0.0}, {0.0, std::sqrt(1.0 - v.gamma)}},
                                         {{0.0, std::sqrt(v.gamma)}, {0.0, 0.0}}};
          return SingleQubitMap::from_kraus(kraus);
        } else {
          return pauli_map(0, 0, v.lambda);
        }
      },
      m);
}

DensityMatrix apply_channel(const DensityMatrix &rho, const NoiseModel &m, std::size_t qubit) {
  DensityMatrix out = rho;
  out.apply_map(channel_map(m), qubit);
  return out;
}

bool is_identity_channel(const NoiseModel &m) {
  return std::visit(
      [](const auto &v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NoNoise>) {
          return true;
        } else if constexpr (std::is_same_v<T, PauliNoise>) {
          return v.ex == 0 && v.ey == 0 && v.ez == 0;
        } else if constexpr (std::is_same_v<T, CoherentNoise>) {
          return v.theta == 0;
        } else if constexpr (std::is_same_v<T, PauliPlusCoherentNoise>) {
          return v.ex == 0 && v.theta == 0;
        } else if constexpr (std::is_same_v<T, AmplitudeDampingNoise>) {
          return v.gamma == 0;
        } else {
          return v.lambda == 0;
        }
      },
      m);
}

NoiseModel noise_level_table(NoiseKind kind, int level) {
  if (level < 0 || level > 3) throw UnknownLevel("noise level " + std::to_string(level) + " not in {0,1,2,3}");
  if (level == 0) return noise_from_param(kind, 0.0);
  const double rate = 0.01 * level;
  const double angle = level * std::numbers::pi / 30;
  switch (kind) {
    case NoiseKind::None:
      return NoNoise{};
    case NoiseKind::Pauli:
      return symmetric_pauli(rate);
    case NoiseKind::Coherent:
      return CoherentNoise{Axis::Z, angle};
    case NoiseKind::PauliPlusCoherent:
      return PauliPlusCoherentNoise{rate, angle};
    case NoiseKind::AmplitudeDamping:
      return AmplitudeDampingNoise{rate};
    case NoiseKind::PhaseDamping:
      return PhaseDampingNoise{rate};
  }
  throw UnknownLevel("unknown noise kind");
}

NoiseModel noise_from_param(NoiseKind kind, double param) {
  NoiseModel m;
  switch (kind) {
    case NoiseKind::None:
      m = NoNoise{};
      break;
    case NoiseKind::Pauli:
      m = symmetric_pauli(param);
      break;
    case NoiseKind::Coherent:
      m = CoherentNoise{Axis::Z, param};
      break;
    case NoiseKind::PauliPlusCoherent:
      m = PauliPlusCoherentNoise{param, param * kPauliCoherentAnglePerRate};
      break;
    case NoiseKind::AmplitudeDamping:
      m = AmplitudeDampingNoise{param};
      break;
    case NoiseKind::PhaseDamping:
      m = PhaseDampingNoise{param};
      break;
  }
  validate(m);
  return m;
}

double noise_param(const NoiseModel &m) {
  return std::visit(
      [](const auto &v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NoNoise>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, PauliNoise>) {
          return v.ex + v.ey + v.ez;
        } else if constexpr (std::is_same_v<T, CoherentNoise>) {
          return v.theta;
        } else if constexpr (std::is_same_v<T, PauliPlusCoherentNoise>) {
          return v.ex;
        } else if constexpr (std::is_same_v<T, AmplitudeDampingNoise>) {
          return v.gamma;
        } else {
          return v.lambda;
        }
      },
      m);
}

}  // namespace qnoise
