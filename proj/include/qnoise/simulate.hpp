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

#include "qnoise/circuit.hpp"
#include "qnoise/noise.hpp"
#include "qnoise/rng.hpp"

namespace qnoise {

/// Runs the circuit on `input`, applying `noise` to every qubit after each
/// cycle. With `rc` the circuit is first randomly compiled using `seed`.
/// Throws WidthMismatch, or NotInterleaved when rc is requested on a circuit
/// with adjacent hard cycles.
DensityMatrix simulate(const Circuit &circ, const DensityMatrix &input, const NoiseModel &noise,
                       bool rc = false, Seed seed = 0);

/// Noisy evolution of an already prepared circuit (no compilation step).
void run_noisy(const Circuit &circ, DensityMatrix &rho, const NoiseModel &noise);

}  // namespace qnoise
