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


#include "qnoise/simulate.hpp"

#include "qnoise/compile.hpp"
#include "qnoise/errors.hpp"

namespace qnoise {

void run_noisy(const Circuit &circ, DensityMatrix &rho, const NoiseModel &noise) {
  if (rho.n_qubits() != circ.n_qubits()) {
    throw WidthMismatch("state has " + std::to_string(rho.n_qubits()) + " qubits, circuit " +
                        std::to_string(circ.n_qubits()));
  }
  const SingleQubitMap noise_map = channel_map(noise);
  const bool noiseless = is_identity_channel(noise);
  const std::size_t n = circ.n_qubits();

  for (const auto &cycle : circ.cycles()) {
    // Permutation gates first; they act on qubits disjoint from the
    // single-qubit gates of the same cycle.
    for (const auto &g : cycle.gates()) {
      if (gate_arity(g.kind) > 1) {
        rho.apply_controlled_x(std::span(g.qubits).first(g.qubits.size() - 1), g.qubits.back());
      }
    }
    for (std::size_t q = 0; q < n; ++q) {
      const Gate *g = cycle.gate_on(q);
      const bool has_1q = g && gate_arity(g->kind) == 1 && g->kind != GateKind::I;
      if (!has_1q) {
        if (!noiseless) rho.apply_map(noise_map, q);
        continue;
      }
      const auto gate_map = SingleQubitMap::from_unitary(single_qubit_matrix(g->kind, g->angle));
      rho.apply_map(noiseless ? gate_map : noise_map.after(gate_map), q);
    }
  }
}

DensityMatrix simulate(const Circuit &circ, const DensityMatrix &input, const NoiseModel &noise, bool rc,
                       Seed seed) {
  DensityMatrix rho = input;
  if (rc) {
    run_noisy(randomized_compile(circ, seed), rho, noise);
  } else {
    run_noisy(circ, rho, noise);
  }
  return rho;
}

}  // namespace qnoise
