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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnoise/linalg.hpp"
#include "qnoise/state.hpp"

namespace qnoise {

// XS and YS are the fused Pauli-times-phase gates (X*S, Y*S) that randomized
// compiling produces when it dresses an S cycle.
enum class GateKind { I, X, Y, Z, H, S, Sdg, T, Tdg, XS, YS, Rz, Rx, CNOT, Toffoli };

std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool is_parametric(GateKind kind);
/// Hard gates in the randomized-compiling partition. Rotations and Toffoli
/// count as hard since no Pauli frame passes through them.
bool is_hard(GateKind kind);

struct Gate {
  GateKind kind = GateKind::I;
  std::vector<std::size_t> qubits;
  double angle = 0.0;

  static Gate single(GateKind kind, std::size_t q);
  static Gate rz(double theta, std::size_t q);
  static Gate rx(double theta, std::size_t q);
  static Gate cnot(std::size_t control, std::size_t target);
  static Gate toffoli(std::size_t c1, std::size_t c2, std::size_t target);

  std::string str() const;
  bool operator==(const Gate &) const = default;
};

/// Rz(t) = diag(e^{-it/2}, e^{it/2}).
ComplexMatrix rz_matrix(double theta);
/// Rx(t) = exp(-i t X / 2).
ComplexMatrix rx_matrix(double theta);
ComplexMatrix pauli_matrix(char p);
/// 2x2 matrix of a single-qubit gate.
ComplexMatrix single_qubit_matrix(GateKind kind, double angle = 0.0);
/// Full 2^n unitary with the gate embedded on its qubits.
ComplexMatrix gate_matrix(const Gate &g, std::size_t n);

class Cycle {
 public:
  explicit Cycle(std::size_t n_qubits);
  Cycle(std::size_t n_qubits, std::vector<Gate> gates);

  /// Throws IndexOutOfRange, or DuplicateIndex if a qubit is already used.
  Cycle &add(Gate g);

  std::size_t n_qubits() const { return n_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }
  bool empty() const { return gates_.empty(); }
  /// Gate touching qubit q, or nullptr when q idles.
  const Gate *gate_on(std::size_t q) const;
  bool has_hard_gate() const;
  bool operator==(const Cycle &other) const;

 private:
  std::size_t n_qubits_;
  std::vector<Gate> gates_;
  std::vector<int> slot_;
};

enum class GateSet { ParamRotations, CliffordT };

class Circuit {
 public:
  explicit Circuit(std::size_t n_qubits, GateSet gate_set = GateSet::CliffordT);

  /// Throws WidthMismatch.
  Circuit &append(Cycle c);
  Circuit &append(const Circuit &other);

  std::size_t n_qubits() const { return n_qubits_; }
  std::size_t depth() const { return cycles_.size(); }
  GateSet gate_set() const { return gate_set_; }
  void set_gate_set(GateSet g) { gate_set_ = g; }
  const std::vector<Cycle> &cycles() const { return cycles_; }
  const Cycle &operator[](std::size_t i) const { return cycles_[i]; }
  bool operator==(const Circuit &other) const;

 private:
  std::size_t n_qubits_;
  GateSet gate_set_;
  std::vector<Cycle> cycles_;
};

ComplexMatrix cycle_unitary(const Cycle &c);
ComplexMatrix circuit_unitary(const Circuit &circ);

/// rho -> U_c rho U_c^dagger. Throws WidthMismatch.
DensityMatrix apply_cycle(const DensityMatrix &rho, const Cycle &c);
void apply_cycle_in_place(DensityMatrix &rho, const Cycle &c);
Ket apply_circuit(const Ket &psi, const Circuit &circ);

/// Six-CNOT, seven-T network over {H, T, Tdg, CNOT} on `n` qubits.
Circuit toffoli_decomposition(std::size_t c1, std::size_t c2, std::size_t target,
                              std::size_t n = 3);

/// Text form: a `qubits N` header, then one cycle per line with
/// space-separated `NAME(args)@q[,q...]` tokens. Argument-free gates drop the
/// parentheses, an empty cycle is written `-`, and `#` starts a comment.
std::string to_text(const Circuit &circ);
/// Throws CircuitParseError.
Circuit from_text(std::string_view text);

}  // namespace qnoise
