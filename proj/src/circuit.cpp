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


#include "qnoise/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

constexpr std::array<std::string_view, 15> kNames = {
    "I", "X", "Y", "Z", "H", "S", "Sdg", "T", "Tdg", "XS", "YS", "Rz", "Rx", "CNOT", "Toffoli"};

void check_distinct(const std::vector<std::size_t> &qs) {
  for (std::size_t i = 0; i < qs.size(); ++i)
    for (std::size_t j = i + 1; j < qs.size(); ++j)
      if (qs[i] == qs[j]) throw DuplicateIndex("qubit " + std::to_string(qs[i]) + " repeated in gate");
}

std::string format_angle(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> parse_gate_kind(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return static_cast<GateKind>(i);
  return std::nullopt;
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
      return 2;
    case GateKind::Toffoli:
      return 3;
    default:
      return 1;
  }
}

bool is_parametric(GateKind kind) { return kind == GateKind::Rz || kind == GateKind::Rx; }

bool is_hard(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
    case GateKind::Rx:
    case GateKind::CNOT:
    case GateKind::Toffoli:
      return true;
    default:
      return false;
  }
}

Gate Gate::single(GateKind kind, std::size_t q) {
  if (gate_arity(kind) != 1 || is_parametric(kind)) {
    throw std::invalid_argument("Gate::single: " + std::string(gate_name(kind)) + " is not a fixed 1-qubit gate");
  }
  return Gate{kind, {q}, 0.0};
}

Gate Gate::rz(double theta, std::size_t q) { return Gate{GateKind::Rz, {q}, theta}; }
Gate Gate::rx(double theta, std::size_t q) { return Gate{GateKind::Rx, {q}, theta}; }

Gate Gate::cnot(std::size_t control, std::size_t target) {
  Gate g{GateKind::CNOT, {control, target}, 0.0};
  check_distinct(g.qubits);
  return g;
}

Gate Gate::toffoli(std::size_t c1, std::size_t c2, std::size_t target) {
  Gate g{GateKind::Toffoli, {c1, c2, target}, 0.0};
  check_distinct(g.qubits);
  return g;
}

std::string Gate::str() const {
  std::string s(gate_name(kind));
  if (is_parametric(kind)) s += "(" + format_angle(angle) + ")";
  s += "@";
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(qubits[i]);
  }
  return s;
}

ComplexMatrix rz_matrix(double theta) {
  return {{std::polar(1.0, -theta / 2), 0.0}, {0.0, std::polar(1.0, theta / 2)}};
}

ComplexMatrix rx_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return {{c, Complex(0, -s)}, {Complex(0, -s), c}};
}

ComplexMatrix pauli_matrix(char p) {
  switch (p) {
    case 'I':
      return ComplexMatrix::identity(2);
    case 'X':
      return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y':
      return {{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
    case 'Z':
      return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw std::invalid_argument(std::string("pauli_matrix: unknown Pauli ") + p);
}

ComplexMatrix single_qubit_matrix(GateKind kind, double angle) {
  const double r = 1.0 / std::numbers::sqrt2;
  const Complex i(0, 1);
  switch (kind) {
    case GateKind::I:
      return pauli_matrix('I');
    case GateKind::X:
      return pauli_matrix('X');
    case GateKind::Y:
      return pauli_matrix('Y');
    case GateKind::Z:
      return pauli_matrix('Z');
    case GateKind::H:
      return {{r, r}, {r, -r}};
    case GateKind::S:
      return {{1.0, 0.0}, {0.0, i}};
    case GateKind::Sdg:
      return {{1.0, 0.0}, {0.0, -i}};
    case GateKind::T:
      return {{1.0, 0.0}, {0.0, std::polar(1.0, std::numbers::pi / 4)}};
    case GateKind::Tdg:
      return {{1.0, 0.0}, {0.0, std::polar(1.0, -std::numbers::pi / 4)}};
    case GateKind::XS:
      return pauli_matrix('X') * single_qubit_matrix(GateKind::S);
    case GateKind::YS:
      return pauli_matrix('Y') * single_qubit_matrix(GateKind::S);
    case GateKind::Rz:
      return rz_matrix(angle);
    case GateKind::Rx:
      return rx_matrix(angle);
    default:
      break;
  }
  throw std::invalid_argument("single_qubit_matrix: " + std::string(gate_name(kind)) + " is multi-qubit");
}

ComplexMatrix gate_matrix(const Gate &g, std::size_t n) {
  for (std::size_t q : g.qubits) {
    if (q >= n) throw IndexOutOfRange("gate " + g.str() + " on " + std::to_string(n) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << n;
  auto bit = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };
  ComplexMatrix out(dim);
  if (gate_arity(g.kind) == 1) {
    const ComplexMatrix u = single_qubit_matrix(g.kind, g.angle);
    const std::size_t b = bit(g.qubits[0]);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) {
        if ((r & ~b) != (c & ~b)) continue;
        out(r, c) = u((r & b) ? 1 : 0, (c & b) ? 1 : 0);
      }
    return out;
  }
  std::size_t controls = 0;
  for (std::size_t k = 0; k + 1 < g.qubits.size(); ++k) controls |= bit(g.qubits[k]);
  const std::size_t t = bit(g.qubits.back());
  for (std::size_t c = 0; c < dim; ++c) out((c & controls) == controls ? c ^ t : c, c) = 1.0;
  return out;
}

Cycle::Cycle(std::size_t n_qubits) : n_qubits_(n_qubits), slot_(n_qubits, -1) {}

Cycle::Cycle(std::size_t n_qubits, std::vector<Gate> gates) : Cycle(n_qubits) {
  for (auto &g : gates) add(std::move(g));
}

Cycle &Cycle::add(Gate g) {
  if (g.qubits.size() != gate_arity(g.kind)) {
    throw std::invalid_argument("gate " + std::string(gate_name(g.kind)) + " has wrong qubit count");
  }
  check_distinct(g.qubits);
  for (std::size_t q : g.qubits) {
    if (q >= n_qubits_) throw IndexOutOfRange("gate " + g.str() + " exceeds cycle width " + std::to_string(n_qubits_));
    if (slot_[q] >= 0) throw DuplicateIndex("qubit " + std::to_string(q) + " already used in this cycle");
  }
  for (std::size_t q : g.qubits) slot_[q] = static_cast<int>(gates_.size());
  gates_.push_back(std::move(g));
  return *this;
}

const Gate *Cycle::gate_on(std::size_t q) const {
  if (q >= n_qubits_) throw IndexOutOfRange("gate_on: qubit " + std::to_string(q));
  return slot_[q] < 0 ? nullptr : &gates_[static_cast<std::size_t>(slot_[q])];
}

bool Cycle::has_hard_gate() const {
  return std::any_of(gates_.begin(), gates_.end(), [](const Gate &g) { return is_hard(g.kind); });
}

bool Cycle::operator==(const Cycle &other) const {
  return n_qubits_ == other.n_qubits_ && gates_ == other.gates_;
}

Circuit::Circuit(std::size_t n_qubits, GateSet gate_set) : n_qubits_(n_qubits), gate_set_(gate_set) {}

Circuit &Circuit::append(Cycle c) {
  if (c.n_qubits() != n_qubits_) {
    throw WidthMismatch("cycle width " + std::to_string(c.n_qubits()) + " vs circuit width " +
                        std::to_string(n_qubits_));
  }
  cycles_.push_back(std::move(c));
  return *this;
}

Circuit &Circuit::append(const Circuit &other) {
  for (const auto &c : other.cycles()) append(c);
  return *this;
}

bool Circuit::operator==(const Circuit &other) const {
  return n_qubits_ == other.n_qubits_ && gate_set_ == other.gate_set_ && cycles_ == other.cycles_;
}

ComplexMatrix cycle_unitary(const Cycle &c) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.n_qubits());
  for (const auto &g : c.gates()) u = gate_matrix(g, c.n_qubits()) * u;
  return u;
}

ComplexMatrix circuit_unitary(const Circuit &circ) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << circ.n_qubits());
  for (const auto &c : circ.cycles()) u = cycle_unitary(c) * u;
  return u;
}

void apply_cycle_in_place(DensityMatrix &rho, const Cycle &c) {
  if (rho.n_qubits() != c.n_qubits()) {
    throw WidthMismatch("state has " + std::to_string(rho.n_qubits()) + " qubits, cycle " +
                        std::to_string(c.n_qubits()));
  }
  for (const auto &g : c.gates()) {
    if (gate_arity(g.kind) == 1) {
      if (g.kind == GateKind::I) continue;
      rho.apply_map(SingleQubitMap::from_unitary(single_qubit_matrix(g.kind, g.angle)), g.qubits[0]);
    } else {
      rho.apply_controlled_x(std::span(g.qubits).first(g.qubits.size() - 1), g.qubits.back());
    }
  }
}

DensityMatrix apply_cycle(const DensityMatrix &rho, const Cycle &c) {
  DensityMatrix out = rho;
  apply_cycle_in_place(out, c);
  return out;
}

Ket apply_circuit(const Ket &psi, const Circuit &circ) {
  const std::size_t n = circ.n_qubits();
  if (psi.n_qubits() != n) throw WidthMismatch("ket width does not match circuit");
  std::vector<Complex> a(psi.amplitudes().begin(), psi.amplitudes().end());
  auto bit = [n](std::size_t q) { return std::size_t{1} << (n - 1 - q); };
  for (const auto &cyc : circ.cycles()) {
    for (const auto &g : cyc.gates()) {
      if (g.kind == GateKind::I) continue;
      if (gate_arity(g.kind) == 1) {
        const ComplexMatrix u = single_qubit_matrix(g.kind, g.angle);
        const std::size_t b = bit(g.qubits[0]);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (i & b) continue;
          const Complex x0 = a[i], x1 = a[i | b];
          a[i] = u(0, 0) * x0 + u(0, 1) * x1;
          a[i | b] = u(1, 0) * x0 + u(1, 1) * x1;
        }
      } else {
        std::size_t controls = 0;
        for (std::size_t k = 0; k + 1 < g.qubits.size(); ++k) controls |= bit(g.qubits[k]);
        const std::size_t t = bit(g.qubits.back());
        for (std::size_t i = 0; i < a.size(); ++i)
          if (!(i & t) && (i & controls) == controls) std::swap(a[i], a[i | t]);
      }
    }
  }
  return Ket(std::move(a));
}

Circuit toffoli_decomposition(std::size_t c1, std::size_t c2, std::size_t target, std::size_t n) {
  check_distinct({c1, c2, target});
  for (std::size_t q : {c1, c2, target})
    if (q >= n) throw IndexOutOfRange("toffoli_decomposition: qubit " + std::to_string(q));
  const std::size_t a = c1, b = c2, c = target;
  using K = GateKind;
  Circuit out(n, GateSet::CliffordT);
  auto cyc = [&](std::vector<Gate> gates) { out.append(Cycle(n, std::move(gates))); };
  cyc({Gate::single(K::H, c)});
  cyc({Gate::cnot(b, c)});
  cyc({Gate::single(K::Tdg, c)});
  cyc({Gate::cnot(a, c)});
  cyc({Gate::single(K::T, c)});
  cyc({Gate::cnot(b, c)});
  cyc({Gate::single(K::Tdg, c)});
  cyc({Gate::cnot(a, c)});
  cyc({Gate::single(K::T, b), Gate::single(K::T, c)});
  cyc({Gate::single(K::H, c), Gate::cnot(a, b)});
  cyc({Gate::single(K::T, a), Gate::single(K::Tdg, b)});
  cyc({Gate::cnot(a, b)});
  return out;
}

}  // namespace qnoise
