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


#include "qnoise/compile.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <tuple>
#include <unordered_set>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------------------
// Euler angles

double wrap_angle(double a) {
  a = std::remainder(a, 2 * kPi);
  return a;
}

// ---------------------------------------------------------------------------
// Word enumeration for Rz synthesis

using Mat2 = std::array<Complex, 4>;

constexpr std::array<GateKind, 5> kAlphabet = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T,
                                               GateKind::Tdg};

Mat2 mul(const Mat2 &a, const Mat2 &b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat2 to_mat2(const ComplexMatrix &m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

// Phase-normalized, rounded entries; equal keys mean equal up to phase.
struct PhaseKey {
  std::array<long long, 8> v;
  bool operator==(const PhaseKey &) const = default;
};

struct PhaseKeyHash {
  std::size_t operator()(const PhaseKey &k) const {
    std::uint64_t h = 0;
    for (long long x : k.v) h = splitmix64(h ^ static_cast<std::uint64_t>(x));
    return h;
  }
};

PhaseKey phase_key(const Mat2 &u) {
  const Complex pivot = std::abs(u[0]) > 1e-6 ? u[0] : u[1];
  const Complex ph = std::conj(pivot) / std::abs(pivot);
  PhaseKey k{};
  for (int i = 0; i < 4; ++i) {
    const Complex y = u[i] * ph;
    k.v[2 * i] = std::llround(y.real() * 1e8);
    k.v[2 * i + 1] = std::llround(y.imag() * 1e8);
  }
  return k;
}

double rz_distance(const Mat2 &u, double theta) {
  const Complex a = u[0] * std::polar(1.0, theta / 2);
  const Complex b = u[3] * std::polar(1.0, -theta / 2);
  const double r = std::abs(a);
  double d = std::abs(std::arg(a) - std::arg(b));
  if (d > kPi) d = 2 * kPi - d;
  const double diag = std::sqrt(std::max(0.0, r * r + 1 - 2 * r * std::cos(d / 2)));
  return std::max(std::abs(u[1]), diag);
}

// Breadth-first enumeration of distinct words (modulo phase) up to
// kMaxSynthesisLength. Nodes are stored in level order and, within a level,
// in lexicographic word order, so the first node reaching a unitary holds
// its lexicographically smallest shortest word.
struct WordTable {
  std::vector<Mat2> unitary;
  std::vector<std::uint32_t> parent;
  std::vector<std::uint8_t> last;
  std::vector<std::size_t> level_start;  // level L occupies [start[L], start[L+1])
  // Nodes with |u01| <= kNearDiagonal in level order; no other node can be
  // within that distance of a Z rotation.
  std::vector<std::uint32_t> near_diagonal;
  static constexpr double kNearDiagonal = 0.1;

  WordTable() {
    std::array<Mat2, kAlphabet.size()> gates;
    for (std::size_t g = 0; g < kAlphabet.size(); ++g) gates[g] = to_mat2(single_qubit_matrix(kAlphabet[g]));
    std::unordered_set<PhaseKey, PhaseKeyHash> seen;
    unitary.push_back({1.0, 0.0, 0.0, 1.0});
    parent.push_back(0);
    last.push_back(0);
    seen.insert(phase_key(unitary[0]));
    level_start = {0, 1};
    for (std::size_t len = 1; len <= kMaxSynthesisLength; ++len) {
      const std::size_t lo = level_start[len - 1], hi = level_start[len];
      for (std::size_t p = lo; p < hi; ++p) {
        for (std::size_t g = 0; g < gates.size(); ++g) {
          const Mat2 u = mul(gates[g], unitary[p]);
          if (!seen.insert(phase_key(u)).second) continue;
          unitary.push_back(u);
          parent.push_back(static_cast<std::uint32_t>(p));
          last.push_back(static_cast<std::uint8_t>(g));
        }
      }
      level_start.push_back(unitary.size());
    }
    for (std::size_t i = 0; i < unitary.size(); ++i)
      if (std::abs(unitary[i][1]) <= kNearDiagonal) near_diagonal.push_back(static_cast<std::uint32_t>(i));
  }

  std::vector<GateKind> word(std::size_t node) const {
    std::vector<GateKind> w;
    while (node != 0) {
      w.push_back(kAlphabet[last[node]]);
      node = parent[node];
    }
    std::reverse(w.begin(), w.end());
    return w;
  }
};

const WordTable &word_table() {
  static const WordTable table;
  return table;
}

// ---------------------------------------------------------------------------
// Pauli frames for randomized compiling

struct Frame {
  bool x = false;
  bool z = false;
};

// Easy single-qubit elements X^x Z^z S^s up to phase.
struct EasyElement {
  bool x = false, z = false, s = false;
};

EasyElement to_easy(const Gate *g) {
  if (!g) return {};
  switch (g->kind) {
    case GateKind::I:
      return {};
    case GateKind::X:
      return {true, false, false};
    case GateKind::Y:
      return {true, true, false};
    case GateKind::Z:
      return {false, true, false};
    case GateKind::S:
      return {false, false, true};
    case GateKind::Sdg:
      return {false, true, true};
    case GateKind::XS:
      return {true, false, true};
    case GateKind::YS:
      return {true, true, true};
    default:
      throw std::logic_error("to_easy: not an easy gate");
  }
}

GateKind from_easy(EasyElement e) {
  if (!e.s) {
    if (e.x) return e.z ? GateKind::Y : GateKind::X;
    return e.z ? GateKind::Z : GateKind::I;
  }
  if (e.x) return e.z ? GateKind::YS : GateKind::XS;
  return e.z ? GateKind::Sdg : GateKind::S;
}

// Conjugation of a Pauli through S: X -> Y, Z -> Z.
Frame through_s(Frame f) { return {f.x, f.z != f.x}; }

// R * e * P for Paulis R, P and easy element e, up to phase.
EasyElement dress(EasyElement e, Frame r, Frame p) {
  if (e.s) p = through_s(p);
  return {(e.x != p.x) != r.x, (e.z != p.z) != r.z, e.s};
}

enum class Twirl { Full, ZOnly, XOnly, None };

Twirl twirl_for(const Gate *g) {
  if (!g) return Twirl::Full;
  switch (g->kind) {
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::Rz:
      return Twirl::ZOnly;
    case GateKind::Rx:
      return Twirl::XOnly;
    case GateKind::Toffoli:
      return Twirl::None;
    default:
      return Twirl::Full;
  }
}

// Propagate the frame on every qubit through a cycle: F -> C F C^dagger.
void conjugate_through(const Cycle &c, std::vector<Frame> &frame) {
  for (const auto &g : c.gates()) {
    const std::size_t q = g.qubits[0];
    switch (g.kind) {
      case GateKind::H:
        std::swap(frame[q].x, frame[q].z);
        break;
      case GateKind::S:
      case GateKind::Sdg:
      case GateKind::XS:
      case GateKind::YS:
        frame[q] = through_s(frame[q]);
        break;
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::Rz:
        if (frame[q].x) throw std::logic_error("randomized_compile: X frame before a Z rotation");
        break;
      case GateKind::Rx:
        if (frame[q].z) throw std::logic_error("randomized_compile: Z frame before an X rotation");
        break;
      case GateKind::CNOT: {
        const std::size_t t = g.qubits[1];
        frame[t].x = frame[t].x != frame[q].x;
        frame[q].z = frame[q].z != frame[t].z;
        break;
      }
      case GateKind::Toffoli:
        for (std::size_t k : g.qubits)
          if (frame[k].x || frame[k].z) throw std::logic_error("randomized_compile: frame on a Toffoli");
        break;
      default:
        break;  // Paulis commute with the frame up to sign.
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

EulerAngles euler_decompose(const ComplexMatrix &u) {
  if (u.dim() != 2 || !is_unitary(u, 1e-9)) throw NotUnitary("euler_decompose expects a 2x2 unitary");
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  const Complex inv_phase = std::polar(1.0, -std::arg(det) / 2);
  const Complex v00 = u(0, 0) * inv_phase, v10 = u(1, 0) * inv_phase, v11 = u(1, 1) * inv_phase;
  const double gamma = 2 * std::atan2(std::abs(v10), std::abs(v00));
  const double sum = std::abs(v11) > 1e-12 ? 2 * std::arg(v11) : 0.0;
  const double diff = std::abs(v10) > 1e-12 ? 2 * (std::arg(v10) + kPi / 2) : 0.0;
  return {wrap_angle((sum + diff) / 2), gamma, wrap_angle((sum - diff) / 2)};
}

ComplexMatrix euler_compose(const EulerAngles &a) {
  const ComplexMatrix h = single_qubit_matrix(GateKind::H);
  return rz_matrix(a.beta) * h * rz_matrix(a.gamma) * h * rz_matrix(a.delta);
}

double rz_distance(const ComplexMatrix &u, double theta) {
  if (u.dim() != 2) throw DimMismatch("rz_distance expects a 2x2 matrix");
  return rz_distance(to_mat2(u), theta);
}

ComplexMatrix sequence_matrix(std::span<const GateKind> seq) {
  ComplexMatrix u = ComplexMatrix::identity(2);
  for (GateKind g : seq) u = single_qubit_matrix(g) * u;
  return u;
}

double best_rz_error(double theta, std::size_t max_length) {
  const WordTable &t = word_table();
  const std::size_t end = t.level_start[std::min(max_length, kMaxSynthesisLength) + 1];
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < end; ++i) best = std::min(best, rz_distance(t.unitary[i], theta));
  return best;
}

RzApproximation approx_rz(double theta, double eps, std::size_t max_length) {
  if (!(eps >= 1e-4)) throw std::invalid_argument("approx_rz: eps must be >= 1e-4");
  if (!std::isfinite(theta)) throw std::invalid_argument("approx_rz: theta must be finite");
  max_length = std::min(max_length, kMaxSynthesisLength);

  static std::mutex mu;
  static std::map<std::tuple<double, double, std::size_t>, RzApproximation> cache;
  const auto key = std::make_tuple(theta, eps, max_length);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  const WordTable &t = word_table();
  const std::size_t end = t.level_start[max_length + 1];
  auto result = [&](std::size_t node, double err) {
    RzApproximation out{t.word(node), err};
    std::lock_guard lock(mu);
    cache.emplace(key, out);
    return out;
  };
  // Nodes are in level order, so the first level with a hit is the shortest.
  auto scan = [&](auto &&node_at, std::size_t count) -> std::optional<RzApproximation> {
    std::size_t best_node = 0, best_level = 0;
    double best_err = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t i = node_at(k);
      if (i >= end) break;
      if (best_err <= eps && i >= t.level_start[best_level + 1]) break;
      const double e = rz_distance(t.unitary[i], theta);
      if (e <= eps && e < best_err) {
        best_err = e;
        best_node = i;
        best_level = static_cast<std::size_t>(
            std::upper_bound(t.level_start.begin(), t.level_start.end(), i) - t.level_start.begin() - 1);
      }
    }
    if (best_err <= eps) return result(best_node, best_err);
    return std::nullopt;
  };
  const auto found = eps <= WordTable::kNearDiagonal
                         ? scan([&](std::size_t k) { return std::size_t{t.near_diagonal[k]}; }, t.near_diagonal.size())
                         : scan([](std::size_t k) { return k; }, t.unitary.size());
  if (found) return *found;
  throw SearchExhausted("no word of length <= " + std::to_string(max_length) + " approximates Rz(" +
                        std::to_string(theta) + ") within " + std::to_string(eps));
}

Circuit lower_controlled_rz(double theta, std::size_t control, std::size_t target, std::size_t n) {
  if (control == target) throw DuplicateIndex("lower_controlled_rz: control equals target");
  if (n == 0) n = std::max(control, target) + 1;
  Circuit out(n, GateSet::ParamRotations);
  out.append(Cycle(n, {Gate::rz(theta / 2, target)}));
  out.append(Cycle(n, {Gate::cnot(control, target)}));
  out.append(Cycle(n, {Gate::rz(-theta / 2, target)}));
  out.append(Cycle(n, {Gate::cnot(control, target)}));
  return out;
}

Circuit lower_to_clifford_t(const Circuit &circ, double eps, double max_eps) {
  auto rz_word = [&](double theta) {
    for (double e = eps;; e *= 1.25) {
      try {
        return approx_rz(theta, std::min(e, max_eps)).sequence;
      } catch (const SearchExhausted &) {
        if (e >= max_eps) throw;
      }
    }
  };

  const std::size_t n = circ.n_qubits();
  Circuit out(n, GateSet::CliffordT);
  for (const auto &cycle : circ.cycles()) {
    std::vector<std::vector<Gate>> lanes(n);
    std::vector<Gate> multi;
    for (const auto &g : cycle.gates()) {
      const std::size_t q = g.qubits[0];
      auto push_word = [&](const std::vector<GateKind> &w) {
        for (GateKind k : w) lanes[q].push_back(Gate::single(k, q));
      };
      if (g.kind == GateKind::Rz) {
        push_word(rz_word(g.angle));
      } else if (g.kind == GateKind::Rx) {
        const EulerAngles a = euler_decompose(rx_matrix(g.angle));
        push_word(rz_word(a.delta));
        lanes[q].push_back(Gate::single(GateKind::H, q));
        push_word(rz_word(a.gamma));
        lanes[q].push_back(Gate::single(GateKind::H, q));
        push_word(rz_word(a.beta));
      } else if (gate_arity(g.kind) == 1) {
        lanes[q].push_back(g);
      } else {
        multi.push_back(g);
      }
    }
    std::size_t depth = multi.empty() ? 0 : 1;
    for (const auto &l : lanes) depth = std::max(depth, l.size());
    if (depth == 0) {
      out.append(Cycle(n));
      continue;
    }
    for (std::size_t k = 0; k < depth; ++k) {
      Cycle c(n);
      if (k == 0)
        for (const auto &g : multi) c.add(g);
      for (std::size_t q = 0; q < n; ++q)
        if (k < lanes[q].size()) c.add(lanes[q][k]);
      out.append(std::move(c));
    }
  }
  return out;
}

Circuit interleave_idle(const Circuit &circ) {
  Circuit out(circ.n_qubits(), circ.gate_set());
  bool prev_hard = false;
  for (const auto &c : circ.cycles()) {
    const bool hard = c.has_hard_gate();
    if (hard && prev_hard) out.append(Cycle(circ.n_qubits()));
    out.append(c);
    prev_hard = hard;
  }
  return out;
}

bool is_interleaved(const Circuit &circ) {
  for (std::size_t i = 1; i < circ.depth(); ++i)
    if (circ[i - 1].has_hard_gate() && circ[i].has_hard_gate()) return false;
  return true;
}

Circuit randomized_compile(const Circuit &circ, Seed seed) {
  for (std::size_t i = 1; i < circ.depth(); ++i) {
    if (circ[i - 1].has_hard_gate() && circ[i].has_hard_gate()) {
      throw NotInterleaved("hard cycles " + std::to_string(i - 1) + " and " + std::to_string(i) + " are adjacent");
    }
  }
  const std::size_t n = circ.n_qubits();
  std::size_t last_easy = circ.depth();
  for (std::size_t i = 0; i < circ.depth(); ++i)
    if (!circ[i].has_hard_gate()) last_easy = i;

  Rng rng(seed);
  std::vector<Frame> pending(n);
  Circuit out(n, circ.gate_set());
  for (std::size_t i = 0; i < circ.depth(); ++i) {
    const Cycle &c = circ[i];
    if (c.has_hard_gate()) {
      conjugate_through(c, pending);
      out.append(c);
      continue;
    }
    const Cycle *next = i + 1 < circ.depth() && circ[i + 1].has_hard_gate() ? &circ[i + 1] : nullptr;
    Cycle dressed(n);
    for (std::size_t q = 0; q < n; ++q) {
      // Two random bits per qubit are always consumed, so the stream does
      // not depend on which qubits are restricted.
      const std::uint64_t bits = rng();
      Frame r{(bits & 1) != 0, (bits & 2) != 0};
      const Twirl tw = i == last_easy ? Twirl::None : twirl_for(next ? next->gate_on(q) : nullptr);
      if (tw == Twirl::ZOnly || tw == Twirl::None) r.x = false;
      if (tw == Twirl::XOnly || tw == Twirl::None) r.z = false;
      const GateKind k = from_easy(dress(to_easy(c.gate_on(q)), r, pending[q]));
      if (k != GateKind::I) dressed.add(Gate::single(k, q));
      pending[q] = r;
    }
    out.append(std::move(dressed));
  }
  return out;
}

}  // namespace qnoise
