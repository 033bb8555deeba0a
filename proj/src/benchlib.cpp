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


#include "qnoise/benchlib.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numbers>

#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

constexpr std::array<BenchmarkSpec, 7> kSpecs = {{
    {BenchmarkId::Idle, "idle", 4, 2, 70, GateSet::CliffordT, Metric::ProcessFidelity},
    {BenchmarkId::Random, "random", 4, 2, 70, GateSet::CliffordT, Metric::ProcessFidelity},
    {BenchmarkId::Adder, "adder", 7, 0, 0, GateSet::CliffordT, Metric::ProcessFidelity},
    {BenchmarkId::Qft, "qft", 4, 0, 0, GateSet::ParamRotations, Metric::ProcessFidelity},
    {BenchmarkId::QftCT, "qft_ct", 4, 0, 0, GateSet::CliffordT, Metric::ProcessFidelity},
    {BenchmarkId::Qaoa, "qaoa", 8, 0, 0, GateSet::ParamRotations, Metric::ExpectationValue},
    {BenchmarkId::QaoaCT, "qaoa_ct", 8, 0, 0, GateSet::CliffordT, Metric::ExpectationValue},
}};

void append_toffoli(Circuit &circ, std::size_t c1, std::size_t c2, std::size_t t) {
  circ.append(toffoli_decomposition(c1, c2, t, circ.n_qubits()));
}

void append_cnot(Circuit &circ, std::size_t c, std::size_t t) {
  circ.append(Cycle(circ.n_qubits(), {Gate::cnot(c, t)}));
}

}  // namespace

std::span<const BenchmarkSpec> benchmark_specs() { return kSpecs; }

const BenchmarkSpec &benchmark_spec(BenchmarkId id) { return kSpecs[static_cast<std::size_t>(id)]; }

std::optional<BenchmarkId> parse_benchmark(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (const auto &s : kSpecs)
    if (s.name == lower) return s.id;
  return std::nullopt;
}

std::string_view metric_name(Metric m) {
  return m == Metric::ProcessFidelity ? "process_fidelity" : "maxcut_expectation";
}

MaxCutGraph hypercube_graph() {
  MaxCutGraph g{8, {}};
  for (std::size_t dim = 0; dim < 3; ++dim)
    for (std::size_t v = 0; v < 8; ++v)
      if (!((v >> dim) & 1)) g.edges.emplace_back(v, v | (std::size_t{1} << dim));
  return g;
}

std::size_t cut_value(const MaxCutGraph &g, std::uint64_t bits) {
  auto side = [&](std::size_t v) { return (bits >> (g.n_vertices - 1 - v)) & 1; };
  std::size_t cut = 0;
  for (const auto &[u, v] : g.edges) cut += side(u) != side(v);
  return cut;
}

double maxcut_expectation(std::span<const double> dist, const MaxCutGraph &g) {
  if (dist.size() != (std::size_t{1} << g.n_vertices)) {
    throw DimMismatch("maxcut_expectation: distribution has " + std::to_string(dist.size()) + " entries");
  }
  double e = 0;
  for (std::size_t x = 0; x < dist.size(); ++x) e += dist[x] * static_cast<double>(cut_value(g, x));
  return e;
}

Circuit build_idle(std::size_t n, std::size_t depth) {
  Circuit circ(n, GateSet::CliffordT);
  for (std::size_t d = 0; d < depth; ++d) {
    Cycle c(n);
    for (std::size_t q = 0; q < n; ++q) c.add(Gate::single(GateKind::I, q));
    circ.append(std::move(c));
  }
  return circ;
}

Circuit build_random(std::size_t n, std::size_t depth, Seed seed) {
  if (n < 2) throw std::invalid_argument("build_random: needs at least 2 qubits");
  constexpr std::array<GateKind, 5> kChoices = {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z, GateKind::H};
  Rng rng(seed);
  Circuit circ(n, GateSet::CliffordT);
  for (std::size_t d = 0; d < depth; ++d) {
    Cycle c(n);
    if (uniform01(rng) < 0.25) {
      const std::size_t control = uniform_index(rng, n);
      std::size_t target = uniform_index(rng, n - 1);
      if (target >= control) ++target;
      c.add(Gate::cnot(control, target));
    }
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t pick = uniform_index(rng, kChoices.size());
      if (!c.gate_on(q)) c.add(Gate::single(kChoices[pick], q));
    }
    circ.append(std::move(c));
  }
  return circ;
}

AdderLayout adder_layout(std::size_t bits) {
  if (bits == 0) throw std::invalid_argument("adder_layout: bits must be >= 1");
  AdderLayout l;
  for (std::size_t i = 0; i < bits; ++i) {
    l.c.push_back(3 * i);
    l.a.push_back(3 * i + 1);
    l.b.push_back(3 * i + 2);
  }
  l.b.push_back(3 * bits);
  l.n_qubits = 3 * bits + 1;
  return l;
}

Circuit build_adder(std::size_t bits) {
  const AdderLayout l = adder_layout(bits);
  Circuit circ(l.n_qubits, GateSet::CliffordT);
  auto carry_out = [&](std::size_t i) { return i + 1 < bits ? l.c[i + 1] : l.b[bits]; };
  auto carry = [&](std::size_t i) {
    append_toffoli(circ, l.a[i], l.b[i], carry_out(i));
    append_cnot(circ, l.a[i], l.b[i]);
    append_toffoli(circ, l.c[i], l.b[i], carry_out(i));
  };
  auto carry_dagger = [&](std::size_t i) {
    append_toffoli(circ, l.c[i], l.b[i], carry_out(i));
    append_cnot(circ, l.a[i], l.b[i]);
    append_toffoli(circ, l.a[i], l.b[i], carry_out(i));
  };
  auto sum = [&](std::size_t i) {
    append_cnot(circ, l.a[i], l.b[i]);
    append_cnot(circ, l.c[i], l.b[i]);
  };
  for (std::size_t i = 0; i < bits; ++i) carry(i);
  append_cnot(circ, l.a[bits - 1], l.b[bits - 1]);
  sum(bits - 1);
  for (std::size_t i = bits - 1; i-- > 0;) {
    carry_dagger(i);
    sum(i);
  }
  return circ;
}

Circuit build_qft(std::size_t n, GateSet gate_set, double eps) {
  if (n == 0) throw std::invalid_argument("build_qft: n must be >= 1");
  Circuit circ(n, GateSet::ParamRotations);
  for (std::size_t j = 0; j < n; ++j) {
    circ.append(Cycle(n, {Gate::single(GateKind::H, j)}));
    for (std::size_t k = j + 1; k < n; ++k) {
      // Controlled phase diag(1, 1, 1, e^{i phi}) = CRz(phi) (Rz(phi/2) on
      // the control), up to global phase.
      const double phi = std::numbers::pi / static_cast<double>(std::size_t{1} << (k - j));
      Circuit crz = lower_controlled_rz(phi, k, j, n);
      Cycle first(n, {Gate::rz(phi / 2, k)});
      for (const auto &g : crz[0].gates()) first.add(g);
      circ.append(std::move(first));
      for (std::size_t c = 1; c < crz.depth(); ++c) circ.append(crz[c]);
    }
  }
  return gate_set == GateSet::CliffordT ? lower_to_clifford_t(circ, eps) : circ;
}

Circuit build_qaoa(const MaxCutGraph &g, double beta, double gamma, std::size_t p, GateSet gate_set, double eps) {
  if (p == 0) throw std::invalid_argument("build_qaoa: p must be >= 1");
  const std::size_t n = g.n_vertices;
  // Greedy grouping of edges into rounds with disjoint endpoints.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> rounds;
  for (const auto &e : g.edges) {
    auto fits = [&](const auto &r) {
      return std::none_of(r.begin(), r.end(), [&](const auto &f) {
        return f.first == e.first || f.first == e.second || f.second == e.first || f.second == e.second;
      });
    };
    auto it = std::find_if(rounds.begin(), rounds.end(), fits);
    if (it == rounds.end()) {
      rounds.emplace_back();
      it = rounds.end() - 1;
    }
    it->push_back(e);
  }

  Circuit circ(n, GateSet::ParamRotations);
  Cycle init(n);
  for (std::size_t q = 0; q < n; ++q) init.add(Gate::single(GateKind::H, q));
  circ.append(std::move(init));
  for (std::size_t stage = 0; stage < p; ++stage) {
    for (const auto &r : rounds) {
      Cycle cx(n), rz(n);
      for (const auto &[u, v] : r) {
        cx.add(Gate::cnot(u, v));
        rz.add(Gate::rz(gamma, v));
      }
      circ.append(cx).append(std::move(rz)).append(cx);
    }
    Cycle mixer(n);
    for (std::size_t q = 0; q < n; ++q) mixer.add(Gate::rx(beta, q));
    circ.append(std::move(mixer));
  }
  return gate_set == GateSet::CliffordT ? lower_to_clifford_t(circ, eps) : circ;
}

Circuit build_benchmark(BenchmarkId id, std::size_t depth, Seed seed, double eps) {
  const BenchmarkSpec &spec = benchmark_spec(id);
  switch (id) {
    case BenchmarkId::Idle:
      return build_idle(spec.n_qubits, depth);
    case BenchmarkId::Random:
      return interleave_idle(build_random(spec.n_qubits, depth, seed));
    case BenchmarkId::Adder:
      return interleave_idle(build_adder(2));
    case BenchmarkId::Qft:
      return build_qft(spec.n_qubits, GateSet::ParamRotations);
    case BenchmarkId::QftCT:
      return interleave_idle(build_qft(spec.n_qubits, GateSet::CliffordT, eps));
    case BenchmarkId::Qaoa:
      return build_qaoa(hypercube_graph(), kQaoaBeta, kQaoaGamma, 1, GateSet::ParamRotations);
    case BenchmarkId::QaoaCT:
      return interleave_idle(build_qaoa(hypercube_graph(), kQaoaBeta, kQaoaCTGamma, 1, GateSet::CliffordT, eps));
  }
  throw std::invalid_argument("build_benchmark: unknown benchmark");
}

}  // namespace qnoise
