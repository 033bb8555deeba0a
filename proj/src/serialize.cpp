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


#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "qnoise/circuit.hpp"
#include "qnoise/errors.hpp"

namespace qnoise {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string &msg) {
  throw CircuitParseError("line " + std::to_string(line) + ": " + msg);
}

std::size_t parse_index(std::string_view s, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    fail(line, "bad qubit index '" + std::string(s) + "'");
  }
  return v;
}

double parse_angle(std::string_view s, std::size_t line) {
  std::string buf(s);
  char *end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) fail(line, "bad angle '" + buf + "'");
  return v;
}

Gate parse_gate(std::string_view tok, std::size_t line) {
  const auto at = tok.find('@');
  if (at == std::string_view::npos) fail(line, "missing '@' in '" + std::string(tok) + "'");
  std::string_view head = tok.substr(0, at);
  std::string_view qubits = tok.substr(at + 1);

  std::optional<double> arg;
  if (const auto open = head.find('('); open != std::string_view::npos) {
    if (head.back() != ')') fail(line, "unbalanced parentheses in '" + std::string(tok) + "'");
    arg = parse_angle(head.substr(open + 1, head.size() - open - 2), line);
    head = head.substr(0, open);
  }
  const auto kind = parse_gate_kind(head);
  if (!kind) fail(line, "unknown gate '" + std::string(head) + "'");
  if (is_parametric(*kind) != arg.has_value()) {
    fail(line, "gate " + std::string(head) + (arg ? " takes no argument" : " needs an angle"));
  }

  Gate g{*kind, {}, arg.value_or(0.0)};
  while (true) {
    const auto comma = qubits.find(',');
    g.qubits.push_back(parse_index(qubits.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    qubits.remove_prefix(comma + 1);
  }
  if (g.qubits.size() != gate_arity(*kind)) {
    fail(line, "gate " + std::string(head) + " expects " + std::to_string(gate_arity(*kind)) + " qubits");
  }
  return g;
}

}  // namespace

std::string to_text(const Circuit &circ) {
  std::ostringstream out;
  out << "qubits " << circ.n_qubits() << "\n";
  out << "gateset " << (circ.gate_set() == GateSet::CliffordT ? "clifford_t" : "param") << "\n";
  for (const auto &c : circ.cycles()) {
    if (c.empty()) {
      out << "-\n";
      continue;
    }
    for (std::size_t i = 0; i < c.gates().size(); ++i) out << (i ? " " : "") << c.gates()[i].str();
    out << "\n";
  }
  return out.str();
}

Circuit from_text(std::string_view text) {
  std::optional<Circuit> circ;
  std::size_t line_no = 0;
  bool body_started = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!circ) {
      if (line.substr(0, 7) != "qubits ") fail(line_no, "expected 'qubits N' header");
      const std::size_t n = parse_index(trim(line.substr(7)), line_no);
      if (n == 0) fail(line_no, "circuit needs at least one qubit");
      circ.emplace(n);
      continue;
    }
    if (!body_started && line.substr(0, 8) == "gateset ") {
      const auto name = trim(line.substr(8));
      if (name == "clifford_t") {
        circ->set_gate_set(GateSet::CliffordT);
      } else if (name == "param") {
        circ->set_gate_set(GateSet::ParamRotations);
      } else {
        fail(line_no, "unknown gate set '" + std::string(name) + "'");
      }
      continue;
    }
    body_started = true;

    Cycle cycle(circ->n_qubits());
    if (line != "-") {
      std::istringstream toks{std::string(line)};
      std::string tok;
      while (toks >> tok) {
        try {
          cycle.add(parse_gate(tok, line_no));
        } catch (const CircuitParseError &) {
          throw;
        } catch (const std::exception &e) {
          fail(line_no, e.what());
        }
      }
    }
    circ->append(std::move(cycle));
  }
  if (!circ) throw CircuitParseError("empty circuit text: missing 'qubits N' header");
  return *circ;
}

}  // namespace qnoise
