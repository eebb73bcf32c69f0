// Copyright 2026 The vtqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vtqg/text_format.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "vtqg/errors.hpp"

namespace vtqg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw InvalidArgument("circuit text line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    fail(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

double parse_angle(std::string_view tok, std::size_t line_no) {
  // from_chars for double is unavailable on some toolchains; strtod is exact
  // for round-tripped 17-digit output.
  std::string s(tok);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) fail(line_no, "bad angle '" + s + "'");
  if (!std::isfinite(v)) fail(line_no, "angle must be finite");
  return v;
}

}  // namespace

void write_text(std::ostream& os, const Circuit& circuit) {
  os << "qubits " << circuit.n_qubits() << '\n';
  if (circuit.n_clbits()) os << "clbits " << circuit.n_clbits() << '\n';
  for (Clbit b : circuit.sign_bits()) os << "sign " << b << '\n';
  for (const Gate& g : circuit) os << to_string(g) << '\n';
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream os;
  write_text(os, circuit);
  return os.str();
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::size_t n_clbits = 0;
  std::vector<Clbit> sign_bits;
  std::size_t line_no = 0;

  auto ensure_circuit = [&](std::size_t ln) -> Circuit& {
    if (!circuit) fail(ln, "'qubits N' header must precede gates");
    return *circuit;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "qubits" || tok[0] == "clbits" || tok[0] == "sign") {
      if (tok.size() != 2) fail(line_no, "header takes one integer");
      const std::size_t v = parse_index(tok[1], line_no);
      if (tok[0] == "sign") {
        sign_bits.push_back(v);
        continue;
      }
      if (circuit && !circuit->empty()) fail(line_no, "header after gates");
      if (tok[0] == "qubits") {
        if (v == 0) fail(line_no, "qubits must be positive");
        circuit.emplace(v, n_clbits);
      } else {
        n_clbits = v;
        if (circuit) circuit.emplace(circuit->n_qubits(), n_clbits);
      }
      continue;
    }

    auto kind = gate_kind_from_string(tok[0]);
    if (!kind) fail(line_no, "unknown gate kind '" + std::string(tok[0]) + "'");
    if (tok.size() < 2) fail(line_no, "missing qubit list");

    std::vector<Qubit> qubits;
    std::string_view qs = tok[1];
    while (!qs.empty()) {
      auto comma = qs.find(',');
      qubits.push_back(parse_index(qs.substr(0, comma), line_no));
      if (comma == std::string_view::npos) break;
      qs = qs.substr(comma + 1);
    }

    std::size_t i = 2;
    double angle = 0.0;
    if (has_angle(*kind)) {
      if (i >= tok.size()) fail(line_no, std::string(tok[0]) + " needs an angle");
      angle = parse_angle(tok[i++], line_no);
    }
    bool pet = false;
    std::optional<Clbit> target, condition;
    while (i < tok.size()) {
      if (tok[i] == "pet") {
        pet = true;
        ++i;
      } else if ((tok[i] == "->" || tok[i] == "if") && i + 1 < tok.size()) {
        (tok[i] == "->" ? target : condition) = parse_index(tok[i + 1], line_no);
        i += 2;
      } else {
        fail(line_no, "unexpected token '" + std::string(tok[i]) + "'");
      }
    }
    if (pet && *kind != GateKind::RZX) fail(line_no, "'pet' only applies to RZX");
    if (target.has_value() != (*kind == GateKind::MeasureZ)) {
      fail(line_no, "'-> bit' is required for MEASURE_Z and only allowed there");
    }

    Gate gate = [&] {
      if (*kind == GateKind::MeasureZ) {
        if (qubits.size() != 1) fail(line_no, "MEASURE_Z takes one qubit");
        return Gate::measure_z(qubits[0], *target);
      }
      if (*kind == GateKind::RZX) {
        if (qubits.size() != 2) fail(line_no, "RZX takes two qubits");
        return Gate::rzx(qubits[0], qubits[1], angle, pet);
      }
      return Gate::make(*kind, qubits, angle);
    }();
    if (condition) gate = gate.controlled_by(*condition);
    ensure_circuit(line_no).append(gate);
  }
  if (!circuit) throw InvalidArgument("circuit text has no 'qubits N' header");
  for (Clbit b : sign_bits) circuit->mark_sign_bit(b);
  return std::move(*circuit);
}

}  // namespace vtqg
