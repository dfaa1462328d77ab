// Copyright 2026 The spinqft Authors
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

#include "spinqft/circuit_json.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "spinqft/errors.hpp"

namespace spinqft::ir {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& require(const json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    throw ParseError(std::string("missing required field \"") + key + "\"");
  }
  return node.at(key);
}

BigInt parse_numerator(const json& node) {
  if (!node.is_string()) throw ParseError("angle numerator must be a decimal string");
  const auto& text = node.get_ref<const std::string&>();
  const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos) {
    throw ParseError("angle numerator \"" + text + "\" is not a decimal integer");
  }
  return BigInt(text);
}

}  // namespace

ordered_json gate_to_json(const Gate& gate) {
  ordered_json out;
  out["kind"] = kind_name(gate.kind());
  out["q"] = ordered_json::array();
  for (const Qubit q : gate.qubits()) out["q"].push_back(q);
  if (const auto& angle = gate.angle()) {
    out["angle"] = {{"num", angle->numerator().str()}, {"log2den", angle->log2_denominator()}};
  }
  return out;
}

ordered_json circuit_to_json(const Circuit& circuit) {
  ordered_json out;
  out["n"] = circuit.num_qubits();
  out["stage"] = stage_name(circuit.stage());
  out["gates"] = ordered_json::array();
  for (const Gate& gate : circuit) out["gates"].push_back(gate_to_json(gate));
  return out;
}

Gate gate_from_json(const json& node) {
  const json& kind_node = require(node, "kind");
  if (!kind_node.is_string()) throw ParseError("gate kind must be a string");
  const auto kind = kind_from_name(kind_node.get<std::string>());
  if (!kind) throw ParseError("unknown gate kind \"" + kind_node.get<std::string>() + "\"");

  const json& q_node = require(node, "q");
  if (!q_node.is_array()) throw ParseError("gate \"q\" must be an array");
  std::vector<Qubit> qubits;
  for (const json& q : q_node) {
    if (!q.is_number_unsigned()) throw ParseError("qubit indices must be non-negative integers");
    qubits.push_back(q.get<Qubit>());
  }

  std::optional<DyadicAngle> angle;
  if (node.contains("angle")) {
    const json& a = node.at("angle");
    const json& log2den = require(a, "log2den");
    if (!log2den.is_number_integer()) throw ParseError("angle log2den must be an integer");
    try {
      angle = DyadicAngle::canonical(parse_numerator(require(a, "num")), log2den.get<std::int64_t>());
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
  }

  try {
    return Gate::make(*kind, qubits, std::move(angle));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Circuit circuit_from_json(const json& node) {
  const json& n_node = require(node, "n");
  if (!n_node.is_number_unsigned() || n_node.get<std::uint64_t>() == 0) {
    throw ParseError("\"n\" must be a positive integer");
  }
  const json& stage_node = require(node, "stage");
  if (!stage_node.is_string()) throw ParseError("\"stage\" must be a string");
  const auto stage = stage_from_name(stage_node.get<std::string>());
  if (!stage) throw ParseError("unknown stage \"" + stage_node.get<std::string>() + "\"");

  Circuit circuit(n_node.get<std::size_t>(), *stage);
  const json& gates = require(node, "gates");
  if (!gates.is_array()) throw ParseError("\"gates\" must be an array");
  for (const json& g : gates) {
    try {
      circuit.append(gate_from_json(g));
    } catch (const IndexError& e) {
      throw ParseError(e.what());
    }
  }
  return circuit;
}

std::string dump_circuit(const Circuit& circuit) { return circuit_to_json(circuit).dump(2) + "\n"; }

Circuit parse_circuit(std::string_view text) {
  json node;
  try {
    node = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed circuit JSON: ") + e.what());
  }
  return circuit_from_json(node);
}

Circuit read_circuit_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_circuit(buffer.str());
}

void write_circuit_file(const std::filesystem::path& path, const Circuit& circuit) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << dump_circuit(circuit);
}

}  // namespace spinqft::ir
