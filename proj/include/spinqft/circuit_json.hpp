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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "spinqft/circuit.hpp"

namespace spinqft::ir {

// Circuit file schema:
//   {"n": int, "stage": string,
//    "gates": [{"kind": "H"|"Ry"|"Rz"|"Phi"|"CPhase"|"Ising"|"Xor"|"Swap",
//               "q": [target] | [target, control],
//               "angle": {"num": "<decimal>", "log2den": int}}]}
// "angle" is omitted for H, Xor and Swap. Numerators are decimal strings so
// they survive readers limited to 64-bit integers.

nlohmann::ordered_json gate_to_json(const Gate& gate);
nlohmann::ordered_json circuit_to_json(const Circuit& circuit);

/// Throws ParseError on any schema violation (including bad indices).
Gate gate_from_json(const nlohmann::json& node);
Circuit circuit_from_json(const nlohmann::json& node);

/// Two-space indented text, newline terminated.
std::string dump_circuit(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

Circuit read_circuit_file(const std::filesystem::path& path);
void write_circuit_file(const std::filesystem::path& path, const Circuit& circuit);

}  // namespace spinqft::ir
