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

#include <cstddef>
#include <string_view>
#include <optional>

#include "spinqft/circuit.hpp"

namespace spinqft::synth {

enum class LoweringLevel {
  Logical,     ///< keep H, CPhase, Xor, Swap
  XorLevel,    ///< CPhase -> Xor + Rz + Phi, Swap -> 3 Xor
  Elementary,  ///< additionally Xor -> Ry, Rz, D; only {H, Ry, Rz, Phi, Ising} remain
};

enum class XorMode {
  Ideal,     ///< keep Xor as the textbook CNOT
  Physical,  ///< expand each Xor into the five-gate exchange sequence (phase e^{-i pi/4})
};

std::string_view level_name(LoweringLevel level);
std::optional<LoweringLevel> level_from_name(std::string_view name);
std::string_view xor_mode_name(XorMode mode);
std::optional<XorMode> xor_mode_from_name(std::string_view name);

/**
 * QFT on n qubits. Targets run from qubit n-1 down to 0; each target j first
 * receives C(target j, control k, pi/2^(k-j)) for k = n-1 .. j+1 and then H_j.
 * With include_bit_reversal, Swap(i, n-1-i) for i < n/2 follows, and the
 * unitary equals the DFT matrix.
 */
ir::Circuit build_qft(std::size_t n, bool include_bit_reversal = false);

/// build_qft with every controlled phase of distance k-j >= m dropped.
/// Requires 1 <= m <= n.
ir::Circuit build_aqft(std::size_t n, std::size_t m, bool include_bit_reversal = false);

/// [Ry_j(pi/2), D_jk(pi/4), Rz_j(-pi/2), Rz_k(-pi/2), Ry_j(-pi/2)], equal to
/// e^{-i pi/4} Xor(j, k). Width max(j, k) + 1.
ir::Circuit lower_xor(ir::Qubit target, ir::Qubit control);

/// [Xor, Rz_j(t/2), Xor, Rz_j(-t/2), Phi_k(t/4), Rz_k(-t/2)]; exactly C(t)
/// with ideal Xor, C(t) up to e^{-i pi/2} with physical Xor.
ir::Circuit lower_cphase(ir::Qubit target, ir::Qubit control, const DyadicAngle& theta,
                         XorMode mode = XorMode::Ideal);

/// Xor(k, j) Xor(j, k) Xor(k, j).
ir::Circuit lower_swap(ir::Qubit a, ir::Qubit b, XorMode mode = XorMode::Ideal);

/**
 * Gate-by-gate expansion to `level`. Elementary always uses the physical Xor
 * sequence; at XorLevel, XorMode::Physical also expands Xor gates (which makes
 * the result an Elementary circuit). The result is tagged Stage::Lowered.
 */
ir::Circuit lower_circuit(const ir::Circuit& circuit, LoweringLevel level, XorMode mode = XorMode::Ideal);

/// Replaces only the Swap gates by their Xor expansion; everything else is kept.
ir::Circuit lower_swaps(const ir::Circuit& circuit, XorMode mode);

}  // namespace spinqft::synth
