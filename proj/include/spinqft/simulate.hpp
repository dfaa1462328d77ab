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

/**
 * @file simulate.hpp
 * @brief Dense small-n simulator used as the correctness oracle.
 *
 * Basis convention: qubit q is bit q of the basis index, so qubit 0 is the
 * least significant bit. With this convention the synthesized QFT followed by
 * its bit-reversal swaps equals the DFT matrix F[c,x] = e^{2 pi i c x/N}/sqrt(N).
 *
 * Gate matrices (rows are output amplitudes):
 *   H      = [1 1; 1 -1]/sqrt(2)
 *   Ry(t)  = [cos t/2, sin t/2; -sin t/2, cos t/2]
 *   Rz(a)  = diag(e^{ia/2}, e^{-ia/2})
 *   Phi(d) = e^{id} I
 *   C(t)   = phase e^{it} when both qubits are 1
 *   D(t)   = e^{it} when the two qubits agree, e^{-it} when they differ
 *   Xor    = flip target when control is 1
 */

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>

#include <Eigen/Dense>

#include "spinqft/circuit.hpp"

namespace spinqft::sim {

using Complex = std::complex<double>;
using UnitaryMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Widest register for which full 2^n x 2^n unitaries are built.
inline constexpr std::size_t kMatrixQubitCap = 12;
/// Widest register for the state-vector path.
inline constexpr std::size_t kStateQubitCap = 24;

/// e^{i angle}; exact for multiples of pi/2.
Complex unit_phase(const DyadicAngle& angle);

/// In-place update of a 2^n amplitude array by one gate.
void apply_gate(const ir::Gate& gate, std::size_t num_qubits, std::span<Complex> amplitudes);

/// Throws CapacityError above kMatrixQubitCap and IndexError for a gate that
/// does not fit in n qubits.
UnitaryMatrix gate_unitary(const ir::Gate& gate, std::size_t num_qubits);

/// Ordered product; later gates multiply on the left.
UnitaryMatrix circuit_unitary(const ir::Circuit& circuit);

/// Per-gate state update without building a matrix.
/// Throws InvalidArgument on a dimension mismatch.
StateVector apply(const ir::Circuit& circuit, const StateVector& state);

StateVector basis_state(std::size_t num_qubits, std::size_t index);

UnitaryMatrix dft_matrix(std::size_t num_qubits);

struct PhaseEquivalence {
  bool equal = false;
  /// The unit-modulus lambda with a ~ lambda * b, present only when equal.
  std::optional<Complex> phase;
  /// ||a - lambda b||_F for the extracted lambda.
  double residual = 0.0;
};

/// lambda is read off the largest-magnitude entry of b.
PhaseEquivalence equal_up_to_global_phase(const UnitaryMatrix& a, const UnitaryMatrix& b, double tol);

/// ||U^dagger U - I||_F
double unitarity_defect(const UnitaryMatrix& u);

/// |Tr(a^dagger b)| / dim, 1 exactly when a and b agree up to phase.
double trace_fidelity(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Debug dump: one line per row of space-separated "re,im" pairs.
void write_matrix_text(std::ostream& out, const UnitaryMatrix& u);

}  // namespace spinqft::sim
