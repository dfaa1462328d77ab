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

#include "spinqft/simulate.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <string>
#include <utility>

#include "spinqft/errors.hpp"

namespace spinqft::sim {

using ir::Gate;
using ir::GateKind;

namespace {

using Mat2 = std::array<std::array<Complex, 2>, 2>;

void check_matrix_cap(std::size_t n) {
  if (n > kMatrixQubitCap) {
    throw CapacityError("dense unitaries are limited to " + std::to_string(kMatrixQubitCap) +
                        " qubits, requested " + std::to_string(n));
  }
}

void apply_single(std::span<Complex> v, std::size_t q, const Mat2& m) {
  const std::size_t stride = std::size_t{1} << q;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i & stride) continue;
    const Complex a0 = v[i];
    const Complex a1 = v[i | stride];
    v[i] = m[0][0] * a0 + m[0][1] * a1;
    v[i | stride] = m[1][0] * a0 + m[1][1] * a1;
  }
}

}  // namespace

Complex unit_phase(const DyadicAngle& angle) {
  const DyadicAngle r = angle.reduced();
  // Quarter turns: r in {0, 1/2, 1, -1/2} in units of pi.
  if (r.log2_denominator() <= 1) {
    const int quarter = r.pi_multiple().scaled(1).mantissa().convert_to<int>();
    switch ((quarter % 4 + 4) % 4) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, r.radians());
}

void apply_gate(const Gate& gate, std::size_t num_qubits, std::span<Complex> v) {
  if (gate.max_qubit() >= num_qubits) {
    throw IndexError(gate.to_string() + " does not fit in " + std::to_string(num_qubits) + " qubits");
  }
  const std::size_t t = gate.target();
  switch (gate.kind()) {
    case GateKind::H: {
      const double s = std::numbers::sqrt2 / 2.0;
      apply_single(v, t, Mat2{{{s, s}, {s, -s}}});
      return;
    }
    case GateKind::Ry: {
      const DyadicAngle half = gate.angle()->halved();
      const Complex e = unit_phase(half);
      const double c = e.real();
      const double s = e.imag();
      apply_single(v, t, Mat2{{{c, s}, {-s, c}}});
      return;
    }
    case GateKind::Rz: {
      const Complex e = unit_phase(gate.angle()->halved());
      apply_single(v, t, Mat2{{{e, 0.0}, {0.0, std::conj(e)}}});
      return;
    }
    case GateKind::GlobalPhase: {
      const Complex e = unit_phase(*gate.angle());
      for (Complex& a : v) a *= e;
      return;
    }
    case GateKind::CPhase: {
      const Complex e = unit_phase(*gate.angle());
      const std::size_t mask = (std::size_t{1} << t) | (std::size_t{1} << gate.control());
      for (std::size_t i = 0; i < v.size(); ++i) {
        if ((i & mask) == mask) v[i] *= e;
      }
      return;
    }
    case GateKind::Ising: {
      const Complex same = unit_phase(*gate.angle());
      const Complex differ = std::conj(same);
      const std::size_t c = gate.control();
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] *= (((i >> t) ^ (i >> c)) & 1U) ? differ : same;
      }
      return;
    }
    case GateKind::Xor: {
      const std::size_t tm = std::size_t{1} << t;
      const std::size_t cm = std::size_t{1} << gate.control();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if ((i & cm) && !(i & tm)) std::swap(v[i], v[i | tm]);
      }
      return;
    }
    case GateKind::Swap: {
      const std::size_t am = std::size_t{1} << t;
      const std::size_t bm = std::size_t{1} << gate.control();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if ((i & am) && !(i & bm)) std::swap(v[i], v[i ^ am ^ bm]);
      }
      return;
    }
  }
}

UnitaryMatrix gate_unitary(const Gate& gate, std::size_t num_qubits) {
  check_matrix_cap(num_qubits);
  ir::Circuit circuit(num_qubits);
  circuit.append(gate);
  return circuit_unitary(circuit);
}

UnitaryMatrix circuit_unitary(const ir::Circuit& circuit) {
  const std::size_t n = circuit.num_qubits();
  check_matrix_cap(n);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  UnitaryMatrix u = UnitaryMatrix::Identity(dim, dim);
  // Column j of the product is the circuit applied to basis state j.
  for (Eigen::Index col = 0; col < dim; ++col) {
    std::span<Complex> column(u.col(col).data(), static_cast<std::size_t>(dim));
    for (const Gate& gate : circuit) apply_gate(gate, n, column);
  }
  return u;
}

StateVector apply(const ir::Circuit& circuit, const StateVector& state) {
  const std::size_t n = circuit.num_qubits();
  if (n > kStateQubitCap) {
    throw CapacityError("state vectors are limited to " + std::to_string(kStateQubitCap) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  if (state.size() != dim) {
    throw InvalidArgument("state has dimension " + std::to_string(state.size()) + ", circuit needs " +
                          std::to_string(dim));
  }
  StateVector out = state;
  std::span<Complex> amps(out.data(), static_cast<std::size_t>(dim));
  for (const Gate& gate : circuit) apply_gate(gate, n, amps);
  return out;
}

StateVector basis_state(std::size_t num_qubits, std::size_t index) {
  if (num_qubits > kStateQubitCap) {
    throw CapacityError("state vectors are limited to " + std::to_string(kStateQubitCap) + " qubits");
  }
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw IndexError("basis index " + std::to_string(index) + " out of range");
  StateVector out = StateVector::Zero(static_cast<Eigen::Index>(dim));
  out(static_cast<Eigen::Index>(index)) = 1.0;
  return out;
}

UnitaryMatrix dft_matrix(std::size_t num_qubits) {
  check_matrix_cap(num_qubits);
  const std::size_t dim = std::size_t{1} << num_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  UnitaryMatrix f(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t x = 0; x < dim; ++x) {
      // 2 pi (c x mod N) / N, i.e. (c x mod N) * pi / 2^(n-1).
      const std::size_t m = (c * x) & (dim - 1);
      const DyadicAngle angle = DyadicAngle::canonical(BigInt(2 * m), static_cast<std::int64_t>(num_qubits));
      f(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(x)) = scale * unit_phase(angle);
    }
  }
  return f;
}

PhaseEquivalence equal_up_to_global_phase(const UnitaryMatrix& a, const UnitaryMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("cannot compare a " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          " matrix with a " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + " one");
  }
  Complex lambda{1.0, 0.0};
  if (b.size() > 0) {
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    const double biggest = b.cwiseAbs().maxCoeff(&row, &col);
    if (biggest > 0.0) {
      const Complex ratio = a(row, col) / b(row, col);
      if (std::abs(ratio) > 0.0) lambda = ratio / std::abs(ratio);
    }
  }
  PhaseEquivalence out;
  out.residual = (a - lambda * b).norm();
  out.equal = out.residual <= tol;
  if (out.equal) out.phase = lambda;
  return out;
}

double unitarity_defect(const UnitaryMatrix& u) {
  return (u.adjoint() * u - UnitaryMatrix::Identity(u.rows(), u.cols())).norm();
}

double trace_fidelity(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument("trace_fidelity: dimension mismatch");
  }
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

void write_matrix_text(std::ostream& out, const UnitaryMatrix& u) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(15);
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index c = 0; c < u.cols(); ++c) {
      if (c > 0) out << ' ';
      out << u(r, c).real() << ',' << u(r, c).imag();
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace spinqft::sim
