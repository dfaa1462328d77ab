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

// Reference implementations used only by the tests. Nothing here calls into
// the simulator kernels or the cost module: gate matrices are written out as
// small dense blocks and embedded element by element, DFT entries are summed
// from their definition, and cost sums are taken over exact rationals.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "spinqft/circuit.hpp"

namespace spinqft::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Rational = boost::multiprecision::cpp_rational;

inline double radians(const DyadicAngle& a) {
  return std::ldexp(a.numerator().convert_to<double>(), -static_cast<int>(a.log2_denominator())) *
         std::numbers::pi;
}

inline Complex cis(double x) { return {std::cos(x), std::sin(x)}; }

/// Local block of a gate. Two-qubit blocks use index 2*bit(first) + bit(second).
inline Matrix local_block(const ir::Gate& g) {
  using ir::GateKind;
  const double s2 = 1.0 / std::sqrt(2.0);
  Matrix m;
  switch (g.kind()) {
    case GateKind::H:
      m.resize(2, 2);
      m << s2, s2, s2, -s2;
      return m;
    case GateKind::Ry: {
      const double t = radians(*g.angle());
      m.resize(2, 2);
      m << std::cos(t / 2), std::sin(t / 2), -std::sin(t / 2), std::cos(t / 2);
      return m;
    }
    case GateKind::Rz: {
      const double a = radians(*g.angle());
      m = Matrix::Zero(2, 2);
      m(0, 0) = cis(a / 2);
      m(1, 1) = cis(-a / 2);
      return m;
    }
    case GateKind::GlobalPhase:
      m = Matrix::Identity(2, 2) * cis(radians(*g.angle()));
      return m;
    case GateKind::CPhase:
      m = Matrix::Identity(4, 4);
      m(3, 3) = cis(radians(*g.angle()));
      return m;
    case GateKind::Ising: {
      const double t = radians(*g.angle());
      m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = cis(t);
      m(1, 1) = m(2, 2) = cis(-t);
      return m;
    }
    case GateKind::Xor:
      // first = target, second = control: |t c> -> |t^c c>
      m = Matrix::Zero(4, 4);
      m(0, 0) = m(2, 2) = 1;
      m(3, 1) = m(1, 3) = 1;
      return m;
    case GateKind::Swap:
      m = Matrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1;
      m(1, 2) = m(2, 1) = 1;
      return m;
  }
  return m;
}

/// Full 2^n matrix of one gate, qubit q = bit q of the basis index.
inline Matrix embed(const ir::Gate& g, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  const Matrix block = local_block(g);
  const auto qs = g.qubits();
  std::size_t mask = 0;
  for (auto q : qs) mask |= std::size_t{1} << q;
  auto local = [&](std::size_t idx) {
    std::size_t l = 0;
    for (auto q : qs) l = 2 * l + ((idx >> q) & 1u);
    return l;
  };
  Matrix u = Matrix::Zero(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      u(r, c) = block(local(r), local(c));
    }
  }
  return u;
}

inline Matrix circuit_matrix(const ir::Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.num_qubits();
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& g : c) u = embed(g, c.num_qubits()) * u;
  return u;
}

/// F[r, c] = e^{2 pi i r c / N} / sqrt(N), evaluated directly in double.
inline Matrix dft(std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  Matrix f(dim, dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      f(r, c) = norm * cis(2.0 * std::numbers::pi * static_cast<double>((r * c) % dim) / static_cast<double>(dim));
  return f;
}

/// Global phase that best aligns b onto a (least squares), and the residual.
inline std::pair<Complex, double> best_phase(const Matrix& a, const Matrix& b) {
  const Complex ip = (b.adjoint() * a).trace();
  const Complex lambda = std::abs(ip) > 0 ? ip / std::abs(ip) : Complex{1.0, 0.0};
  return {lambda, (a - lambda * b).norm()};
}

/// Sum_{0 <= j < k < n} 2^(j-k), i.e. the controlled-rotation angles in units of pi.
inline Rational qft_angle_sum(std::size_t n) {
  Rational s = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j) s += Rational(1, boost::multiprecision::cpp_int(1) << (k - j));
  return s;
}

inline double qft_angle_sum_double(std::size_t n) {
  double s = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < k; ++j) s += std::ldexp(1.0, static_cast<int>(j) - static_cast<int>(k));
  return s;
}

inline Rational to_rational(const Dyadic& d) {
  return Rational(d.mantissa(), boost::multiprecision::cpp_int(1) << d.exponent());
}

// ---------------------------------------------------------------------------
// Random circuits.

inline DyadicAngle random_angle(std::mt19937_64& rng, int max_log2 = 12) {
  std::uniform_int_distribution<int> den(0, max_log2);
  const int e = den(rng);
  std::uniform_int_distribution<long long> num(-(2LL << e), 2LL << e);
  return DyadicAngle::canonical(num(rng), e);
}

inline ir::Gate random_gate(std::mt19937_64& rng, std::size_t n, bool allow_two = true) {
  using ir::Gate;
  std::uniform_int_distribution<int> kind_pick(0, (allow_two && n > 1) ? 7 : 3);
  std::uniform_int_distribution<ir::Qubit> q(0, static_cast<ir::Qubit>(n - 1));
  const int k = kind_pick(rng);
  const ir::Qubit a = q(rng);
  ir::Qubit b = a;
  if (k >= 4) {
    while (b == a) b = q(rng);
  }
  switch (k) {
    case 0: return Gate::h(a);
    case 1: return Gate::ry(a, random_angle(rng));
    case 2: return Gate::rz(a, random_angle(rng));
    case 3: return Gate::phi(a, random_angle(rng));
    case 4: return Gate::cphase(a, b, random_angle(rng));
    case 5: return Gate::ising(a, b, random_angle(rng));
    case 6: return Gate::xor_gate(a, b);
    default: return Gate::swap(a, b);
  }
}

inline ir::Circuit random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t length) {
  ir::Circuit c(n);
  for (std::size_t i = 0; i < length; ++i) c.append(random_gate(rng, n));
  return c;
}

}  // namespace spinqft::oracle
