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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracle.hpp"
#include "spinqft/errors.hpp"
#include "spinqft/simulate.hpp"
#include "spinqft/synth.hpp"

using namespace spinqft;
using ir::Circuit;
using ir::Gate;
using ir::GateKind;
using synth::LoweringLevel;
using synth::XorMode;

namespace {

// Embeds a small circuit into an n-qubit one without changing indices.
Circuit widen(const Circuit& c, std::size_t n) {
  Circuit out(n, c.stage());
  out.append(c);
  return out;
}

bool is_subsequence(const Circuit& small, const Circuit& big) {
  auto it = big.begin();
  for (const Gate& g : small) {
    it = std::find(it, big.end(), g);
    if (it == big.end()) return false;
    ++it;
  }
  return true;
}

std::set<ir::Qubit> touched(const Circuit& c) {
  std::set<ir::Qubit> s;
  for (const Gate& g : c)
    for (auto q : g.qubits()) s.insert(q);
  return s;
}

}  // namespace

TEST_CASE("QFT gate layout", "[synth]") {
  const Circuit c = synth::build_qft(3);
  const std::vector<Gate> expected = {
      Gate::h(2),
      Gate::cphase(1, 2, DyadicAngle::pi_over_pow2(1)),
      Gate::h(1),
      Gate::cphase(0, 2, DyadicAngle::pi_over_pow2(2)),
      Gate::cphase(0, 1, DyadicAngle::pi_over_pow2(1)),
      Gate::h(0),
  };
  CHECK(c.gates() == expected);
  const auto census = ir::gate_census(synth::build_qft(6, true));
  CHECK(census[GateKind::H] == 6);
  CHECK(census[GateKind::CPhase] == 15);
  CHECK(census[GateKind::Swap] == 3);
  CHECK_THROWS_AS(synth::build_qft(0), InvalidArgument);
  CHECK_THROWS_AS(synth::build_aqft(4, 0), InvalidArgument);
  CHECK_THROWS_AS(synth::build_aqft(4, 5), InvalidArgument);
}

TEST_CASE("QFT with bit reversal equals the DFT oracle", "[synth]") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto u = oracle::circuit_matrix(synth::build_qft(n, true));
    const auto [lambda, residual] = oracle::best_phase(u, oracle::dft(n));
    INFO("n=" << n);
    CHECK(residual <= 1e-10);
    CHECK(std::abs(lambda - 1.0) <= 1e-10);
  }
}

TEST_CASE("Exchange-sequence Xor equals Xor up to a fixed phase", "[synth]") {
  const sim::Complex expected = std::polar(1.0, -std::numbers::pi / 4);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (ir::Qubit t = 0; t < n; ++t) {
      for (ir::Qubit c = 0; c < n; ++c) {
        if (t == c) continue;
        const auto lowered = oracle::circuit_matrix(widen(synth::lower_xor(t, c), n));
        const auto x = oracle::embed(Gate::xor_gate(t, c), n);
        const auto [lambda, residual] = oracle::best_phase(lowered, x);
        CHECK(residual <= 1e-11);
        CHECK(std::abs(lambda - expected) <= 1e-11);
      }
    }
  }
  const auto census = ir::gate_census(synth::lower_xor(0, 1));
  CHECK(census.total() == 5);
  CHECK(census[GateKind::Ising] == 1);
}

TEST_CASE("Controlled phase lowering is exact with ideal Xor", "[synth][property]") {
  std::mt19937_64 rng(21);
  std::vector<DyadicAngle> angles;
  for (std::uint64_t j = 0; j <= 10; ++j) angles.push_back(DyadicAngle::pi_over_pow2(j));
  for (int i = 0; i < 50; ++i) angles.push_back(oracle::random_angle(rng, 20));
  for (const auto& theta : angles) {
    for (auto [t, c] : {std::pair<ir::Qubit, ir::Qubit>{0, 1}, {1, 0}, {0, 2}, {2, 1}}) {
      const auto lowered = oracle::circuit_matrix(widen(synth::lower_cphase(t, c, theta), 3));
      const auto target = oracle::embed(Gate::cphase(t, c, theta), 3);
      INFO(theta.to_string());
      CHECK((lowered - target).norm() <= 1e-11);
    }
    // with the physical Xor the two exchange phases multiply to e^{-i pi/2}
    const auto phys = oracle::circuit_matrix(synth::lower_cphase(0, 1, theta, XorMode::Physical));
    const auto [lambda, residual] = oracle::best_phase(phys, oracle::embed(Gate::cphase(0, 1, theta), 2));
    CHECK(residual <= 1e-11);
    CHECK(std::abs(lambda - sim::Complex(0, -1)) <= 1e-11);
  }
}

TEST_CASE("Swap lowering", "[synth]") {
  const auto u = oracle::circuit_matrix(synth::lower_swap(0, 1));
  CHECK((u - oracle::embed(Gate::swap(0, 1), 2)).norm() <= 1e-12);
  const auto p = oracle::circuit_matrix(widen(synth::lower_swap(2, 0, XorMode::Physical), 3));
  CHECK(oracle::best_phase(p, oracle::embed(Gate::swap(2, 0), 3)).second <= 1e-11);
  CHECK_THROWS_AS(synth::lower_swap(1, 1), InvalidArgument);
}

TEST_CASE("Circuit lowering levels", "[synth]") {
  const Circuit qft = synth::build_qft(3, true);
  const auto reference = sim::circuit_unitary(qft);

  const Circuit logical = synth::lower_circuit(qft, LoweringLevel::Logical);
  CHECK(logical.gates() == qft.gates());
  CHECK(logical.stage() == ir::Stage::Lowered);

  const Circuit xor_level = synth::lower_circuit(qft, LoweringLevel::XorLevel);
  const auto xc = ir::gate_census(xor_level);
  CHECK(xc[GateKind::CPhase] == 0);
  CHECK(xc[GateKind::Swap] == 0);
  CHECK(xc[GateKind::Xor] > 0);
  CHECK((sim::circuit_unitary(xor_level) - reference).norm() <= 1e-10);

  const Circuit elementary = synth::lower_circuit(qft, LoweringLevel::Elementary);
  const auto ec = ir::gate_census(elementary);
  CHECK(ec[GateKind::CPhase] == 0);
  CHECK(ec[GateKind::Xor] == 0);
  CHECK(ec[GateKind::Swap] == 0);
  CHECK(ec.total() == ec[GateKind::H] + ec[GateKind::Ry] + ec[GateKind::Rz] + ec[GateKind::GlobalPhase] +
                          ec[GateKind::Ising]);
  CHECK(sim::equal_up_to_global_phase(sim::circuit_unitary(elementary), reference, 1e-10).equal);
}

TEST_CASE("Lowering never changes the touched qubits", "[synth][property]") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const Gate g = oracle::random_gate(rng, 5);
    Circuit one(5);
    one.append(g);
    for (auto level : {LoweringLevel::XorLevel, LoweringLevel::Elementary}) {
      const Circuit lowered = synth::lower_circuit(one, level);
      const auto got = touched(lowered);
      const auto want = touched(one);
      CHECK(std::includes(want.begin(), want.end(), got.begin(), got.end()));
      CHECK(sim::equal_up_to_global_phase(sim::circuit_unitary(lowered), sim::circuit_unitary(one), 1e-10).equal);
    }
  }
}

TEST_CASE("AQFT nesting and fidelity", "[synth][property]") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK(synth::build_aqft(n, n) == synth::build_qft(n));
    for (std::size_t m = 1; m <= n; ++m) {
      CHECK(is_subsequence(synth::build_aqft(n, m), synth::build_qft(n)));
      if (m > 1) CHECK(is_subsequence(synth::build_aqft(n, m - 1), synth::build_aqft(n, m)));
    }
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto f = oracle::dft(n);
    const double exact = sim::trace_fidelity(f, oracle::circuit_matrix(synth::build_aqft(n, n, true)));
    const double coarse = sim::trace_fidelity(f, oracle::circuit_matrix(synth::build_aqft(n, 1, true)));
    CHECK(exact >= 1 - 1e-10);
    CHECK(coarse < exact);
  }
}

TEST_CASE("Level and mode names", "[synth]") {
  for (auto l : {LoweringLevel::Logical, LoweringLevel::XorLevel, LoweringLevel::Elementary})
    CHECK(synth::level_from_name(synth::level_name(l)) == l);
  for (auto m : {XorMode::Ideal, XorMode::Physical}) CHECK(synth::xor_mode_from_name(synth::xor_mode_name(m)) == m);
  CHECK_FALSE(synth::level_from_name("gates").has_value());
}
