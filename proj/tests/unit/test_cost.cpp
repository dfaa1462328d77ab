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

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "spinqft/cost.hpp"
#include "spinqft/errors.hpp"
#include "spinqft/route.hpp"
#include "spinqft/synth.hpp"

using namespace spinqft;
using cost::CostClass;
using cost::HardwareModel;
using cost::UnitPolicy;
using ir::Gate;
using oracle::Rational;

namespace {

HardwareModel model_with(UnitPolicy policy) {
  HardwareModel m;
  m.policy = policy;
  return m;
}

}  // namespace

TEST_CASE("Controlled-rotation subtotal matches the brute-force angle sum", "[cost]") {
  for (std::size_t n = 2; n <= 16; ++n) {
    INFO("n=" << n);
    const auto qft = synth::build_qft(n);
    const Rational angle_sum = oracle::qft_angle_sum(n);
    const auto tau0 = cost::circuit_cost(qft, model_with(UnitPolicy::tau_zero()));
    const auto taun = cost::circuit_cost(qft, model_with(UnitPolicy::tau_n_minus_one()));
    CHECK(oracle::to_rational(tau0.breakdown.controlled_rotation) == angle_sum);
    CHECK(oracle::to_rational(taun.breakdown.controlled_rotation) ==
          angle_sum * Rational(boost::multiprecision::cpp_int(1) << (n - 1)));
    CHECK(tau0.breakdown.controlled_rotation == cost::qft_cost_closed_form(n, UnitPolicy::tau_zero()));
    CHECK(taun.breakdown.controlled_rotation == cost::qft_cost_closed_form(n, UnitPolicy::tau_n_minus_one()));
    // with free angle-free gates the total is the rotation subtotal
    CHECK(tau0.total_relative == tau0.breakdown.controlled_rotation);
  }
  CHECK(cost::qft_cost_closed_form(5, UnitPolicy::tau_zero()) == Dyadic::from_parts(49, 4));
  CHECK(cost::qft_cost_closed_form(5, UnitPolicy::tau_n_minus_one()) == Dyadic(49));
}

TEST_CASE("Durations scale with angle", "[cost][property]") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(0, 40);
  for (int i = 0; i < 200; ++i) {
    const int a = e(rng);
    const int b = e(rng);
    const std::size_t n = 1 + static_cast<std::size_t>(e(rng));
    for (auto policy : {UnitPolicy::tau_zero(), UnitPolicy::tau_n_minus_one(),
                        UnitPolicy::custom(DyadicAngle::pi_over_pow2(7))}) {
      const HardwareModel m = model_with(policy);
      const Dyadic da = cost::gate_duration(Gate::cphase(0, 1, DyadicAngle::pi_over_pow2(a)), m, n);
      const Dyadic db = cost::gate_duration(Gate::cphase(0, 1, DyadicAngle::pi_over_pow2(b)), m, n);
      CHECK(da == db * Dyadic::pow2(b - a));
    }
  }
  // negative angles take as long as their magnitude, modulo 2 pi
  const HardwareModel m = model_with(UnitPolicy::tau_zero());
  CHECK(cost::gate_duration(Gate::rz(0, DyadicAngle::canonical(-1, 1)), m, 3) == Dyadic::pow2(-1));
  CHECK(cost::gate_duration(Gate::rz(0, DyadicAngle::canonical(3, 1)), m, 3) == Dyadic::pow2(-1));
  CHECK(cost::gate_duration(Gate::h(0), m, 3).is_zero());
}

TEST_CASE("Unit policies differ by an exact power of two", "[cost][property]") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + i % 6;
    ir::Circuit c(n);
    // rotations only, so the angle-free gates contribute nothing either way
    for (int g = 0; g < 15; ++g) {
      Gate gate = oracle::random_gate(rng, n);
      if (gate.kind() == ir::GateKind::H || gate.kind() == ir::GateKind::Xor || gate.kind() == ir::GateKind::Swap)
        continue;
      c.append(gate);
    }
    const auto tau0 = cost::circuit_cost(c, model_with(UnitPolicy::tau_zero()));
    const auto taun = cost::circuit_cost(c, model_with(UnitPolicy::tau_n_minus_one()));
    CHECK(taun.total_relative == tau0.total_relative * Dyadic::pow2(static_cast<std::int64_t>(n) - 1));
  }
}

TEST_CASE("Closed forms are increasing in n and AQFT cost shrinks with m", "[cost][property]") {
  for (auto policy : {UnitPolicy::tau_zero(), UnitPolicy::tau_n_minus_one()}) {
    for (std::size_t n = 2; n < 200; ++n) {
      CHECK(cost::qft_cost_closed_form(n, policy) < cost::qft_cost_closed_form(n + 1, policy));
    }
    for (std::size_t n = 1; n <= 24; ++n) {
      CHECK(cost::aqft_cost_closed_form(n, n, policy) == cost::qft_cost_closed_form(n, policy));
      for (std::size_t m = 2; m <= n; ++m) {
        CHECK(cost::aqft_cost_closed_form(n, m - 1, policy) <= cost::aqft_cost_closed_form(n, m, policy));
      }
      if (n <= 10) {
        for (std::size_t m = 1; m <= n; ++m) {
          const auto measured = cost::circuit_cost(synth::build_aqft(n, m), model_with(policy));
          CHECK(measured.breakdown.controlled_rotation == cost::aqft_cost_closed_form(n, m, policy));
        }
      }
    }
  }
}

TEST_CASE("Qubit ceiling from the resolution bound", "[cost][property]") {
  HardwareModel m;
  m.t_res = 1e-3;
  CHECK(cost::max_feasible_qubits(m, 1.0) == 10);
  m.t_res = 1.0;
  for (int k = 0; k <= 80; ++k) {
    CHECK(cost::max_feasible_qubits(m, std::ldexp(1.0, k)) == static_cast<std::uint64_t>(k + 1));
    if (k > 0) CHECK(cost::max_feasible_qubits(m, std::nextafter(std::ldexp(1.0, k), 0.0)) == static_cast<std::uint64_t>(k));
  }
  CHECK_THROWS_AS(cost::max_feasible_qubits(m, 0.5), InfeasibleError);
  m.mode = cost::ControlMode::IntensityControl;
  CHECK_THROWS_AS(cost::max_feasible_qubits(m, 4.0), InvalidArgument);
}

TEST_CASE("Feasibility of a costed circuit", "[cost]") {
  HardwareModel m;
  m.policy = UnitPolicy::tau_n_minus_one();
  m.t_ref = 1e-3;
  m.t_res = 1e-3;
  // the smallest rotation pi/2^(n-1) takes exactly one t_unit = t_R
  const auto ok = cost::circuit_cost(synth::build_qft(6), m);
  CHECK(ok.feasible);
  CHECK(*ok.min_duration == Dyadic(1));
  CHECK(*ok.n_b == 6);
  m.t_res = 2e-3;
  CHECK_FALSE(cost::circuit_cost(synth::build_qft(6), m).feasible);
}

TEST_CASE("Intensity control", "[cost]") {
  HardwareModel m;
  m.mode = cost::ControlMode::IntensityControl;
  const auto r = cost::circuit_cost(synth::build_qft(5), m);
  CHECK(r.total_relative == Dyadic(15));
  CHECK(r.intensity_ratio == std::optional<double>(16.0));
  const auto req = cost::intensity_requirement(100, 1e-3);
  CHECK(req.ratio == BigInt(1) << 99);
  CHECK(req.b_max == std::ldexp(1e-3, 99));
}

TEST_CASE("Fixed-gate time is kept separate", "[cost]") {
  HardwareModel m;
  m.policy = UnitPolicy::tau_zero();
  m.t_ref = 1.0;
  m.fixed_gate_time = 0.25;
  const auto qft = synth::build_qft(4, true);
  const auto r = cost::circuit_cost(qft, m);
  CHECK(r.breakdown.controlled_rotation == cost::qft_cost_closed_form(4, UnitPolicy::tau_zero()));
  CHECK(r.breakdown.fixed_gates == Dyadic(1));  // 4 H gates
  CHECK(r.breakdown.swap == Dyadic::pow2(-1));  // 2 swaps
  CHECK(cost::cost_class(Gate::ry(0, DyadicAngle::pi_over_pow2(1))) == CostClass::FixedGate);
  CHECK(cost::cost_class(Gate::ry(0, DyadicAngle::pi_over_pow2(2))) == CostClass::SingleQubitRotation);

  const auto both = cost::compare_swap_costing(route::route_lnn(synth::build_qft(4)).circuit, m);
  CHECK(both.opaque.breakdown.swap > Dyadic(0));
  CHECK(both.lowered.breakdown.swap.is_zero());
}

TEST_CASE("Cost curves", "[cost]") {
  const HardwareModel m;
  const auto rows = cost::cost_curve(2, 12, m, cost::CurveKind::qft(), 12);
  REQUIRE(rows.size() == 11);
  CHECK(rows.front().relative_cost == Dyadic(1));
  CHECK(rows[3].relative_cost == Dyadic(49));
  const auto routed = cost::cost_curve(2, 6, m, cost::CurveKind::qft_routed_reduced());
  CHECK(routed[3].circuit == "qft-routed-reduced");
  const auto aqft = cost::cost_curve(2, 6, m, cost::CurveKind::aqft(3));
  CHECK(aqft[0].relative_cost == cost::qft_cost_closed_form(2, UnitPolicy::tau_n_minus_one()));
  std::ostringstream csv;
  cost::write_cost_csv(csv, rows);
  CHECK(csv.str().rfind("n,relative_cost,feasible,n_b,policy,mode,circuit\n", 0) == 0);
  CHECK(csv.str().find("\n5,49,") != std::string::npos);
  const auto big = cost::cost_curve(4096, 4096, m, cost::CurveKind::qft());
  CHECK(big[0].relative_cost.is_integer());
  CHECK_THROWS(cost::cost_curve(2, 65, m, cost::CurveKind::qft_routed_reduced()));
}

TEST_CASE("Policy parsing", "[cost]") {
  CHECK(UnitPolicy::parse("tau0") == UnitPolicy::tau_zero());
  CHECK(UnitPolicy::parse("tauN") == UnitPolicy::tau_n_minus_one());
  CHECK(UnitPolicy::parse("custom:5")->unit_log2(100) == 5);
  CHECK_FALSE(UnitPolicy::parse("custom:").has_value());
  CHECK_THROWS_AS(UnitPolicy::custom(DyadicAngle::canonical(3, 2)), InvalidArgument);
  CHECK(cost::CurveKind::parse("aqft:4")->m == 4);
  HardwareModel bad;
  bad.t_res = 0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}
