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

#include "spinqft/cost.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "spinqft/errors.hpp"
#include "spinqft/route.hpp"
#include "spinqft/synth.hpp"

namespace spinqft::cost {

using ir::Gate;
using ir::GateKind;

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc() || ptr != last || text.empty()) return std::nullopt;
  return value;
}

bool is_fixed_rotation(const Gate& gate) {
  return gate.kind() == GateKind::Ry && gate.angle()->reduced().pi_multiple().abs() == Dyadic::pow2(-1);
}

Dyadic fixed_units(const HardwareModel& model) {
  if (model.fixed_gate_time == 0.0) return {};
  return Dyadic::from_double(model.fixed_gate_time / model.t_ref);
}

// 0 when tau0 < t_R, else 1 + floor(log2(tau0 / t_R)).
std::uint64_t feasible_width(const Dyadic& tau0, const Dyadic& t_res) {
  if (tau0 < t_res) return 0;
  // tau0 / t_R = (a / 2^e) / (b / 2^f) = (a 2^f) / (b 2^e)
  const BigInt num = tau0.mantissa() << static_cast<unsigned>(t_res.exponent());
  const BigInt den = t_res.mantissa() << static_cast<unsigned>(tau0.exponent());
  const BigInt quotient = num / den;
  return 1 + msb_index(quotient);
}

bool lasts_long_enough(const Dyadic& units, const HardwareModel& model) {
  return units * Dyadic::from_double(model.t_ref) >= Dyadic::from_double(model.t_res);
}

std::optional<std::uint64_t> duration_mode_nb(const HardwareModel& model, std::size_t n) {
  if (model.mode != ControlMode::DurationControl) return std::nullopt;
  const Dyadic tau0 = Dyadic::from_double(model.t_ref).scaled(static_cast<std::int64_t>(model.policy.unit_log2(n)));
  return feasible_width(tau0, Dyadic::from_double(model.t_res));
}

}  // namespace

std::string mode_name(ControlMode mode) {
  return mode == ControlMode::DurationControl ? "duration" : "intensity";
}

std::optional<ControlMode> mode_from_name(const std::string& name) {
  if (name == "duration") return ControlMode::DurationControl;
  if (name == "intensity") return ControlMode::IntensityControl;
  return std::nullopt;
}

UnitPolicy UnitPolicy::custom(const DyadicAngle& reference) {
  if (reference.numerator() != 1) {
    throw InvalidArgument("custom unit rotation must be pi/2^b, got " + reference.to_string());
  }
  return {Kind::Custom, reference.log2_denominator()};
}

std::uint64_t UnitPolicy::unit_log2(std::size_t n) const {
  switch (kind) {
    case Kind::TauZero: return 0;
    case Kind::TauNMinusOne: return n == 0 ? 0 : n - 1;
    case Kind::Custom: return custom_log2;
  }
  return 0;
}

std::string UnitPolicy::to_string() const {
  switch (kind) {
    case Kind::TauZero: return "tau0";
    case Kind::TauNMinusOne: return "tauN";
    case Kind::Custom: return "custom:" + std::to_string(custom_log2);
  }
  return {};
}

std::optional<UnitPolicy> UnitPolicy::parse(const std::string& text) {
  if (text == "tau0") return tau_zero();
  if (text == "tauN") return tau_n_minus_one();
  if (text.rfind("custom:", 0) == 0) {
    if (const auto b = parse_u64(std::string_view(text).substr(7))) return UnitPolicy{Kind::Custom, *b};
  }
  return std::nullopt;
}

void HardwareModel::validate() const {
  if (!(t_res > 0.0) || !std::isfinite(t_res)) throw InvalidArgument("t_R must be positive");
  if (!(t_ref > 0.0) || !std::isfinite(t_ref)) throw InvalidArgument("t_ref must be positive");
  if (!(fixed_gate_time >= 0.0) || !std::isfinite(fixed_gate_time)) {
    throw InvalidArgument("fixed_gate_time must be non-negative");
  }
  if (b_min && !(*b_min > 0.0)) throw InvalidArgument("B_min must be positive");
}

CostClass cost_class(const Gate& gate) {
  switch (gate.kind()) {
    case GateKind::CPhase:
    case GateKind::Ising:
      return CostClass::ControlledRotation;
    case GateKind::Rz:
    case GateKind::GlobalPhase:
      return CostClass::SingleQubitRotation;
    case GateKind::Ry:
      return is_fixed_rotation(gate) ? CostClass::FixedGate : CostClass::SingleQubitRotation;
    case GateKind::H:
    case GateKind::Xor:
      return CostClass::FixedGate;
    case GateKind::Swap:
      return CostClass::Swap;
  }
  return CostClass::FixedGate;
}

Dyadic& CostBreakdown::operator[](CostClass c) {
  switch (c) {
    case CostClass::ControlledRotation: return controlled_rotation;
    case CostClass::SingleQubitRotation: return single_qubit_rotation;
    case CostClass::FixedGate: return fixed_gates;
    case CostClass::Swap: return swap;
  }
  return fixed_gates;
}

Dyadic gate_duration(const Gate& gate, const HardwareModel& model, std::size_t n) {
  if (model.mode == ControlMode::IntensityControl) return Dyadic(1);
  const CostClass c = cost_class(gate);
  if (c == CostClass::FixedGate || c == CostClass::Swap) return fixed_units(model);
  const Dyadic magnitude = gate.angle()->reduced().pi_multiple().abs();
  return magnitude.scaled(static_cast<std::int64_t>(model.policy.unit_log2(n)));
}

CostReport circuit_cost(const ir::Circuit& circuit, const HardwareModel& model) {
  model.validate();
  CostReport report;
  report.n = circuit.num_qubits();
  report.mode = model.mode;
  report.policy = model.policy;

  std::optional<Dyadic> smallest_angle;
  for (const Gate& gate : circuit) {
    const Dyadic d = gate_duration(gate, model, report.n);
    report.breakdown[cost_class(gate)] += d;
    if (d.sign() > 0 && (!report.min_duration || d < *report.min_duration)) report.min_duration = d;
    if (gate.angle()) {
      const Dyadic a = gate.angle()->reduced().pi_multiple().abs();
      if (!a.is_zero() && (!smallest_angle || a < *smallest_angle)) smallest_angle = a;
    }
  }
  report.total_relative = report.breakdown.total();
  report.total_seconds = report.total_relative.to_double() * model.t_ref;
  report.feasible = !report.min_duration || lasts_long_enough(*report.min_duration, model);
  report.n_b = duration_mode_nb(model, report.n);
  if (model.mode == ControlMode::IntensityControl) {
    report.intensity_ratio = smallest_angle ? 1.0 / smallest_angle->to_double() : 1.0;
  }
  return report;
}

Dyadic qft_cost_closed_form(std::size_t n, const UnitPolicy& policy) {
  if (n == 0) throw InvalidArgument("qft_cost_closed_form: n must be at least 1");
  const auto sn = static_cast<std::int64_t>(n);
  switch (policy.kind) {
    case UnitPolicy::Kind::TauNMinusOne:
      return Dyadic(sn - 2) * Dyadic::pow2(sn - 1) + Dyadic(1);
    case UnitPolicy::Kind::TauZero:
    case UnitPolicy::Kind::Custom:
      return (Dyadic(sn) + Dyadic::pow2(1 - sn) - Dyadic(2)).scaled(static_cast<std::int64_t>(policy.unit_log2(n)));
  }
  return {};
}

Dyadic aqft_cost_closed_form(std::size_t n, std::size_t m, const UnitPolicy& policy) {
  if (n == 0 || m < 1 || m > n) {
    throw InvalidArgument("aqft_cost_closed_form: need 1 <= m <= n, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
  }
  const auto u = static_cast<std::int64_t>(policy.unit_log2(n));
  Dyadic total;
  for (std::size_t d = 1; d < m; ++d) {
    total += Dyadic(static_cast<std::int64_t>(n - d)) * Dyadic::pow2(u - static_cast<std::int64_t>(d));
  }
  return total;
}

std::uint64_t max_feasible_qubits(const HardwareModel& model, double tau0_seconds) {
  model.validate();
  if (model.mode != ControlMode::DurationControl) {
    throw InvalidArgument("max_feasible_qubits applies to duration control only");
  }
  const Dyadic tau0 = Dyadic::from_double(tau0_seconds);
  const Dyadic t_res = Dyadic::from_double(model.t_res);
  if (tau0 < t_res) {
    throw InfeasibleError("tau0 = " + std::to_string(tau0_seconds) + " s is below the time resolution t_R = " +
                          std::to_string(model.t_res) + " s");
  }
  return feasible_width(tau0, t_res);
}

IntensityRequirement intensity_requirement(std::size_t n, double b_min) {
  if (n == 0) throw InvalidArgument("intensity_requirement: n must be at least 1");
  if (!(b_min > 0.0) || !std::isfinite(b_min)) throw InvalidArgument("intensity_requirement: B_min must be positive");
  IntensityRequirement out;
  out.ratio = BigInt(1) << static_cast<unsigned>(n - 1);
  out.b_max = std::ldexp(b_min, static_cast<int>(std::min<std::size_t>(n - 1, 1u << 16)));
  return out;
}

std::string CurveKind::to_string() const {
  switch (kind) {
    case Kind::Qft: return "qft";
    case Kind::Aqft: return "aqft:" + std::to_string(m);
    case Kind::QftRoutedReduced: return "qft-routed-reduced";
  }
  return {};
}

std::optional<CurveKind> CurveKind::parse(const std::string& text) {
  if (text == "qft") return qft();
  if (text == "qft-routed-reduced") return qft_routed_reduced();
  if (text.rfind("aqft:", 0) == 0) {
    const auto m = parse_u64(std::string_view(text).substr(5));
    if (m && *m >= 1) return aqft(*m);
  }
  return std::nullopt;
}

namespace {

CostRow closed_form_row(std::size_t n, const HardwareModel& model, const CurveKind& kind) {
  const std::size_t m = kind.kind == CurveKind::Kind::Aqft ? std::min(kind.m, n) : n;
  CostRow row;
  row.n = n;
  if (model.mode == ControlMode::IntensityControl) {
    std::size_t gates = n;
    for (std::size_t d = 1; d < m; ++d) gates += n - d;
    row.relative_cost = Dyadic(static_cast<std::int64_t>(gates));
    row.feasible = lasts_long_enough(Dyadic(1), model);
    return row;
  }
  const auto u = static_cast<std::int64_t>(model.policy.unit_log2(n));
  const Dyadic controlled =
      m == n ? qft_cost_closed_form(n, model.policy) : aqft_cost_closed_form(n, m, model.policy);
  const Dyadic fixed = fixed_units(model);
  row.relative_cost = controlled + Dyadic(static_cast<std::int64_t>(n)) * fixed;

  std::optional<Dyadic> shortest;
  if (m >= 2) shortest = Dyadic::pow2(u - static_cast<std::int64_t>(m - 1));
  if (fixed.sign() > 0 && (!shortest || fixed < *shortest)) shortest = fixed;
  row.feasible = !shortest || lasts_long_enough(*shortest, model);
  row.n_b = duration_mode_nb(model, n);
  return row;
}

ir::Circuit materialize(std::size_t n, const CurveKind& kind) {
  switch (kind.kind) {
    case CurveKind::Kind::Qft:
      return synth::build_qft(n);
    case CurveKind::Kind::Aqft:
      return synth::build_aqft(n, std::min(kind.m, n));
    case CurveKind::Kind::QftRoutedReduced:
      return route::cancel_swaps(route::route_lnn(synth::build_qft(n))).circuit;
  }
  return synth::build_qft(n);
}

}  // namespace

std::vector<CostRow> cost_curve(std::size_t n_min, std::size_t n_max, const HardwareModel& model,
                                const CurveKind& kind, std::size_t cross_check_limit) {
  model.validate();
  if (n_min < 1 || n_min > n_max) {
    throw InvalidArgument("cost_curve: need 1 <= n_min <= n_max, got " + std::to_string(n_min) + ":" +
                          std::to_string(n_max));
  }
  const bool closed = kind.kind != CurveKind::Kind::QftRoutedReduced;
  const std::size_t cap = closed ? kClosedFormMaxQubits : kMaterializedMaxQubits;
  if (n_max > cap) {
    throw InvalidArgument("cost_curve: " + kind.to_string() + " is limited to n <= " + std::to_string(cap));
  }
  if (kind.kind == CurveKind::Kind::Aqft && kind.m < 1) throw InvalidArgument("cost_curve: AQFT cutoff must be >= 1");

  std::vector<CostRow> rows;
  rows.reserve(n_max - n_min + 1);
  for (std::size_t n = n_min; n <= n_max; ++n) {
    CostRow row;
    if (closed) {
      row = closed_form_row(n, model, kind);
      if (n <= cross_check_limit) {
        const CostReport built = circuit_cost(materialize(n, kind), model);
        if (built.total_relative != row.relative_cost || built.feasible != row.feasible || built.n_b != row.n_b) {
          throw std::logic_error("closed-form cost disagrees with the materialized circuit at n=" +
                                 std::to_string(n) + ": " + row.relative_cost.to_decimal_string() + " vs " +
                                 built.total_relative.to_decimal_string());
        }
      }
    } else {
      const CostReport built = circuit_cost(materialize(n, kind), model);
      row.n = n;
      row.relative_cost = built.total_relative;
      row.feasible = built.feasible;
      row.n_b = built.n_b;
    }
    row.policy = model.policy.to_string();
    row.mode = mode_name(model.mode);
    row.circuit = kind.to_string();
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_cost_csv(std::ostream& out, const std::vector<CostRow>& rows) {
  out << "n,relative_cost,feasible,n_b,policy,mode,circuit\n";
  for (const CostRow& row : rows) {
    out << row.n << ',' << row.relative_cost.to_decimal_string() << ',' << (row.feasible ? "true" : "false") << ',';
    if (row.n_b) out << *row.n_b;
    out << ',' << row.policy << ',' << row.mode << ',' << row.circuit << '\n';
  }
}

nlohmann::ordered_json cost_report_to_json(const CostReport& report) {
  nlohmann::ordered_json out;
  out["n"] = report.n;
  out["mode"] = mode_name(report.mode);
  out["policy"] = report.policy.to_string();
  out["total_relative"] = report.total_relative.to_decimal_string();
  out["total_seconds"] = report.total_seconds;
  out["breakdown"] = {
      {"controlled_rotation", report.breakdown.controlled_rotation.to_decimal_string()},
      {"single_qubit_rotation", report.breakdown.single_qubit_rotation.to_decimal_string()},
      {"fixed_gates", report.breakdown.fixed_gates.to_decimal_string()},
      {"swap", report.breakdown.swap.to_decimal_string()},
  };
  out["min_duration"] =
      report.min_duration ? nlohmann::ordered_json(report.min_duration->to_decimal_string()) : nullptr;
  out["feasible"] = report.feasible;
  out["n_b"] = report.n_b ? nlohmann::ordered_json(*report.n_b) : nullptr;
  out["intensity_ratio"] = report.intensity_ratio ? nlohmann::ordered_json(*report.intensity_ratio) : nullptr;
  return out;
}

SwapCosting compare_swap_costing(const ir::Circuit& circuit, const HardwareModel& model) {
  return {circuit_cost(circuit, model), circuit_cost(synth::lower_swaps(circuit, synth::XorMode::Physical), model)};
}

}  // namespace spinqft::cost
