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
 * @file cost.hpp
 * @brief Time-cost of circuits on nuclear-spin hardware.
 *
 * Two control modes exist. In duration control a rotation by theta is a
 * fixed-intensity field applied for a time proportional to |theta|, so the
 * cost of a gate is |theta| / theta_unit in units of t_unit. In intensity
 * control the field strength sets the angle and every gate takes one t_unit,
 * but the field has to span the full range of angles.
 *
 * The unit policy names the rotation that takes exactly one t_unit:
 *   TauZero       -> pi          (tau_0, fixed intensity)
 *   TauNMinusOne  -> pi/2^(n-1)  (tau_{n-1}, intensity rescaled with n)
 *   Custom(b)     -> pi/2^b
 *
 * All relative costs are exact dyadic rationals. Doubles appear only when
 * converting to seconds or tesla.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinqft/circuit.hpp"
#include "spinqft/dyadic.hpp"

namespace spinqft::cost {

enum class ControlMode { DurationControl, IntensityControl };

std::string mode_name(ControlMode mode);
std::optional<ControlMode> mode_from_name(const std::string& name);

struct UnitPolicy {
  enum class Kind { TauZero, TauNMinusOne, Custom };

  Kind kind = Kind::TauNMinusOne;
  std::uint64_t custom_log2 = 0;  ///< reference rotation pi / 2^custom_log2

  static UnitPolicy tau_zero() { return {Kind::TauZero, 0}; }
  static UnitPolicy tau_n_minus_one() { return {Kind::TauNMinusOne, 0}; }
  /// The reference must be pi / 2^b for some b >= 0 so that every duration
  /// stays dyadic; anything else throws InvalidArgument.
  static UnitPolicy custom(const DyadicAngle& reference);

  /// u such that theta_unit = pi / 2^u for an n-qubit circuit.
  std::uint64_t unit_log2(std::size_t n) const;

  /// "tau0", "tauN", "custom:<b>".
  std::string to_string() const;
  static std::optional<UnitPolicy> parse(const std::string& text);

  friend bool operator==(const UnitPolicy&, const UnitPolicy&) = default;
};

/**
 * Hardware parameters. `t_ref` is the duration in seconds of one t_unit, i.e.
 * of the policy's reference rotation; under TauZero that is the time per pi.
 */
struct HardwareModel {
  ControlMode mode = ControlMode::DurationControl;
  UnitPolicy policy = UnitPolicy::tau_n_minus_one();
  double t_res = 1e-6;            ///< time resolution t_R, seconds
  double t_ref = 1e-6;            ///< seconds per t_unit
  double fixed_gate_time = 0.0;   ///< seconds for H, Xor, Swap and Ry(+-pi/2)
  std::optional<double> b_min;    ///< tesla realizing the smallest rotation

  /// Throws InvalidArgument unless t_res > 0, t_ref > 0, fixed_gate_time >= 0
  /// and b_min (when set) > 0.
  void validate() const;
};

enum class CostClass { ControlledRotation, SingleQubitRotation, FixedGate, Swap };

CostClass cost_class(const ir::Gate& gate);

struct CostBreakdown {
  Dyadic controlled_rotation;
  Dyadic single_qubit_rotation;
  Dyadic fixed_gates;
  Dyadic swap;

  Dyadic total() const { return controlled_rotation + single_qubit_rotation + fixed_gates + swap; }
  Dyadic& operator[](CostClass c);
};

struct CostReport {
  std::size_t n = 0;
  ControlMode mode = ControlMode::DurationControl;
  UnitPolicy policy;
  Dyadic total_relative;
  double total_seconds = 0.0;
  CostBreakdown breakdown;
  /// Shortest non-zero gate duration, in t_unit.
  std::optional<Dyadic> min_duration;
  /// Every executed gate lasts at least t_R.
  bool feasible = true;
  /// Duration mode: largest width whose rotations all fit at the intensity
  /// this run uses (0 when even tau_0 < t_R).
  std::optional<std::uint64_t> n_b;
  /// Intensity mode: pi / smallest non-zero rotation, i.e. B_max / B_min.
  std::optional<double> intensity_ratio;
};

/// Duration of one gate in units of t_unit. Angles are reduced to (-pi, pi]
/// first; a zero angle costs nothing.
Dyadic gate_duration(const ir::Gate& gate, const HardwareModel& model, std::size_t n);

CostReport circuit_cost(const ir::Circuit& circuit, const HardwareModel& model);

/// Controlled-rotation cost of build_qft(n) under `policy` in duration mode:
/// TauZero n + 2^(1-n) - 2, TauNMinusOne (n-2) 2^(n-1) + 1, Custom(b) scales
/// the TauZero value by 2^b. n = 1 gives 0.
Dyadic qft_cost_closed_form(std::size_t n, const UnitPolicy& policy);

/// Same for build_aqft(n, m): sum over d < m of (n - d) 2^(u - d).
Dyadic aqft_cost_closed_form(std::size_t n, std::size_t m, const UnitPolicy& policy);

/// Largest n with tau0 / 2^(n-1) >= t_R, compared exactly.
/// Requires duration mode; throws InfeasibleError when tau0 < t_R.
std::uint64_t max_feasible_qubits(const HardwareModel& model, double tau0_seconds);

struct IntensityRequirement {
  double b_max = 0.0;  ///< tesla
  BigInt ratio;        ///< B_max / B_min = 2^(n-1)
};

IntensityRequirement intensity_requirement(std::size_t n, double b_min);

struct CurveKind {
  enum class Kind { Qft, Aqft, QftRoutedReduced };
  Kind kind = Kind::Qft;
  std::size_t m = 0;  ///< AQFT cutoff; rows with n < m use the exact QFT

  static CurveKind qft() { return {Kind::Qft, 0}; }
  static CurveKind aqft(std::size_t m) { return {Kind::Aqft, m}; }
  static CurveKind qft_routed_reduced() { return {Kind::QftRoutedReduced, 0}; }

  /// "qft", "aqft:<m>", "qft-routed-reduced".
  std::string to_string() const;
  static std::optional<CurveKind> parse(const std::string& text);
};

struct CostRow {
  std::size_t n = 0;
  Dyadic relative_cost;
  bool feasible = true;
  std::optional<std::uint64_t> n_b;
  std::string policy;
  std::string mode;
  std::string circuit;
};

inline constexpr std::size_t kClosedFormMaxQubits = 4096;
inline constexpr std::size_t kMaterializedMaxQubits = 64;

/**
 * One row per n in [n_min, n_max]. Qft and Aqft rows come from closed forms
 * (n_max <= 4096); routed rows materialize the circuit (n_max <= 64). For
 * closed-form rows with n <= cross_check_limit the circuit is also built and
 * costed, and any disagreement throws std::logic_error.
 */
std::vector<CostRow> cost_curve(std::size_t n_min, std::size_t n_max, const HardwareModel& model,
                                const CurveKind& kind, std::size_t cross_check_limit = 16);

/// Header "n,relative_cost,feasible,n_b,policy,mode,circuit", one line per row.
void write_cost_csv(std::ostream& out, const std::vector<CostRow>& rows);

nlohmann::ordered_json cost_report_to_json(const CostReport& report);

/// The same circuit costed with Swap as an opaque fixed-time gate and with
/// every Swap expanded into three physical Xor sequences.
struct SwapCosting {
  CostReport opaque;
  CostReport lowered;
};

SwapCosting compare_swap_costing(const ir::Circuit& circuit, const HardwareModel& model);

}  // namespace spinqft::cost
