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
 * @file route.hpp
 * @brief Linear nearest-neighbour routing by swap conjugation.
 *
 * A two-qubit gate on qubits lo < hi with hi - lo > 1 is realized by moving
 * the data of hi down to l+1 and the data of lo up to l with adjacent swaps,
 * applying the gate on (l, l+1), and undoing the swaps in reverse. The
 * strategies pick l:
 *   - MoveControlToTarget: the control's data travels next to the target.
 *   - MoveTargetToControl: the target's data travels next to the control.
 *   - MeetAt(l): both travel, meeting on (l, l+1); l is clamped into
 *     [lo, hi-1] per gate.
 * Each routed gate costs 2 (hi - lo - 1) swaps.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinqft/circuit.hpp"

namespace spinqft::route {

struct RoutingStrategy {
  enum class Kind { MoveControlToTarget, MoveTargetToControl, MeetAt };

  Kind kind = Kind::MoveTargetToControl;
  ir::Qubit meet = 0;  ///< only for MeetAt

  static RoutingStrategy control_to_target() { return {Kind::MoveControlToTarget, 0}; }
  static RoutingStrategy target_to_control() { return {Kind::MoveTargetToControl, 0}; }
  static RoutingStrategy meet_at(ir::Qubit l) { return {Kind::MeetAt, l}; }

  /// "control-to-target", "target-to-control" or "meet:<l>".
  std::string to_string() const;
  static std::optional<RoutingStrategy> parse(const std::string& text);

  friend bool operator==(const RoutingStrategy&, const RoutingStrategy&) = default;
};

struct RoutedCircuit {
  ir::Circuit circuit;
  /// Number of Swap gates in `circuit`.
  std::size_t swap_count = 0;
  /// Where each logical qubit's data sits after the last gate. Routing undoes
  /// every chain it opens, so this is the identity.
  std::vector<ir::Qubit> logical_to_physical;
};

/// Replaces non-adjacent two-qubit gates by their swap-conjugated adjacent
/// form. Adjacent and single-qubit gates pass through. Stage becomes Routed.
RoutedCircuit route_lnn(const ir::Circuit& circuit,
                        RoutingStrategy strategy = RoutingStrategy::target_to_control());

/**
 * Deletes pairs of identical adjacent swaps (same unordered pair of
 * neighbouring wires) that are separated only by gates touching neither wire.
 * Runs to a fixed point. Accepts Routed or Reduced input and tags the result
 * Reduced; throws InvalidArgument for any other stage.
 */
RoutedCircuit cancel_swaps(const RoutedCircuit& routed);

/// (n-1) n (2n-1) / 6
std::uint64_t naive_swap_formula(std::uint64_t n);
/// (n-1) (n-2)
std::uint64_t reduced_swap_formula(std::uint64_t n);

struct SwapOverheadReport {
  std::size_t n = 0;
  RoutingStrategy strategy;
  std::size_t measured = 0;
  std::uint64_t paper_naive = 0;
  std::uint64_t paper_reduced = 0;
  std::optional<std::size_t> reduced_measured;
  bool naive_matches = false;
  std::optional<bool> reduced_matches;
};

/// Routes `original` (and optionally reduces it), comparing the counts with
/// the closed-form swap estimates for a width-n QFT.
SwapOverheadReport make_swap_report(const ir::Circuit& original, RoutingStrategy strategy, bool reduce);

/// Same, for build_qft(n). Requires n >= 2.
SwapOverheadReport swap_overhead_report(std::size_t n, RoutingStrategy strategy, bool reduce,
                                        bool include_bit_reversal = false);

/// {"n","strategy","measured","paper_naive","paper_reduced","reduced_measured",
///  "naive_matches","reduced_matches"}; absent reductions are null.
nlohmann::ordered_json report_to_json(const SwapOverheadReport& report);

}  // namespace spinqft::route
