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

#include "spinqft/route.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "spinqft/errors.hpp"
#include "spinqft/synth.hpp"

namespace spinqft::route {

using ir::Circuit;
using ir::Gate;
using ir::GateKind;
using ir::Qubit;

namespace {

bool is_adjacent_swap(const Gate& g) {
  return g.kind() == GateKind::Swap && std::max(g.target(), g.control()) - std::min(g.target(), g.control()) == 1;
}

bool same_wires(const Gate& a, const Gate& b) {
  return std::minmax(a.target(), a.control()) == std::minmax(b.target(), b.control());
}

Qubit meeting_point(const Gate& gate, Qubit lo, Qubit hi, const RoutingStrategy& strategy) {
  switch (strategy.kind) {
    case RoutingStrategy::Kind::MoveTargetToControl:
      return gate.target() == lo ? hi - 1 : lo;
    case RoutingStrategy::Kind::MoveControlToTarget:
      return gate.control() == hi ? lo : hi - 1;
    case RoutingStrategy::Kind::MeetAt:
      return std::clamp<Qubit>(strategy.meet, lo, hi - 1);
  }
  return lo;
}

std::size_t count_swaps(const Circuit& c) { return ir::gate_census(c)[GateKind::Swap]; }

}  // namespace

std::string RoutingStrategy::to_string() const {
  switch (kind) {
    case Kind::MoveControlToTarget: return "control-to-target";
    case Kind::MoveTargetToControl: return "target-to-control";
    case Kind::MeetAt: return "meet:" + std::to_string(meet);
  }
  return {};
}

std::optional<RoutingStrategy> RoutingStrategy::parse(const std::string& text) {
  if (text == "control-to-target") return control_to_target();
  if (text == "target-to-control") return target_to_control();
  if (text.rfind("meet:", 0) == 0) {
    Qubit l = 0;
    const char* first = text.data() + 5;
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, l);
    if (ec == std::errc() && ptr == last && first != last) return meet_at(l);
  }
  return std::nullopt;
}

RoutedCircuit route_lnn(const Circuit& circuit, RoutingStrategy strategy) {
  const std::size_t n = circuit.num_qubits();
  Circuit out(n, ir::Stage::Routed);
  std::vector<Qubit> position(n);
  std::iota(position.begin(), position.end(), Qubit{0});

  // Inserted swaps are tracked on `position` so the closing permutation can be
  // checked; swaps that were already in the input are logical operations.
  auto emit_swap = [&](Qubit a, Qubit b) {
    out.append(Gate::swap(a, b));
    for (Qubit& p : position) {
      if (p == a) {
        p = b;
      } else if (p == b) {
        p = a;
      }
    }
  };

  for (const Gate& gate : circuit) {
    if (gate.arity() == 1) {
      out.append(gate);
      continue;
    }
    const Qubit lo = std::min(gate.target(), gate.control());
    const Qubit hi = std::max(gate.target(), gate.control());
    if (hi - lo == 1) {
      out.append(gate);
      continue;
    }
    const Qubit l = meeting_point(gate, lo, hi, strategy);

    std::vector<std::pair<Qubit, Qubit>> chain;
    for (Qubit p = hi; p > l + 1; --p) chain.emplace_back(p - 1, p);
    for (Qubit p = lo; p < l; ++p) chain.emplace_back(p + 1, p);
    for (const auto& [a, b] : chain) emit_swap(a, b);

    std::vector<Qubit> mapping(n);
    std::iota(mapping.begin(), mapping.end(), Qubit{0});
    mapping[lo] = l;
    mapping[hi] = l + 1;
    out.append(gate.relabeled(mapping));

    for (auto it = chain.rbegin(); it != chain.rend(); ++it) emit_swap(it->second, it->first);
  }

  RoutedCircuit routed{std::move(out), 0, {}};
  routed.swap_count = count_swaps(routed.circuit);
  routed.logical_to_physical = std::move(position);
  return routed;
}

RoutedCircuit cancel_swaps(const RoutedCircuit& routed) {
  const ir::Stage stage = routed.circuit.stage();
  if (stage != ir::Stage::Routed && stage != ir::Stage::Reduced) {
    throw InvalidArgument("cancel_swaps expects a routed circuit, got stage \"" +
                          std::string(ir::stage_name(stage)) + "\"");
  }
  const auto& gates = routed.circuit.gates();
  const std::size_t n = routed.circuit.num_qubits();

  // Per-wire stacks of surviving gate indices. When a swap finds the same
  // swap on top of both of its wires, nothing in between touches either wire
  // and the pair cancels. Popping exposes earlier gates to later swaps, so one
  // pass reaches the fixed point.
  std::vector<std::vector<std::size_t>> top(n);
  std::vector<bool> alive(gates.size(), true);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (is_adjacent_swap(g)) {
      auto& wa = top[g.target()];
      auto& wb = top[g.control()];
      if (!wa.empty() && !wb.empty() && wa.back() == wb.back()) {
        const std::size_t prev = wa.back();
        if (is_adjacent_swap(gates[prev]) && same_wires(gates[prev], g)) {
          alive[prev] = false;
          alive[i] = false;
          wa.pop_back();
          wb.pop_back();
          continue;
        }
      }
    }
    for (const Qubit q : g.qubits()) top[q].push_back(i);
  }

  Circuit out(n, ir::Stage::Reduced);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (alive[i]) out.append(gates[i]);
  }
  RoutedCircuit reduced{std::move(out), 0, routed.logical_to_physical};
  reduced.swap_count = count_swaps(reduced.circuit);
  return reduced;
}

std::uint64_t naive_swap_formula(std::uint64_t n) { return n == 0 ? 0 : (n - 1) * n * (2 * n - 1) / 6; }

std::uint64_t reduced_swap_formula(std::uint64_t n) { return n < 2 ? 0 : (n - 1) * (n - 2); }

SwapOverheadReport make_swap_report(const Circuit& original, RoutingStrategy strategy, bool reduce) {
  SwapOverheadReport report;
  report.n = original.num_qubits();
  report.strategy = strategy;
  const RoutedCircuit routed = route_lnn(original, strategy);
  report.measured = routed.swap_count;
  report.paper_naive = naive_swap_formula(report.n);
  report.paper_reduced = reduced_swap_formula(report.n);
  report.naive_matches = report.measured == report.paper_naive;
  if (reduce) {
    report.reduced_measured = cancel_swaps(routed).swap_count;
    report.reduced_matches = *report.reduced_measured == report.paper_reduced;
  }
  return report;
}

SwapOverheadReport swap_overhead_report(std::size_t n, RoutingStrategy strategy, bool reduce,
                                        bool include_bit_reversal) {
  if (n < 2) throw InvalidArgument("swap_overhead_report: n must be at least 2");
  return make_swap_report(synth::build_qft(n, include_bit_reversal), strategy, reduce);
}

nlohmann::ordered_json report_to_json(const SwapOverheadReport& report) {
  nlohmann::ordered_json out;
  out["n"] = report.n;
  out["strategy"] = report.strategy.to_string();
  out["measured"] = report.measured;
  out["paper_naive"] = report.paper_naive;
  out["paper_reduced"] = report.paper_reduced;
  out["reduced_measured"] = report.reduced_measured ? nlohmann::ordered_json(*report.reduced_measured) : nullptr;
  out["naive_matches"] = report.naive_matches;
  out["reduced_matches"] = report.reduced_matches ? nlohmann::ordered_json(*report.reduced_matches) : nullptr;
  return out;
}

}  // namespace spinqft::route
