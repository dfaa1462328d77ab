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

#include "spinqft/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinqft/circuit_json.hpp"
#include "spinqft/cost.hpp"
#include "spinqft/errors.hpp"
#include "spinqft/route.hpp"
#include "spinqft/simulate.hpp"
#include "spinqft/synth.hpp"

namespace spinqft::cli {

namespace {

/// Thrown for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Primary output goes to the -o target; the summary goes wherever the primary
// output does not.
class Sink {
 public:
  Sink(const std::string& path, Streams& io) : io_(io), to_stdout_(path.empty() || path == "-") {
    if (!to_stdout_) {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& primary() { return to_stdout_ ? io_.out : file_; }
  std::ostream& summary() { return to_stdout_ ? io_.err : io_.out; }

 private:
  Streams& io_;
  bool to_stdout_;
  std::ofstream file_;
};

ir::Circuit load_circuit(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return ir::parse_circuit(buffer.str());
  }
  return ir::read_circuit_file(path);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const auto n = std::stoull(text, &used);
      if (used == text.size()) return {n, n};
    } else {
      const std::string lo_text = text.substr(0, colon);
      const std::string hi_text = text.substr(colon + 1);
      std::size_t used_hi = 0;
      const auto lo = std::stoull(lo_text, &used);
      const auto hi = std::stoull(hi_text, &used_hi);
      if (used == lo_text.size() && used_hi == hi_text.size()) return {lo, hi};
    }
  } catch (const std::exception&) {
  }
  throw UsageError("--n-range expects N or LO:HI, got \"" + text + "\"");
}

// ---------------------------------------------------------------- build

struct BuildOptions {
  long long n = 0;
  long long approx = 0;
  bool bit_reversal = false;
  std::string level = "logical";
  std::string xor_mode = "ideal";
  std::string output = "-";
};

int cmd_build(const BuildOptions& opt, Streams& io) {
  if (opt.n < 1) throw UsageError("build: n must be a positive integer, got " + std::to_string(opt.n));
  const auto n = static_cast<std::size_t>(opt.n);
  ir::Circuit circuit = opt.approx > 0 ? synth::build_aqft(n, static_cast<std::size_t>(opt.approx), opt.bit_reversal)
                                       : synth::build_qft(n, opt.bit_reversal);
  const auto level = synth::level_from_name(opt.level);
  const auto mode = synth::xor_mode_from_name(opt.xor_mode);
  if (*level != synth::LoweringLevel::Logical) circuit = synth::lower_circuit(circuit, *level, *mode);

  Sink sink(opt.output, io);
  sink.primary() << ir::dump_circuit(circuit);
  sink.summary() << "census: " << ir::gate_census(circuit).to_string() << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------- route

struct RouteOptions {
  std::string input = "-";
  std::string strategy = "target-to-control";
  bool reduce = false;
  std::string output = "-";
  std::string report;
};

int cmd_route(const RouteOptions& opt, Streams& io) {
  const auto strategy = route::RoutingStrategy::parse(opt.strategy);
  if (!strategy) throw UsageError("unknown routing strategy \"" + opt.strategy + "\"");
  const ir::Circuit original = load_circuit(opt.input, io.in);

  route::RoutedCircuit routed = route::route_lnn(original, *strategy);
  const std::size_t routed_swaps = routed.swap_count;
  if (opt.reduce) routed = route::cancel_swaps(routed);

  route::SwapOverheadReport report;
  report.n = original.num_qubits();
  report.strategy = *strategy;
  report.measured = routed_swaps;
  report.paper_naive = route::naive_swap_formula(report.n);
  report.paper_reduced = route::reduced_swap_formula(report.n);
  report.naive_matches = report.measured == report.paper_naive;
  if (opt.reduce) {
    report.reduced_measured = routed.swap_count;
    report.reduced_matches = routed.swap_count == report.paper_reduced;
  }
  nlohmann::ordered_json json = route::report_to_json(report);
  json["all_adjacent"] = std::all_of(routed.circuit.begin(), routed.circuit.end(), [](const ir::Gate& g) {
    return g.arity() == 1 || std::max(g.target(), g.control()) - std::min(g.target(), g.control()) == 1;
  });

  Sink sink(opt.output, io);
  sink.primary() << ir::dump_circuit(routed.circuit);
  if (!opt.report.empty()) {
    std::ofstream file(opt.report);
    if (!file) throw UsageError("cannot write " + opt.report);
    file << json.dump(2) << '\n';
  } else {
    sink.summary() << json.dump(2) << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string input = "-";
  std::string against = "dft";
  double tol = 1e-10;
};

int cmd_verify(const VerifyOptions& opt, Streams& io) {
  const ir::Circuit circuit = load_circuit(opt.input, io.in);
  const sim::UnitaryMatrix u = sim::circuit_unitary(circuit);
  sim::UnitaryMatrix reference;
  if (opt.against == "dft") {
    reference = sim::dft_matrix(circuit.num_qubits());
  } else {
    std::istringstream unused;
    const ir::Circuit other = load_circuit(opt.against, unused);
    if (other.num_qubits() != circuit.num_qubits()) {
      io.out << "equal: false\nreason: width " << circuit.num_qubits() << " vs " << other.num_qubits() << '\n';
      return kMismatch;
    }
    reference = sim::circuit_unitary(other);
  }
  const sim::PhaseEquivalence eq = sim::equal_up_to_global_phase(u, reference, opt.tol);
  io.out << std::setprecision(15);
  io.out << "equal: " << (eq.equal ? "true" : "false") << '\n';
  if (eq.phase) {
    io.out << "phase: " << eq.phase->real() << ',' << eq.phase->imag() << '\n';
  } else {
    io.out << "phase: none\n";
  }
  io.out << "residual: " << eq.residual << '\n';
  return eq.equal ? kSuccess : kMismatch;
}

// ---------------------------------------------------------------- cost

struct CostOptions {
  std::string input;
  std::string curve;
  std::string mode = "duration";
  std::string policy = "tauN";
  double t_res = 1e-6;
  double t_ref = 1e-6;
  std::optional<double> tau0;
  double fixed_gate_time = 0.0;
  std::optional<double> b_min;
  double b_feasible = 45.0;
  std::string n_range;
  bool cross_check = false;
  bool swap_costing = false;
  std::string output = "-";
};

int cmd_cost(const CostOptions& opt, Streams& io) {
  if (opt.input.empty() == opt.curve.empty()) {
    throw UsageError("cost: give exactly one of an input circuit or --closed-form/--curve");
  }
  cost::HardwareModel model;
  model.mode = *cost::mode_from_name(opt.mode);
  const auto policy = cost::UnitPolicy::parse(opt.policy);
  if (!policy) throw UsageError("unknown unit policy \"" + opt.policy + "\"");
  model.policy = *policy;
  model.t_res = opt.t_res;
  model.t_ref = opt.t_ref;
  model.fixed_gate_time = opt.fixed_gate_time;
  model.b_min = opt.b_min;
  if (opt.tau0 && model.policy.kind == cost::UnitPolicy::Kind::TauZero) model.t_ref = *opt.tau0;
  model.validate();

  std::optional<std::uint64_t> n_b;
  if (opt.tau0) {
    if (*opt.tau0 < model.t_res) {
      io.err << std::setprecision(15) << "infeasible model: tau0 = " << *opt.tau0
             << " s is below the time resolution t_R = " << model.t_res << " s\n"
             << R"({"feasible": false, "reason": "tau0 < t_R"})" << '\n';
      return kInfeasible;
    }
    cost::HardwareModel duration = model;
    duration.mode = cost::ControlMode::DurationControl;
    n_b = cost::max_feasible_qubits(duration, *opt.tau0);
  }

  Sink sink(opt.output, io);
  if (n_b) sink.summary() << "n_b: " << *n_b << '\n';

  if (!opt.input.empty()) {
    const ir::Circuit circuit = load_circuit(opt.input, io.in);
    if (opt.swap_costing) {
      const cost::SwapCosting both = cost::compare_swap_costing(circuit, model);
      nlohmann::ordered_json json;
      json["opaque"] = cost::cost_report_to_json(both.opaque);
      json["lowered"] = cost::cost_report_to_json(both.lowered);
      sink.primary() << json.dump(2) << '\n';
    } else {
      sink.primary() << cost::cost_report_to_json(cost::circuit_cost(circuit, model)).dump(2) << '\n';
    }
    return kSuccess;
  }

  const auto kind = cost::CurveKind::parse(opt.curve);
  if (!kind) throw UsageError("unknown circuit family \"" + opt.curve + "\"");
  if (opt.n_range.empty()) throw UsageError("--n-range is required with --closed-form/--curve");
  const auto [lo, hi] = parse_range(opt.n_range);
  const std::size_t check_limit = opt.cross_check ? cost::kMaterializedMaxQubits : 0;
  const std::vector<cost::CostRow> rows = cost::cost_curve(lo, hi, model, *kind, check_limit);
  cost::write_cost_csv(sink.primary(), rows);

  if (model.mode == cost::ControlMode::IntensityControl) {
    const double b_min = model.b_min.value_or(1e-3);
    std::ostream& s = sink.summary();
    s << std::setprecision(15);
    for (std::size_t n = lo; n <= hi; ++n) {
      const cost::IntensityRequirement req = cost::intensity_requirement(n, b_min);
      s << "n=" << n << " B_min=" << b_min << " T B_max=" << req.b_max << " T ratio=2^" << (n - 1);
      if (req.b_max > opt.b_feasible) s << " exceeds feasible field (" << opt.b_feasible << " T)";
      s << '\n';
    }
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams io{in, out, err};
  CLI::App app{"spinqft: QFT synthesis, LNN routing and time-cost models for nuclear-spin registers"};
  app.name("spinqft");
  app.require_subcommand(1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Synthesize a QFT/AQFT circuit");
  build_cmd->add_option("n", build.n, "Number of qubits")->required();
  build_cmd->add_option("--approx", build.approx, "AQFT cutoff m: drop controlled phases of distance >= m");
  build_cmd->add_flag("--bit-reversal", build.bit_reversal, "Append the bit-reversal swaps");
  build_cmd->add_option("--lower", build.level, "Lowering level")
      ->check(CLI::IsMember({"logical", "xor", "elementary"}));
  build_cmd->add_option("--xor-mode", build.xor_mode, "Xor realization")->check(CLI::IsMember({"ideal", "physical"}));
  build_cmd->add_option("-o,--output", build.output, "Circuit JSON output ('-' for stdout)");

  RouteOptions route_opt;
  auto* route_cmd = app.add_subcommand("route", "Route a circuit onto a linear nearest-neighbour chain");
  route_cmd->add_option("input", route_opt.input, "Circuit JSON ('-' for stdin)");
  route_cmd->add_option("--strategy", route_opt.strategy, "target-to-control | control-to-target | meet:L");
  route_cmd->add_flag("--reduce", route_opt.reduce, "Cancel redundant swap pairs");
  route_cmd->add_option("-o,--output", route_opt.output, "Routed circuit JSON output ('-' for stdout)");
  route_cmd->add_option("--report", route_opt.report, "Swap report JSON output");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare a circuit's unitary with the DFT or another circuit");
  verify_cmd->add_option("input", verify.input, "Circuit JSON ('-' for stdin)");
  verify_cmd->add_option("--against", verify.against, "'dft' or a circuit JSON path");
  verify_cmd->add_option("--tol", verify.tol, "Frobenius tolerance")->check(CLI::PositiveNumber);

  CostOptions cost_opt;
  auto* cost_cmd = app.add_subcommand("cost", "Time-cost of a circuit or a cost curve");
  cost_cmd->add_option("input", cost_opt.input, "Circuit JSON ('-' for stdin)");
  cost_cmd->add_option("--closed-form,--curve", cost_opt.curve, "qft | aqft:M | qft-routed-reduced");
  cost_cmd->add_option("--mode", cost_opt.mode, "Control mode")->check(CLI::IsMember({"duration", "intensity"}));
  cost_cmd->add_option("--policy", cost_opt.policy, "Unit time: tau0 | tauN | custom:B");
  cost_cmd->add_option("--t-res", cost_opt.t_res, "Time resolution t_R in seconds");
  cost_cmd->add_option("--t-ref", cost_opt.t_ref, "Seconds per unit time");
  cost_cmd->add_option("--tau0", cost_opt.tau0, "Duration of a pi rotation in seconds");
  cost_cmd->add_option("--fixed-gate-time", cost_opt.fixed_gate_time, "Seconds for H, Xor, Swap");
  cost_cmd->add_option("--b-min", cost_opt.b_min, "Field (T) realizing the smallest rotation");
  cost_cmd->add_option("--b-feasible", cost_opt.b_feasible, "Largest field (T) considered achievable");
  cost_cmd->add_option("--n-range", cost_opt.n_range, "N or LO:HI");
  cost_cmd->add_flag("--cross-check", cost_opt.cross_check, "Also cost materialized circuits (n <= 64)");
  cost_cmd->add_flag("--swap-costing", cost_opt.swap_costing, "Report opaque and lowered swap costing");
  cost_cmd->add_option("-o,--output", cost_opt.output, "CSV/JSON output ('-' for stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "spinqft: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*build_cmd) return cmd_build(build, io);
    if (*route_cmd) return cmd_route(route_opt, io);
    if (*verify_cmd) return cmd_verify(verify, io);
    if (*cost_cmd) return cmd_cost(cost_opt, io);
  } catch (const UsageError& e) {
    err << "spinqft: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "spinqft: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "spinqft: " << e.what() << '\n';
    return kUsage;
  } catch (const IndexError& e) {
    err << "spinqft: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "spinqft: capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const InfeasibleError& e) {
    err << "spinqft: infeasible model: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::logic_error& e) {
    err << "spinqft: cross-check failed: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace spinqft::cli
