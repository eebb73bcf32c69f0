// Copyright 2026 The vtqg Authors
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

// Command-line front end: experiment, decompose, route, report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vtqg/errors.hpp"
#include "vtqg/harness.hpp"
#include "vtqg/qpd.hpp"
#include "vtqg/routing.hpp"
#include "vtqg/tfim.hpp"

namespace {

using namespace vtqg;

nlohmann::json read_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(is);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

struct ExperimentArgs {
  std::string config;
  std::vector<std::string> variants;
  std::vector<std::size_t> qubits;
  std::string mode;
  std::optional<std::size_t> shots;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format = "csv";
  std::string grouping;
  std::string allocation;
  bool no_timing = false;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  const nlohmann::json file = a.config.empty() ? nlohmann::json::object() : read_json(a.config);
  nlohmann::json overlay = nlohmann::json::object();
  if (!a.variants.empty()) overlay["variants"] = a.variants;
  if (!a.mode.empty()) overlay["mode"] = a.mode;
  if (!a.grouping.empty()) overlay["grouping"] = a.grouping;
  if (!a.allocation.empty()) overlay["shot_allocation"] = a.allocation;
  if (a.shots) overlay["shots"] = *a.shots;
  if (a.reps) overlay["repetitions"] = *a.reps;
  if (a.seed) overlay["seed"] = *a.seed;
  if (a.no_timing) overlay["record_timing"] = false;
  if (!file.is_object()) throw InvalidArgument(a.config + ": config must be a JSON object");
  nlohmann::json merged = file;
  for (const auto& [key, value] : overlay.items()) merged[key] = value;
  const ExperimentConfig cfg = config_from_json(merged);
  const OutputFormat format = output_format_from_string(a.format);

  std::vector<std::size_t> sizes = a.qubits;
  if (sizes.empty()) sizes.push_back(cfg.params.n_qubits);
  std::vector<ResultRecord> all;
  for (std::size_t n : sizes) {
    ExperimentConfig c = cfg;
    c.params.n_qubits = n;
    auto recs = run_experiment(c);
    all.insert(all.end(), recs.begin(), recs.end());
  }

  if (a.out.empty()) {
    if (format == OutputFormat::Csv) {
      write_csv(std::cout, all);
    } else {
      std::cout << records_to_json(all).dump(2) << '\n';
    }
  } else {
    emit_results(all, format, a.out);
  }
  return 0;
}

struct DecomposeArgs {
  double theta = 0.787;
  std::string manifest;
  std::size_t qubits = 8;
  std::size_t steps = 1;
  bool grouped = false;
};

int run_decompose_cmd(const DecomposeArgs& a) {
  const auto terms = decompose_vrzz(a.theta);
  std::printf("theta = %.17g\n", a.theta);
  std::printf("%-3s %-9s %-3s %-3s %24s\n", "k", "family", "a", "b", "coefficient");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const QpdTerm& t = terms[k];
    std::printf("%-3zu %-9s %-3s %-3s %24.17g\n", k, std::string(to_string(t.family)).c_str(),
                to_string(t.op_a).c_str(), to_string(t.op_b).c_str(), t.coefficient);
  }
  std::printf("gamma = %.17g\n", vtqg::gamma(a.theta));
  const auto groups = group_for_sampling(terms);
  std::printf("grouped instruments:\n");
  for (const auto& g : groups) {
    std::printf("  %24.17g  %-12s %-12s\n", g.weight, to_string(g.side_a).c_str(),
                to_string(g.side_b).c_str());
  }

  if (!a.manifest.empty()) {
    TfimParams p;
    p.n_qubits = a.qubits;
    p.n_steps = a.steps;
    const auto tc = build_trotter_circuit(p, Variant::Vtqg);
    FragmentOptions opts;
    opts.mode = a.grouped ? FragmentMode::Grouped : FragmentMode::Enumerated;
    const auto fragments = expand_fragments(tc, opts);
    std::ofstream os(a.manifest);
    if (!os) throw std::runtime_error("cannot open '" + a.manifest + "' for writing");
    os << manifest_to_json(fragments, tc.cuts).dump(2) << '\n';
    std::printf("wrote %zu fragments to %s\n", fragments.size(), a.manifest.c_str());
  }
  return 0;
}

int run_route_cmd(const std::vector<std::size_t>& qubits, const std::string& coupling_path) {
  std::optional<CouplingMap> coupling;
  if (!coupling_path.empty()) coupling = coupling_from_json(read_json(coupling_path));
  std::printf("%4s %6s %18s\n", "N", "swaps", "cnot_equivalents");
  for (std::size_t n : qubits) {
    const CouplingMap map = coupling ? *coupling : CouplingMap::path(n);
    const auto r = route_ring_closure(n, map);
    std::printf("%4zu %6zu %18zu\n", n, r.swap_count, 3 * r.swap_count);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual two-qubit gate experiments"};
  app.require_subcommand(1);

  ExperimentArgs ea;
  auto* exp = app.add_subcommand("experiment", "Run the TFIM experiment and emit results");
  exp->add_option("--config", ea.config, "JSON experiment configuration")->check(CLI::ExistingFile);
  exp->add_option("--variant", ea.variants, "routed_original, vtqg, vtqg_pet or ideal")
      ->delimiter(',');
  exp->add_option("--qubits", ea.qubits, "Chain sizes, e.g. 4,6,8")->delimiter(',');
  exp->add_option("--mode", ea.mode, "exact or sampling");
  exp->add_option("--shots", ea.shots, "Shots per circuit");
  exp->add_option("--reps", ea.reps, "Repetitions per variant");
  exp->add_option("--seed", ea.seed, "Base seed");
  exp->add_option("--out", ea.out, "Output path (stdout when omitted)");
  exp->add_option("--format", ea.format, "csv or json");
  exp->add_option("--grouping", ea.grouping, "auto, enumerated or grouped");
  exp->add_option("--allocation", ea.allocation, "per_fragment or proportional");
  exp->add_flag("--no-timing", ea.no_timing, "Write wall_ms as 0");

  DecomposeArgs da;
  auto* dec = app.add_subcommand("decompose", "Print the decomposition of a virtual RZZ");
  dec->add_option("--theta", da.theta, "Decomposition angle");
  dec->add_option("--manifest", da.manifest, "Write the fragment manifest to this path");
  dec->add_option("--qubits", da.qubits, "Chain size for --manifest");
  dec->add_option("--steps", da.steps, "Trotter steps for --manifest");
  dec->add_flag("--grouped", da.grouped, "Grouped instruments in the manifest");

  std::vector<std::size_t> route_qubits{4, 6, 8};
  std::string coupling_path;
  auto* route = app.add_subcommand("route", "Print SWAP counts of the ring-closing gate");
  route->add_option("--qubits", route_qubits, "Chain sizes")->delimiter(',');
  route->add_option("--coupling", coupling_path, "Coupling map JSON")->check(CLI::ExistingFile);

  std::string report_path;
  auto* rep = app.add_subcommand("report", "Summarize a results file");
  rep->add_option("results", report_path, "CSV or JSON results")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*exp) return run_experiment_cmd(ea);
    if (*dec) return run_decompose_cmd(da);
    if (*route) return run_route_cmd(route_qubits, coupling_path);
    if (*rep) {
      const auto records = load_results(report_path);
      std::cout << format_summary(report_summary(records));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "vtqg: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
