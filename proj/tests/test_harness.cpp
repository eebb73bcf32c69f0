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

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "vtqg/errors.hpp"
#include "vtqg/harness.hpp"

namespace {

using namespace vtqg;
namespace fs = std::filesystem;

ExperimentConfig exact_config(std::size_t n) {
  ExperimentConfig cfg;
  cfg.mode = Mode::Exact;
  cfg.repetitions = 1;
  cfg.params.n_qubits = n;
  return cfg;
}

double error_of(const std::vector<ResultRecord>& recs, Variant v) {
  for (const auto& r : recs) {
    if (r.variant == v) return std::abs(r.mag - r.ideal);
  }
  return NAN;
}

ResultRecord sample_record() {
  ResultRecord r;
  r.variant = Variant::Vtqg;
  r.n_qubits = 8;
  r.repetition = 3;
  r.mag = 0.1 + 0.2;
  r.sx = -0.5;
  r.sy = 1.0 / 3.0;
  r.sz = 0.7066810904097931;
  r.ideal = 0.8832662171771258;
  r.fragments = 10;
  r.two_qubit_gates = 14;
  r.wall_ms = 12.5;
  return r;
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("vtqg_test_" + std::to_string(::getpid()) + "_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

TEST(ExperimentConfig, DefaultValues) {
  const ExperimentConfig cfg;
  EXPECT_EQ(cfg.params, TfimParams{});
  EXPECT_EQ(cfg.shots, 8192u);
  EXPECT_EQ(cfg.repetitions, 20u);
  EXPECT_EQ(cfg.variants.size(), 3u);
  EXPECT_EQ(cfg.noise, NoiseModel{});
  EXPECT_EQ(cfg.shot_allocation, ShotAllocation::PerFragment);
  EXPECT_EQ(cfg.fragment_mode(), FragmentMode::Grouped);
  EXPECT_EQ(exact_config(4).fragment_mode(), FragmentMode::Enumerated);
}

TEST(ExperimentConfig, Validation) {
  ExperimentConfig cfg;
  cfg.shots = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg.mode = Mode::Exact;
  EXPECT_NO_THROW(cfg.validate());
  cfg.repetitions = 0;
  EXPECT_THROW(cfg.validate(), InvalidArgument);
  cfg = ExperimentConfig{};
  cfg.variants.clear();
  EXPECT_THROW(cfg.validate(), InvalidArgument);
}

TEST(ExperimentConfig, JsonRoundTripAndMerge) {
  ExperimentConfig cfg;
  cfg.mode = Mode::Exact;
  cfg.seed = 99;
  cfg.variants = {Variant::VtqgPet};
  cfg.grouping = Grouping::Grouped;
  cfg.record_timing = false;
  EXPECT_EQ(config_from_json(to_json(cfg)), cfg);

  const auto partial = config_from_json(
      nlohmann::json::parse(R"({"params": {"n_qubits": 4}, "noise": {"p2": 0.01}, "shots": 100})"));
  EXPECT_EQ(partial.params.n_qubits, 4u);
  EXPECT_DOUBLE_EQ(partial.params.h, 0.786);
  EXPECT_DOUBLE_EQ(partial.noise.p2, 0.01);
  EXPECT_DOUBLE_EQ(partial.noise.p1, 0.0003);
  EXPECT_EQ(partial.shots, 100u);

  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"shotz": 1})")), InvalidArgument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"mode": "fast"})")), InvalidArgument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"shots": "many"})")), InvalidArgument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"repetitions": 0})")), InvalidArgument);
}

TEST(RunExperiment, NoiselessExactMatchesReference) {
  ExperimentConfig cfg = exact_config(6);
  cfg.noise = NoiseModel::ideal();
  cfg.variants = {Variant::Ideal, Variant::RoutedOriginal, Variant::Vtqg, Variant::VtqgPet};
  for (const auto& r : run_experiment(cfg)) {
    EXPECT_NEAR(r.mag, r.ideal, 1e-9) << to_string(r.variant);
  }
}

TEST(RunExperiment, DefaultNoiseOrderingAtEightQubits) {
  const auto recs = run_experiment(exact_config(8));
  EXPECT_LT(error_of(recs, Variant::Vtqg), error_of(recs, Variant::RoutedOriginal));
  EXPECT_LE(error_of(recs, Variant::VtqgPet), error_of(recs, Variant::Vtqg));
}

TEST(RunExperiment, RecordFieldsAndOrder) {
  ExperimentConfig cfg = exact_config(4);
  cfg.repetitions = 2;
  const auto recs = run_experiment(cfg);
  ASSERT_EQ(recs.size(), 6u);
  EXPECT_EQ(recs[0].variant, Variant::RoutedOriginal);
  EXPECT_EQ(recs[1].repetition, 1u);
  EXPECT_EQ(recs[2].variant, Variant::Vtqg);
  EXPECT_EQ(recs[0].fragments, 1u);
  EXPECT_EQ(recs[2].fragments, 10u);
  EXPECT_EQ(recs[0].two_qubit_gates, 3u * 2u + 2u * 3u + 2u);
  EXPECT_EQ(recs[2].two_qubit_gates, 6u);
  EXPECT_EQ(recs[4].two_qubit_gates, 3u);
  for (const auto& r : recs) EXPECT_DOUBLE_EQ(r.ideal, exact_reference(cfg.params));
}

TEST(RunExperiment, EnumeratedSamplingRunsTenFragmentsInThreeBases) {
  ExperimentConfig cfg;
  cfg.params.n_qubits = 4;
  cfg.shots = 64;
  cfg.grouping = Grouping::Enumerated;
  const auto eval = evaluate_variant(cfg, Variant::Vtqg, 1);
  EXPECT_EQ(eval.fragments, 10u);
  EXPECT_EQ(eval.circuits_executed, 30u);
  cfg.grouping = Grouping::Grouped;
  const auto grouped = evaluate_variant(cfg, Variant::Vtqg, 1);
  EXPECT_EQ(grouped.fragments, 6u);
  EXPECT_EQ(grouped.circuits_executed, 18u);
}

TEST(RunExperiment, SamplingAgreesWithExactWithinError) {
  ExperimentConfig cfg;
  cfg.params.n_qubits = 4;
  cfg.shots = 20000;
  for (Variant v : {Variant::RoutedOriginal, Variant::Vtqg}) {
    const double exact = evaluate_variant(exact_config(4), v, 0).magnetization;
    const auto s = evaluate_variant(cfg, v, 5);
    EXPECT_GT(s.magnetization_stderr, 0.0);
    EXPECT_NEAR(s.magnetization, exact, 4 * s.magnetization_stderr) << to_string(v);
  }
}

TEST(RunExperiment, ProportionalAllocationSpendsSameBudget) {
  ExperimentConfig cfg;
  cfg.params.n_qubits = 4;
  cfg.shots = 2000;
  cfg.shot_allocation = ShotAllocation::Proportional;
  const double exact = evaluate_variant(exact_config(4), Variant::Vtqg, 0).magnetization;
  const auto s = evaluate_variant(cfg, Variant::Vtqg, 3);
  EXPECT_NEAR(s.magnetization, exact, 5 * s.magnetization_stderr);
}

TEST(RunExperiment, RepetitionSeedsAreBasePlusIndex) {
  ExperimentConfig cfg;
  cfg.params.n_qubits = 4;
  cfg.shots = 256;
  cfg.repetitions = 3;
  cfg.variants = {Variant::Vtqg};
  cfg.seed = 40;
  const auto recs = run_experiment(cfg);
  for (std::size_t r = 0; r < 3; ++r) {
    EXPECT_EQ(recs[r].mag, evaluate_variant(cfg, Variant::Vtqg, 40 + r).magnetization);
  }
  EXPECT_NE(recs[0].mag, recs[1].mag);
}

TEST(RunExperiment, DeterministicRecords) {
  ExperimentConfig cfg;
  cfg.params.n_qubits = 4;
  cfg.shots = 512;
  cfg.repetitions = 2;
  cfg.record_timing = false;
  const auto a = run_experiment(cfg);
  const auto b = run_experiment(cfg);
  EXPECT_EQ(a, b);
  for (const auto& r : a) EXPECT_EQ(r.wall_ms, 0.0);
  cfg.record_timing = true;
  for (const auto& r : run_experiment(cfg)) EXPECT_GT(r.wall_ms, 0.0);
}

TEST(RunExperiment, ExactReadoutFlipShrinksComponents) {
  ExperimentConfig cfg = exact_config(4);
  cfg.noise = NoiseModel::ideal();
  const auto clean = evaluate_variant(cfg, Variant::RoutedOriginal, 0);
  cfg.noise.readout_flip = 0.1;
  const auto flipped = evaluate_variant(cfg, Variant::RoutedOriginal, 0);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(flipped.averages[j], 0.8 * clean.averages[j], 1e-12);
  }
}

TEST(RunExperiment, ResourceLimitNamesVariant) {
  ExperimentConfig cfg = exact_config(4);
  cfg.params.n_steps = 3;
  cfg.max_cuts = 2;
  cfg.variants = {Variant::Vtqg};
  try {
    run_experiment(cfg);
    FAIL();
  } catch (const ResourceLimit& e) {
    EXPECT_NE(std::string(e.what()).find("vtqg"), std::string::npos);
  }
}

TEST(EmitResults, EmptyCsvIsHeaderOnly) {
  std::ostringstream os;
  write_csv(os, {});
  EXPECT_EQ(os.str(), std::string(kCsvHeader) + "\n");
}

TEST(EmitResults, OneRecordCsvFieldOrder) {
  std::ostringstream os;
  const std::vector<ResultRecord> recs{sample_record()};
  write_csv(os, recs);
  EXPECT_EQ(os.str(),
            "variant,n_qubits,repetition,mag,sx,sy,sz,ideal,fragments,two_qubit_gates,wall_ms\n"
            "vtqg,8,3,0.30000000000000004,-0.5,0.33333333333333331,0.7066810904097931,"
            "0.88326621717712583,10,14,12.500\n");
}

TEST(EmitResults, CsvRoundTripIsExact) {
  std::vector<ResultRecord> recs{sample_record(), sample_record()};
  recs[1].variant = Variant::RoutedOriginal;
  recs[1].mag = 1e-300;
  std::stringstream ss;
  write_csv(ss, recs);
  EXPECT_EQ(read_csv(ss), recs);
}

TEST(EmitResults, JsonRoundTripIsExact) {
  const std::vector<ResultRecord> recs{sample_record()};
  const fs::path p = temp_path("rt.json");
  emit_results(recs, OutputFormat::Json, p);
  EXPECT_EQ(load_results(p), recs);
  const auto j = nlohmann::json::parse(slurp(p));
  EXPECT_EQ(j["records"][0]["variant"], "vtqg");
  EXPECT_EQ(j["records"][0].size(), 11u);
  fs::remove(p);
}

TEST(EmitResults, FileRoundTripCsv) {
  const std::vector<ResultRecord> recs{sample_record()};
  const fs::path p = temp_path("rt.csv");
  emit_results(recs, OutputFormat::Csv, p);
  EXPECT_EQ(load_results(p), recs);
  fs::remove(p);
}

TEST(EmitResults, IoFailureNamesPath) {
  const fs::path bad = "/nonexistent-dir/out.csv";
  try {
    emit_results({}, OutputFormat::Csv, bad);
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(bad.string()), std::string::npos);
  }
}

TEST(EmitResults, MalformedInputRejected) {
  std::stringstream bad_header("variant,mag\n");
  EXPECT_THROW(read_csv(bad_header), InvalidArgument);
  std::stringstream short_row(std::string(kCsvHeader) + "\nvtqg,8\n");
  EXPECT_THROW(read_csv(short_row), InvalidArgument);
  EXPECT_THROW(records_from_json(nlohmann::json::parse(R"({"records": [{"variant": "vtqg"}]})")),
               InvalidArgument);
  EXPECT_THROW(output_format_from_string("xml"), InvalidArgument);
}

TEST(ReportSummary, IdenticalRecordsHaveZeroSpread) {
  const std::vector<ResultRecord> recs(20, sample_record());
  const auto rows = report_summary(recs);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].count, 20u);
  EXPECT_EQ(rows[0].stddev, 0.0);
  EXPECT_NEAR(rows[0].abs_error, std::abs(0.3 - 0.8832662171771258), 1e-15);
}

TEST(ReportSummary, SampleStandardDeviation) {
  std::vector<ResultRecord> recs(2, sample_record());
  recs[0].mag = 0.4;
  recs[1].mag = 0.6;
  const auto rows = report_summary(recs);
  EXPECT_NEAR(rows[0].mean, 0.5, 1e-15);
  EXPECT_NEAR(rows[0].stddev, 0.1414213562373095, 1e-12);
}

TEST(ReportSummary, GroupsInFirstAppearanceOrder) {
  std::vector<ResultRecord> recs(3, sample_record());
  recs[1].variant = Variant::RoutedOriginal;
  recs[2].n_qubits = 4;
  const auto rows = report_summary(recs);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].variant, Variant::Vtqg);
  EXPECT_EQ(rows[1].variant, Variant::RoutedOriginal);
  EXPECT_EQ(rows[2].n_qubits, 4u);
  EXPECT_NE(format_summary(rows).find("routed_original"), std::string::npos);
}

TEST(ReportSummary, ImprovementGrowsWithChainLength) {
  double previous = -1.0;
  for (std::size_t n : {4u, 6u, 8u}) {
    const auto recs = run_experiment(exact_config(n));
    const auto rows = report_summary(recs);
    double routed = 0, vtqg = 0;
    for (const auto& r : rows) {
      if (r.variant == Variant::RoutedOriginal) routed = r.abs_error;
      if (r.variant == Variant::Vtqg) vtqg = r.abs_error;
    }
    EXPECT_GT(routed - vtqg, previous) << "n=" << n;
    previous = routed - vtqg;
  }
}

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::string& args) {
  const fs::path out = temp_path("cli.out"), err = temp_path("cli.err");
  const std::string cmd =
      std::string(VTQG_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int rc = std::system(cmd.c_str());
  CliResult r{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, slurp(out), slurp(err)};
  fs::remove(out);
  fs::remove(err);
  return r;
}

TEST(Cli, ExperimentWritesRequestedFormat) {
  const fs::path csv = temp_path("cli.csv");
  const auto r = run_cli(
      "experiment --mode exact --reps 2 --qubits 4,6 --variant vtqg,routed_original "
      "--no-timing --out " + csv.string());
  ASSERT_EQ(r.status, 0) << r.err;
  const auto recs = load_results(csv);
  ASSERT_EQ(recs.size(), 8u);
  EXPECT_EQ(recs[0].variant, Variant::Vtqg);
  EXPECT_EQ(recs[0].n_qubits, 4u);
  EXPECT_EQ(recs[4].n_qubits, 6u);
  fs::remove(csv);

  const auto json =
      run_cli("experiment --mode exact --reps 1 --qubits 4 --format json --variant vtqg_pet");
  ASSERT_EQ(json.status, 0) << json.err;
  EXPECT_EQ(nlohmann::json::parse(json.out)["records"].size(), 1u);
}

TEST(Cli, ConfigFileWithFlagOverrides) {
  const fs::path cfg = temp_path("cfg.json");
  std::ofstream(cfg)
      << R"({"mode": "sampling", "shots": 0, "params": {"n_qubits": 4}, "repetitions": 1})";
  const auto bad = run_cli("experiment --config " + cfg.string());
  EXPECT_NE(bad.status, 0);
  const auto ok = run_cli("experiment --config " + cfg.string() + " --mode exact --variant vtqg");
  EXPECT_EQ(ok.status, 0) << ok.err;
  EXPECT_NE(ok.out.find("vtqg,4,0,"), std::string::npos);
  fs::remove(cfg);
}

TEST(Cli, DecomposeRouteAndReport) {
  const auto d = run_cli("decompose --theta 1.5707963267948966");
  ASSERT_EQ(d.status, 0);
  EXPECT_NE(d.out.find("gamma = 3"), std::string::npos);
  EXPECT_NE(d.out.find("PROJ_ROT"), std::string::npos);

  const fs::path manifest = temp_path("manifest.json");
  const auto m = run_cli("decompose --manifest " + manifest.string() + " --qubits 4 --steps 2");
  ASSERT_EQ(m.status, 0) << m.err;
  EXPECT_EQ(nlohmann::json::parse(slurp(manifest))["fragments"].size(), 100u);
  fs::remove(manifest);

  const auto route = run_cli("route --qubits 8");
  ASSERT_EQ(route.status, 0);
  EXPECT_NE(route.out.find("   8      6"), std::string::npos);

  const fs::path coupling = temp_path("ring.json");
  std::ofstream(coupling) << R"({"n": 4, "edges": [[0,1],[1,2],[2,3],[3,0]]})";
  const auto ring = run_cli("route --qubits 4 --coupling " + coupling.string());
  EXPECT_NE(ring.status, 0);
  EXPECT_EQ(std::count(ring.err.begin(), ring.err.end(), '\n'), 1);
  fs::remove(coupling);

  const fs::path results = temp_path("rep.csv");
  std::vector<ResultRecord> recs(2, sample_record());
  recs[1].mag = 0.5;
  emit_results(recs, OutputFormat::Csv, results);
  const auto rep = run_cli("report " + results.string());
  ASSERT_EQ(rep.status, 0);
  EXPECT_NE(rep.out.find("vtqg"), std::string::npos);
  fs::remove(results);
}

TEST(Cli, ErrorsExitNonzeroWithOneLine) {
  const auto r = run_cli("experiment --mode warp --reps 1");
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
  EXPECT_NE(r.err.find("warp"), std::string::npos);
  EXPECT_NE(run_cli("bogus").status, 0);
}

}  // namespace
