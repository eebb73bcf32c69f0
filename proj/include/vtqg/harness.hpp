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

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vtqg/fragments.hpp"
#include "vtqg/noise.hpp"
#include "vtqg/tfim.hpp"

namespace vtqg {

enum class Mode {
  /// Density-matrix traces, weighted fragment sums; no shot noise.
  Exact,
  /// Seeded shots in X, Y and Z bases for every fragment.
  Sampling,
};

enum class Grouping {
  /// Enumerated fragments in exact mode, grouped instruments in sampling.
  Auto,
  Enumerated,
  Grouped,
};

enum class ShotAllocation {
  /// `shots` per fragment and basis.
  PerFragment,
  /// The same total budget split in proportion to |coefficient * scale|.
  Proportional,
};

/// Declarative experiment description. Defaults: h = 0.786, J = 0.787,
/// dt = 0.5, one Trotter step, 8192 shots, 20 repetitions, virtual gate
/// between qubit 0 and qubit N-1.
struct ExperimentConfig {
  TfimParams params;
  std::vector<Variant> variants{Variant::RoutedOriginal, Variant::Vtqg, Variant::VtqgPet};
  NoiseModel noise;
  Mode mode = Mode::Sampling;
  std::size_t shots = 8192;
  std::size_t repetitions = 20;
  std::uint64_t seed = 1234;
  ShotAllocation shot_allocation = ShotAllocation::PerFragment;
  Grouping grouping = Grouping::Auto;
  /// Absorb projections classically where the product-state check passes.
  bool simplify_projected = true;
  /// When false, wall_ms is written as 0.
  bool record_timing = true;
  std::size_t max_cuts = 4;

  void validate() const;
  FragmentMode fragment_mode() const;

  bool operator==(const ExperimentConfig&) const = default;
};

std::string_view to_string(Mode m);
std::string_view to_string(Grouping g);
std::string_view to_string(ShotAllocation a);

nlohmann::json to_json(const ExperimentConfig& config);
/// Fields absent from `j` keep the values in `base`.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base = {});

/// Outcome of one variant run.
struct VariantEvaluation {
  BlochComponents components;
  std::array<double, 3> averages{};
  double magnetization = 0.0;
  /// Delta-method standard error from the shot variance; 0 in exact mode.
  double magnetization_stderr = 0.0;
  std::size_t fragments = 1;
  /// Circuits actually run: fragments (times 3 bases when sampling).
  std::size_t circuits_executed = 0;
  std::size_t two_qubit_gates = 0;
};

VariantEvaluation evaluate_variant(const ExperimentConfig& config, Variant variant,
                                   std::uint64_t seed);

/// One output row.
struct ResultRecord {
  Variant variant = Variant::Ideal;
  std::size_t n_qubits = 0;
  std::size_t repetition = 0;
  double mag = 0.0;
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;
  double ideal = 0.0;
  std::size_t fragments = 0;
  std::size_t two_qubit_gates = 0;
  double wall_ms = 0.0;

  bool operator==(const ResultRecord&) const = default;
};

/// For each variant and repetition r, evaluates with seed `seed + r` and
/// attaches the noiseless reference. Records are ordered by variant, then
/// repetition.
std::vector<ResultRecord> run_experiment(const ExperimentConfig& config);

enum class OutputFormat { Csv, Json };

OutputFormat output_format_from_string(std::string_view s);

inline constexpr std::string_view kCsvHeader =
    "variant,n_qubits,repetition,mag,sx,sy,sz,ideal,fragments,two_qubit_gates,wall_ms";

void write_csv(std::ostream& os, std::span<const ResultRecord> records);
nlohmann::json records_to_json(std::span<const ResultRecord> records);
std::vector<ResultRecord> records_from_json(const nlohmann::json& j);
std::vector<ResultRecord> read_csv(std::istream& is);

/// Writes to `path`; I/O failures raise std::runtime_error naming the path.
void emit_results(std::span<const ResultRecord> records, OutputFormat format,
                  const std::filesystem::path& path);
/// Format chosen by extension (.json, otherwise CSV).
std::vector<ResultRecord> load_results(const std::filesystem::path& path);

struct SummaryRow {
  Variant variant = Variant::Ideal;
  std::size_t n_qubits = 0;
  std::size_t count = 0;
  double mean = 0.0;
  /// Sample standard deviation (n - 1); 0 for a single record.
  double stddev = 0.0;
  double ideal = 0.0;
  double abs_error = 0.0;
};

/// One row per (variant, n_qubits), in order of first appearance.
std::vector<SummaryRow> report_summary(std::span<const ResultRecord> records);
std::string format_summary(std::span<const SummaryRow> rows);

}  // namespace vtqg
