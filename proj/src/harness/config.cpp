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

#include <string>

#include "vtqg/errors.hpp"
#include "vtqg/harness.hpp"

namespace vtqg {

std::string_view to_string(Mode m) { return m == Mode::Exact ? "exact" : "sampling"; }

std::string_view to_string(Grouping g) {
  switch (g) {
    case Grouping::Auto:
      return "auto";
    case Grouping::Enumerated:
      return "enumerated";
    case Grouping::Grouped:
      return "grouped";
  }
  return "?";
}

std::string_view to_string(ShotAllocation a) {
  return a == ShotAllocation::PerFragment ? "per_fragment" : "proportional";
}

namespace {

Mode mode_from_string(std::string_view s) {
  if (s == "exact") return Mode::Exact;
  if (s == "sampling") return Mode::Sampling;
  throw InvalidArgument("unknown mode '" + std::string(s) + "'");
}

Grouping grouping_from_string(std::string_view s) {
  for (Grouping g : {Grouping::Auto, Grouping::Enumerated, Grouping::Grouped}) {
    if (to_string(g) == s) return g;
  }
  throw InvalidArgument("unknown grouping '" + std::string(s) + "'");
}

ShotAllocation allocation_from_string(std::string_view s) {
  if (s == "per_fragment") return ShotAllocation::PerFragment;
  if (s == "proportional") return ShotAllocation::Proportional;
  throw InvalidArgument("unknown shot_allocation '" + std::string(s) + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  params.validate();
  noise.validate();
  if (variants.empty()) throw InvalidArgument("no variants selected");
  if (mode == Mode::Sampling && shots == 0) {
    throw InvalidArgument("shots must be positive in sampling mode");
  }
  if (repetitions < 1) throw InvalidArgument("repetitions must be at least 1");
}

FragmentMode ExperimentConfig::fragment_mode() const {
  switch (grouping) {
    case Grouping::Enumerated:
      return FragmentMode::Enumerated;
    case Grouping::Grouped:
      return FragmentMode::Grouped;
    case Grouping::Auto:
      break;
  }
  return mode == Mode::Exact ? FragmentMode::Enumerated : FragmentMode::Grouped;
}

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json variants = nlohmann::json::array();
  for (Variant v : c.variants) variants.push_back(to_string(v));
  return {{"params", to_json(c.params)},
          {"variants", variants},
          {"noise", to_json(c.noise)},
          {"mode", to_string(c.mode)},
          {"shots", c.shots},
          {"repetitions", c.repetitions},
          {"seed", c.seed},
          {"shot_allocation", to_string(c.shot_allocation)},
          {"grouping", to_string(c.grouping)},
          {"simplify_projected", c.simplify_projected},
          {"record_timing", c.record_timing},
          {"max_cuts", c.max_cuts}};
}

ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base) {
  if (!j.is_object()) throw InvalidArgument("experiment config must be a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "params") {
        nlohmann::json merged = to_json(base.params);
        merged.update(value);
        base.params = tfim_params_from_json(merged);
      } else if (key == "variants") {
        base.variants.clear();
        for (const auto& v : value) {
          base.variants.push_back(variant_from_string(v.get<std::string>()));
        }
      } else if (key == "noise") {
        nlohmann::json merged = to_json(base.noise);
        merged.update(value);
        base.noise = noise_from_json(merged);
      } else if (key == "mode") {
        base.mode = mode_from_string(value.get<std::string>());
      } else if (key == "shots") {
        base.shots = value.get<std::size_t>();
      } else if (key == "repetitions") {
        base.repetitions = value.get<std::size_t>();
      } else if (key == "seed") {
        base.seed = value.get<std::uint64_t>();
      } else if (key == "shot_allocation") {
        base.shot_allocation = allocation_from_string(value.get<std::string>());
      } else if (key == "grouping") {
        base.grouping = grouping_from_string(value.get<std::string>());
      } else if (key == "simplify_projected") {
        base.simplify_projected = value.get<bool>();
      } else if (key == "record_timing") {
        base.record_timing = value.get<bool>();
      } else if (key == "max_cuts") {
        base.max_cuts = value.get<std::size_t>();
      } else {
        throw InvalidArgument("unknown experiment config field '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed experiment config: ") + e.what());
  }
  base.validate();
  return base;
}

}  // namespace vtqg
