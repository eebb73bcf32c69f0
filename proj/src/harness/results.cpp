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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "vtqg/errors.hpp"
#include "vtqg/harness.hpp"

namespace vtqg {

OutputFormat output_format_from_string(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw InvalidArgument("unknown output format '" + std::string(s) + "'");
}

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("line " + std::to_string(line) + ": bad number '" + s + "'");
  }
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidArgument("line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

void write_csv(std::ostream& os, std::span<const ResultRecord> records) {
  os << kCsvHeader << '\n';
  for (const ResultRecord& r : records) {
    os << to_string(r.variant) << ',' << r.n_qubits << ',' << r.repetition << ','
       << fmt("%.17g", r.mag) << ',' << fmt("%.17g", r.sx) << ',' << fmt("%.17g", r.sy) << ','
       << fmt("%.17g", r.sz) << ',' << fmt("%.17g", r.ideal) << ',' << r.fragments << ','
       << r.two_qubit_gates << ',' << fmt("%.3f", r.wall_ms) << '\n';
  }
}

std::vector<ResultRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InvalidArgument("empty results file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw InvalidArgument("unexpected results header '" + line + "'");
  std::vector<ResultRecord> out;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 11) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": expected 11 columns, got " +
                            std::to_string(cells.size()));
    }
    ResultRecord r;
    r.variant = variant_from_string(cells[0]);
    r.n_qubits = parse_count(cells[1], lineno);
    r.repetition = parse_count(cells[2], lineno);
    r.mag = parse_double(cells[3], lineno);
    r.sx = parse_double(cells[4], lineno);
    r.sy = parse_double(cells[5], lineno);
    r.sz = parse_double(cells[6], lineno);
    r.ideal = parse_double(cells[7], lineno);
    r.fragments = parse_count(cells[8], lineno);
    r.two_qubit_gates = parse_count(cells[9], lineno);
    r.wall_ms = parse_double(cells[10], lineno);
    out.push_back(r);
  }
  return out;
}

nlohmann::json records_to_json(std::span<const ResultRecord> records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ResultRecord& r : records) {
    arr.push_back({{"variant", to_string(r.variant)},
                   {"n_qubits", r.n_qubits},
                   {"repetition", r.repetition},
                   {"mag", r.mag},
                   {"sx", r.sx},
                   {"sy", r.sy},
                   {"sz", r.sz},
                   {"ideal", r.ideal},
                   {"fragments", r.fragments},
                   {"two_qubit_gates", r.two_qubit_gates},
                   {"wall_ms", r.wall_ms}});
  }
  return {{"records", arr}};
}

std::vector<ResultRecord> records_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("records") || !j.at("records").is_array()) {
    throw InvalidArgument("results JSON needs a 'records' array");
  }
  std::vector<ResultRecord> out;
  try {
    for (const auto& e : j.at("records")) {
      ResultRecord r;
      r.variant = variant_from_string(e.at("variant").get<std::string>());
      r.n_qubits = e.at("n_qubits").get<std::size_t>();
      r.repetition = e.at("repetition").get<std::size_t>();
      r.mag = e.at("mag").get<double>();
      r.sx = e.at("sx").get<double>();
      r.sy = e.at("sy").get<double>();
      r.sz = e.at("sz").get<double>();
      r.ideal = e.at("ideal").get<double>();
      r.fragments = e.at("fragments").get<std::size_t>();
      r.two_qubit_gates = e.at("two_qubit_gates").get<std::size_t>();
      r.wall_ms = e.at("wall_ms").get<double>();
      out.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed results record: ") + e.what());
  }
  return out;
}

void emit_results(std::span<const ResultRecord> records, OutputFormat format,
                  const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  if (format == OutputFormat::Csv) {
    write_csv(os, records);
  } else {
    os << records_to_json(records).dump(2) << '\n';
  }
  if (!os) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<ResultRecord> load_results(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path.string() + "'");
  if (path.extension() == ".json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(is);
    } catch (const nlohmann::json::parse_error& e) {
      throw InvalidArgument(path.string() + ": " + e.what());
    }
    return records_from_json(j);
  }
  return read_csv(is);
}

std::vector<SummaryRow> report_summary(std::span<const ResultRecord> records) {
  std::vector<SummaryRow> rows;
  std::vector<std::vector<double>> samples;
  std::map<std::pair<Variant, std::size_t>, std::size_t> index;
  for (const ResultRecord& r : records) {
    auto [it, fresh] = index.try_emplace({r.variant, r.n_qubits}, rows.size());
    if (fresh) {
      SummaryRow row;
      row.variant = r.variant;
      row.n_qubits = r.n_qubits;
      row.ideal = r.ideal;
      rows.push_back(row);
      samples.emplace_back();
    }
    samples[it->second].push_back(r.mag);
  }
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& s = samples[k];
    SummaryRow& row = rows[k];
    row.count = s.size();
    double mean = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double delta = s[i] - mean;
      mean += delta / static_cast<double>(i + 1);
      m2 += delta * (s[i] - mean);
    }
    row.mean = mean;
    if (s.size() > 1) row.stddev = std::sqrt(m2 / static_cast<double>(s.size() - 1));
    row.abs_error = std::abs(row.mean - row.ideal);
  }
  return rows;
}

std::string format_summary(std::span<const SummaryRow> rows) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "variant" << std::right << std::setw(4) << "N"
     << std::setw(6) << "reps" << std::setw(12) << "mean" << std::setw(12) << "std"
     << std::setw(12) << "ideal" << std::setw(12) << "|error|" << '\n';
  os << std::fixed << std::setprecision(6);
  for (const SummaryRow& r : rows) {
    os << std::left << std::setw(16) << to_string(r.variant) << std::right << std::setw(4)
       << r.n_qubits << std::setw(6) << r.count << std::setw(12) << r.mean << std::setw(12)
       << r.stddev << std::setw(12) << r.ideal << std::setw(12) << r.abs_error << '\n';
  }
  return os.str();
}

}  // namespace vtqg
