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

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vtqg/gate.hpp"

namespace vtqg {

/// Undirected graph of physical qubit pairs that support a native two-qubit
/// gate. Edges are stored with the smaller index first.
class CouplingMap {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  CouplingMap(std::size_t n_physical, std::span<const Edge> edges);

  /// 0 - 1 - ... - (n-1).
  static CouplingMap path(std::size_t n);

  std::size_t n_physical() const { return n_physical_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool adjacent(std::size_t a, std::size_t b) const;

  /// Vertices in walk order if the graph is a single simple path covering
  /// every physical qubit, starting from the smaller-indexed endpoint.
  std::optional<std::vector<std::size_t>> path_order() const;

 private:
  std::size_t n_physical_;
  std::set<Edge> edges_;
};

/// JSON form: {"n": int, "edges": [[a, b], ...]}.
nlohmann::json to_json(const CouplingMap& map);
CouplingMap coupling_from_json(const nlohmann::json& j);

/// Logical-to-physical qubit permutation.
class Layout {
 public:
  static Layout identity(std::size_t n);
  explicit Layout(std::vector<std::size_t> logical_to_physical);

  std::size_t size() const { return map_.size(); }
  std::size_t physical(std::size_t logical) const { return map_.at(logical); }
  std::size_t logical(std::size_t physical) const;
  const std::vector<std::size_t>& mapping() const { return map_; }
  /// Exchanges whatever logical qubits sit on physical `a` and `b`.
  void swap_physical(std::size_t a, std::size_t b);

  bool operator==(const Layout&) const = default;

 private:
  std::vector<std::size_t> map_;
};

}  // namespace vtqg
