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

#include "vtqg/coupling.hpp"

#include <algorithm>
#include <string>

#include "vtqg/errors.hpp"

namespace vtqg {

CouplingMap::CouplingMap(std::size_t n_physical, std::span<const Edge> edges)
    : n_physical_(n_physical) {
  for (auto [a, b] : edges) {
    if (a >= n_physical || b >= n_physical) {
      throw InvalidArgument("coupling edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ") references a qubit outside [0," +
                            std::to_string(n_physical) + ")");
    }
    if (a == b) {
      throw InvalidArgument("coupling map self-loop on qubit " + std::to_string(a));
    }
    edges_.insert({std::min(a, b), std::max(a, b)});
  }
}

CouplingMap CouplingMap::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return CouplingMap(n, edges);
}

bool CouplingMap::adjacent(std::size_t a, std::size_t b) const {
  return edges_.contains({std::min(a, b), std::max(a, b)});
}

std::optional<std::vector<std::size_t>> CouplingMap::path_order() const {
  const std::size_t n = n_physical_;
  if (n == 0 || edges_.size() + 1 != n) return std::nullopt;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges_) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::optional<std::size_t> start;
  for (std::size_t v = 0; v < n; ++v) {
    if (adj[v].size() > 2) return std::nullopt;
    if (adj[v].size() <= 1 && !start) start = v;
  }
  if (!start) return std::nullopt;
  std::vector<std::size_t> order{*start};
  std::vector<bool> seen(n, false);
  seen[*start] = true;
  while (order.size() < n) {
    std::optional<std::size_t> next;
    for (std::size_t w : adj[order.back()]) {
      if (!seen[w]) next = w;
    }
    if (!next) return std::nullopt;
    seen[*next] = true;
    order.push_back(*next);
  }
  return order;
}

nlohmann::json to_json(const CouplingMap& map) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [a, b] : map.edges()) edges.push_back({a, b});
  return {{"n", map.n_physical()}, {"edges", edges}};
}

CouplingMap coupling_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) throw InvalidArgument("coupling map 'n' must be non-negative");
    std::vector<CouplingMap::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) {
        throw InvalidArgument("coupling edge must be a pair [a, b]");
      }
      const auto a = e[0].get<std::int64_t>();
      const auto b = e[1].get<std::int64_t>();
      if (a < 0 || b < 0) throw InvalidArgument("negative qubit in coupling edge");
      edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    }
    return CouplingMap(static_cast<std::size_t>(n), edges);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed coupling map JSON: ") + e.what());
  }
}

Layout Layout::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return Layout(std::move(m));
}

Layout::Layout(std::vector<std::size_t> logical_to_physical)
    : map_(std::move(logical_to_physical)) {
  std::vector<bool> hit(map_.size(), false);
  for (std::size_t p : map_) {
    if (p >= map_.size() || hit[p]) {
      throw InvalidArgument("layout is not a permutation");
    }
    hit[p] = true;
  }
}

std::size_t Layout::logical(std::size_t physical) const {
  auto it = std::find(map_.begin(), map_.end(), physical);
  if (it == map_.end()) throw InvalidArgument("physical qubit not in layout");
  return static_cast<std::size_t>(it - map_.begin());
}

void Layout::swap_physical(std::size_t a, std::size_t b) {
  const std::size_t la = logical(a);
  const std::size_t lb = logical(b);
  std::swap(map_[la], map_[lb]);
}

}  // namespace vtqg
