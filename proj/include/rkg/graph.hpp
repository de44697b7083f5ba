// Copyright 2026 The rkg Authors
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

#ifndef RKG_GRAPH_HPP
#define RKG_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "rkg/theta.hpp"

namespace rkg {

/// Undirected simple graph with sorted per-node neighbor lists (CSR).
/// Immutable after construction; node ids are 0-based internally and
/// 1-based in all serialized output.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Builds from an edge list. Self-loops are rejected; duplicate edges
  /// (in either orientation) are merged.
  static SimpleGraph from_edges(
      std::uint32_t node_count,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    for (auto& [u, v] : edges) {
      if (u >= node_count || v >= node_count) {
        throw ModelError("SimpleGraph: edge endpoint out of range");
      }
      if (u == v) throw ModelError("SimpleGraph: self-loop rejected");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    SimpleGraph g;
    g.n_ = node_count;
    g.offsets_.assign(std::size_t{node_count} + 1, 0);
    for (const auto& [u, v] : edges) {
      ++g.offsets_[u + 1];
      ++g.offsets_[v + 1];
    }
    for (std::uint32_t i = 0; i < node_count; ++i) {
      g.offsets_[i + 1] += g.offsets_[i];
    }
    g.adj_.resize(g.offsets_[node_count]);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(),
                                      g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
      g.adj_[cursor[u]++] = v;
      g.adj_[cursor[v]++] = u;
    }
    // Sorted edge insertion yields sorted neighbor lists for the low
    // endpoints but not the high ones.
    for (std::uint32_t i = 0; i < node_count; ++i) {
      std::sort(g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                g.adj_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
    }
    g.m_ = edges.size();
    return g;
  }

  std::uint32_t node_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {adj_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }

  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

 private:
  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<std::uint32_t> adj_;
};

/// Writes the edge list as text: header "# n=<n>", then one "i j" line
/// per edge with 1-based ids, i < j, sorted lexicographically.
inline void write_edge_list(const SimpleGraph& g, std::ostream& out) {
  out << "# n=" << g.node_count() << '\n';
  for (std::uint32_t u = 0; u < g.node_count(); ++u) {
    for (std::uint32_t v : g.neighbors(u)) {
      if (v > u) out << (u + 1) << ' ' << (v + 1) << '\n';
    }
  }
}

}  // namespace rkg

#endif  // RKG_GRAPH_HPP
