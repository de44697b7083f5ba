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
//
// Exact triangle counting and the graph-wide clustering statistics
// (local, average-of-local, and global "fraction of transitive triples").

#ifndef RKG_METRICS_HPP
#define RKG_METRICS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rkg/graph.hpp"

namespace rkg {

struct TriangleStats {
  std::uint64_t total_triangles = 0;
  std::vector<std::uint64_t> per_node_triangles;
  std::vector<std::uint64_t> per_node_wedges;  // unordered neighbor pairs
  std::vector<std::uint64_t> degrees;
};

struct ClusteringStats {
  std::vector<double> local;
  double average = 0.0;  // mean local coefficient over nodes of degree >= 2
  double global = 0.0;   // 3 * triangles / total wedges
};

namespace detail {

// Degree-ascending orientation (ties by node id). Every triangle is found
// exactly once, at its lowest-ranked edge; O(m^(3/2)) overall.
struct ForwardAdjacency {
  std::vector<std::uint64_t> offsets;
  std::vector<std::uint32_t> targets;

  explicit ForwardAdjacency(const SimpleGraph& g) {
    const std::uint32_t n = g.node_count();
    std::vector<std::uint32_t> rank(n);
    {
      std::vector<std::uint32_t> order(n);
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(),
                [&g](std::uint32_t a, std::uint32_t b) {
                  const auto da = g.degree(a), db = g.degree(b);
                  return da != db ? da < db : a < b;
                });
      for (std::uint32_t r = 0; r < n; ++r) rank[order[r]] = r;
    }
    offsets.assign(std::size_t{n} + 1, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
      for (std::uint32_t u : g.neighbors(v)) {
        if (rank[u] > rank[v]) ++offsets[v + 1];
      }
    }
    for (std::uint32_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    targets.resize(offsets[n]);
    std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::uint32_t v = 0; v < n; ++v) {
      for (std::uint32_t u : g.neighbors(v)) {
        if (rank[u] > rank[v]) targets[cursor[v]++] = u;
      }
    }
    // Neighbor lists are sorted by id already; the filtered copies stay
    // sorted, which the pairwise merges below rely on.
  }

  std::span<const std::uint32_t> out(std::uint32_t v) const {
    return {targets.data() + offsets[v],
            static_cast<std::size_t>(offsets[v + 1] - offsets[v])};
  }
};

template <class OnTriangle>
void for_each_triangle(const SimpleGraph& g, OnTriangle&& on_triangle) {
  const ForwardAdjacency fwd(g);
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    const auto out_v = fwd.out(v);
    for (std::uint32_t u : out_v) {
      const auto out_u = fwd.out(u);
      std::size_t a = 0, b = 0;
      while (a < out_v.size() && b < out_u.size()) {
        if (out_v[a] == out_u[b]) {
          if (!on_triangle(v, u, out_v[a])) return;
          ++a;
          ++b;
        } else if (out_v[a] < out_u[b]) {
          ++a;
        } else {
          ++b;
        }
      }
    }
  }
}

}  // namespace detail

/// Exact triangle census: total count, per-node triangle counts, per-node
/// wedge counts d(d-1)/2, and degrees.
inline TriangleStats count_triangles(const SimpleGraph& g) {
  const std::uint32_t n = g.node_count();
  TriangleStats stats;
  stats.per_node_triangles.assign(n, 0);
  stats.per_node_wedges.assign(n, 0);
  stats.degrees.assign(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    const std::uint64_t d = g.degree(v);
    stats.degrees[v] = d;
    stats.per_node_wedges[v] = d * (d - 1) / 2;
  }
  detail::for_each_triangle(
      g, [&stats](std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        ++stats.total_triangles;
        ++stats.per_node_triangles[a];
        ++stats.per_node_triangles[b];
        ++stats.per_node_triangles[c];
        return true;
      });
  return stats;
}

/// True iff the graph contains at least one triangle; stops at the first.
inline bool has_triangle(const SimpleGraph& g) {
  bool found = false;
  detail::for_each_triangle(g, [&found](std::uint32_t, std::uint32_t,
                                        std::uint32_t) {
    found = true;
    return false;
  });
  return found;
}

/// Local clustering coefficients: triangles at i over wedges at i for
/// nodes of degree >= 2, zero otherwise.
inline std::vector<double> local_clustering(const TriangleStats& stats) {
  std::vector<double> local(stats.degrees.size(), 0.0);
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (stats.degrees[i] >= 2) {
      local[i] = static_cast<double>(stats.per_node_triangles[i]) /
                 static_cast<double>(stats.per_node_wedges[i]);
    }
  }
  return local;
}

/// Mean local coefficient over nodes of degree >= 2; 0 if there are none.
inline double average_clustering(const TriangleStats& stats) {
  double sum = 0.0;
  std::uint64_t eligible = 0;
  for (std::size_t i = 0; i < stats.degrees.size(); ++i) {
    if (stats.degrees[i] >= 2) {
      sum += static_cast<double>(stats.per_node_triangles[i]) /
             static_cast<double>(stats.per_node_wedges[i]);
      ++eligible;
    }
  }
  return eligible == 0 ? 0.0 : sum / static_cast<double>(eligible);
}

/// Global clustering coefficient (fraction of transitive triples):
/// 3 * triangles / total wedges; 0 when the graph has no wedges.
inline double global_clustering(const TriangleStats& stats) {
  const std::uint64_t wedges = std::accumulate(
      stats.per_node_wedges.begin(), stats.per_node_wedges.end(),
      std::uint64_t{0});
  if (wedges == 0) return 0.0;
  return 3.0 * static_cast<double>(stats.total_triangles) /
         static_cast<double>(wedges);
}

inline ClusteringStats clustering_stats(const TriangleStats& stats) {
  return {local_clustering(stats), average_clustering(stats),
          global_clustering(stats)};
}

}  // namespace rkg

#endif  // RKG_METRICS_HPP
