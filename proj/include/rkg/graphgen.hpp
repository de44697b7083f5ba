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
// Seeded sampling of key rings, random key graphs and Erdos-Renyi graphs.
// Generator states are single-owner; sampling on distinct substreams is
// safe from any number of threads.

#ifndef RKG_GRAPHGEN_HPP
#define RKG_GRAPHGEN_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "rkg/analytic.hpp"
#include "rkg/graph.hpp"
#include "rkg/rng.hpp"
#include "rkg/theta.hpp"

namespace rkg {

/// A key ring: strictly increasing sequence of ring_size distinct keys
/// in [1, pool_size].
using KeyRing = std::vector<std::uint64_t>;

/// Draws a uniform random K-subset of {1, ..., P}, sorted ascending.
/// Uses Floyd's algorithm when the ring is a small fraction of the pool
/// (no pool-sized allocation), a partial Fisher-Yates shuffle otherwise.
inline KeyRing sample_key_ring(const Theta& theta, Xoshiro256& rng) {
  const std::uint64_t k = theta.ring_size();
  const std::uint64_t p = theta.pool_size();
  KeyRing ring;
  ring.reserve(k);
  if (8 * k > p) {
    std::vector<std::uint64_t> pool(p);
    std::iota(pool.begin(), pool.end(), std::uint64_t{1});
    for (std::uint64_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + rng.uniform_below(p - i)]);
    }
    ring.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  } else {
    for (std::uint64_t j = p - k + 1; j <= p; ++j) {
      const std::uint64_t t = 1 + rng.uniform_below(j);
      if (std::find(ring.begin(), ring.end(), t) != ring.end()) {
        ring.push_back(j);
      } else {
        ring.push_back(t);
      }
    }
  }
  std::sort(ring.begin(), ring.end());
  return ring;
}

/// True iff two sorted key rings share at least one key (merge scan).
inline bool rings_intersect(const KeyRing& a, const KeyRing& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

/// Edge-detection strategy for building a random key graph.
enum class RkgBuild {
  merge_scan,      ///< O(K) sorted-merge intersection on every node pair
  inverted_index,  ///< group nodes by key; wins when the edge probability is tiny
  auto_select,
};

namespace detail {

inline void validate_rings(const std::vector<KeyRing>& rings) {
  if (rings.empty()) throw ModelError("build_rkg: no rings");
  const std::size_t k = rings.front().size();
  for (const auto& ring : rings) {
    if (ring.size() != k) {
      throw ModelError("build_rkg: rings of unequal size");
    }
    if (!std::is_sorted(ring.begin(), ring.end()) ||
        std::adjacent_find(ring.begin(), ring.end()) != ring.end()) {
      throw ModelError("build_rkg: ring keys must be sorted and distinct");
    }
  }
}

inline SimpleGraph build_rkg_merge(const std::vector<KeyRing>& rings) {
  const auto n = static_cast<std::uint32_t>(rings.size());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (rings_intersect(rings[i], rings[j])) edges.emplace_back(i, j);
    }
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

inline SimpleGraph build_rkg_inverted(const std::vector<KeyRing>& rings) {
  const auto n = static_cast<std::uint32_t>(rings.size());
  std::vector<std::pair<std::uint64_t, std::uint32_t>> holders;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint64_t key : rings[i]) holders.emplace_back(key, i);
  }
  std::sort(holders.begin(), holders.end());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t lo = 0; lo < holders.size();) {
    std::size_t hi = lo + 1;
    while (hi < holders.size() && holders[hi].first == holders[lo].first) {
      ++hi;
    }
    for (std::size_t a = lo; a < hi; ++a) {
      for (std::size_t b = a + 1; b < hi; ++b) {
        edges.emplace_back(holders[a].second, holders[b].second);
      }
    }
    lo = hi;
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

}  // namespace detail

/// Builds the random key graph of the given rings: nodes i and j are
/// adjacent iff their rings intersect. All rings must have equal size.
/// Both strategies produce the identical graph; auto_select here resolves
/// to the inverted index (sample_rkg, which knows theta, resolves it by
/// density instead).
inline SimpleGraph build_rkg(const std::vector<KeyRing>& rings,
                             RkgBuild strategy = RkgBuild::merge_scan) {
  detail::validate_rings(rings);
  return strategy == RkgBuild::merge_scan ? detail::build_rkg_merge(rings)
                                          : detail::build_rkg_inverted(rings);
}

/// Samples n i.i.d. key rings and builds their random key graph.
/// auto_select picks the inverted index in sparse regimes and the pair
/// scan in dense ones.
inline SimpleGraph sample_rkg(std::uint32_t n, const Theta& theta,
                              Xoshiro256& rng,
                              RkgBuild strategy = RkgBuild::auto_select) {
  std::vector<KeyRing> rings;
  rings.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rings.push_back(sample_key_ring(theta, rng));
  }
  if (strategy == RkgBuild::auto_select) {
    strategy = edge_prob(theta) > 0.5 ? RkgBuild::merge_scan
                                      : RkgBuild::inverted_index;
  }
  return build_rkg(rings, strategy);
}

/// Samples an Erdos-Renyi graph: each of the C(n,2) edges present
/// independently with probability p. Skip-samples the gaps between edges
/// (geometric jumps), so the cost is O(n + edges).
inline SimpleGraph sample_er(std::uint32_t n, double p, Xoshiro256& rng) {
  if (p < 0.0 || p > 1.0) {
    throw ModelError("sample_er: edge probability outside [0, 1]");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  if (n >= 2 && p > 0.0) {
    if (p >= 1.0) {
      for (std::uint32_t i = 0; i + 1 < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      }
    } else {
      const double log_miss = std::log1p(-p);
      const double total_slots =
          0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
      std::uint32_t i = 0, j = 1;
      // Advances the (i, j) cursor by d slots in row-major pair order;
      // false once the cursor runs off the last pair.
      const auto advance = [&](std::uint64_t d) {
        while (i + 1 < n) {
          const std::uint64_t row_left = n - j;
          if (d < row_left) {
            j += static_cast<std::uint32_t>(d);
            return true;
          }
          d -= row_left;
          ++i;
          j = i + 1;
        }
        return false;
      };
      for (bool in_range = true; in_range;) {
        const double gap = std::log1p(-rng.uniform_double()) / log_miss;
        if (gap > total_slots) break;
        if (gap >= 1.0) in_range = advance(static_cast<std::uint64_t>(gap));
        if (!in_range) break;
        edges.emplace_back(i, j);
        in_range = advance(1);
      }
    }
  }
  return SimpleGraph::from_edges(n, std::move(edges));
}

}  // namespace rkg

#endif  // RKG_GRAPHGEN_HPP
