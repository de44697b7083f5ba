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
// Exact-rational ground truth by exhaustive enumeration over all key-ring
// assignments. Only feasible for tiny parameters; everything here is
// guarded so a single call stays in the seconds range. Deterministic by
// construction: rings are visited in colexicographic order through an
// explicit rank/unrank pair, assignments as a plain odometer.

#ifndef RKG_ORACLE_HPP
#define RKG_ORACLE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rkg/graphgen.hpp"
#include "rkg/theta.hpp"

namespace rkg::oracle {

/// Thrown when an enumeration would exceed the iteration budget. The CLI
/// maps this to exit code 4.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BigInt = boost::multiprecision::cpp_int;
using ExactProbability = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kIterationGuard = 10'000'000;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    result = result * (n - i) / (i + 1);
  }
  return result;
}

/// Colexicographic rank of a sorted key subset (keys 1-based, rank
/// 0-based): sum over positions i (1-based) of C(key_i - 1, i).
inline std::uint64_t colex_rank(const KeyRing& subset) {
  BigInt rank = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    rank += binomial(subset[i] - 1, i + 1);
  }
  return rank.convert_to<std::uint64_t>();
}

/// Inverse of colex_rank for K-subsets of {1, ..., P}.
inline KeyRing colex_unrank(std::uint64_t rank, const Theta& theta) {
  const std::uint64_t k = theta.ring_size();
  KeyRing subset(k);
  BigInt rem = rank;
  std::uint64_t ceiling = theta.pool_size();
  for (std::uint64_t i = k; i >= 1; --i) {
    std::uint64_t key = ceiling;   // largest candidate for position i
    while (key > i && binomial(key - 1, i) > rem) --key;
    rem -= binomial(key - 1, i);
    subset[i - 1] = key;
    ceiling = key - 1;
  }
  return subset;
}

namespace detail {

inline std::uint64_t guarded_ring_count(const Theta& theta,
                                        unsigned power,
                                        const char* where) {
  const BigInt count = binomial(theta.pool_size(), theta.ring_size());
  BigInt total = 1;
  for (unsigned i = 0; i < power; ++i) total *= count;
  if (total > kIterationGuard) {
    throw GuardError(std::string(where) + ": C(P,K)^" +
                     std::to_string(power) + " = " + total.str() +
                     " exceeds the iteration guard of " +
                     std::to_string(kIterationGuard));
  }
  return count.convert_to<std::uint64_t>();
}

struct RingUniverse {
  std::vector<KeyRing> rings;          // colex order
  std::vector<std::uint8_t> intersects;  // row-major M x M

  explicit RingUniverse(const Theta& theta, std::uint64_t count) {
    rings.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) {
      rings.push_back(colex_unrank(r, theta));
    }
    intersects.assign(count * count, 0);
    for (std::uint64_t a = 0; a < count; ++a) {
      for (std::uint64_t b = a; b < count; ++b) {
        const std::uint8_t hit = rings_intersect(rings[a], rings[b]) ? 1 : 0;
        intersects[a * count + b] = hit;
        intersects[b * count + a] = hit;
      }
    }
  }

  bool meet(std::uint64_t a, std::uint64_t b) const {
    return intersects[a * rings.size() + b] != 0;
  }
};

}  // namespace detail

/// Exact triangle probability: fraction of ordered ring triples whose
/// three pairwise intersections are all nonempty. Must equal the closed
/// form evaluated in rational arithmetic.
inline ExactProbability enumerate_beta(const Theta& theta) {
  const std::uint64_t m =
      detail::guarded_ring_count(theta, 3, "enumerate_beta");
  const detail::RingUniverse u(theta, m);
  std::uint64_t hits = 0;
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t b = 0; b < m; ++b) {
      if (!u.meet(a, b)) continue;
      for (std::uint64_t c = 0; c < m; ++c) {
        if (u.meet(a, c) && u.meet(b, c)) ++hits;
      }
    }
  }
  return ExactProbability(BigInt(hits), BigInt(m) * m * m);
}

/// Exact cross moment E[chi_123 chi_124]: fraction of ordered ring
/// quadruples in which both node triples {1,2,3} and {1,2,4} form
/// triangles.
inline ExactProbability enumerate_cross_moment(const Theta& theta) {
  const std::uint64_t m =
      detail::guarded_ring_count(theta, 4, "enumerate_cross_moment");
  const detail::RingUniverse u(theta, m);
  std::uint64_t hits = 0;
  for (std::uint64_t a = 0; a < m; ++a) {
    for (std::uint64_t b = 0; b < m; ++b) {
      if (!u.meet(a, b)) continue;
      for (std::uint64_t c = 0; c < m; ++c) {
        if (!u.meet(a, c) || !u.meet(b, c)) continue;
        for (std::uint64_t d = 0; d < m; ++d) {
          if (u.meet(a, d) && u.meet(b, d)) ++hits;
        }
      }
    }
  }
  BigInt denom = BigInt(m) * m;
  denom = denom * denom;
  return ExactProbability(BigInt(hits), denom);
}

/// Exact distribution of the triangle count over all ring assignments of
/// n nodes: probabilities[t] = P(T_n = t).
struct TriangleCountDistribution {
  std::uint64_t n = 0;
  std::vector<ExactProbability> probabilities;

  ExactProbability mean() const {
    ExactProbability acc = 0;
    for (std::size_t t = 1; t < probabilities.size(); ++t) {
      acc += ExactProbability(t) * probabilities[t];
    }
    return acc;
  }

  ExactProbability second_moment() const {
    ExactProbability acc = 0;
    for (std::size_t t = 1; t < probabilities.size(); ++t) {
      acc += ExactProbability(t * t) * probabilities[t];
    }
    return acc;
  }
};

inline TriangleCountDistribution enumerate_triangle_count_distribution(
    std::uint64_t n, const Theta& theta) {
  if (n < 3) {
    throw ModelError(
        "enumerate_triangle_count_distribution: requires n >= 3");
  }
  const std::uint64_t m = binomial(theta.pool_size(), theta.ring_size())
                              .convert_to<std::uint64_t>();
  BigInt total = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    total *= m;
    if (total > kIterationGuard) {
      throw GuardError(
          "enumerate_triangle_count_distribution: C(P,K)^n exceeds the "
          "iteration guard of " +
          std::to_string(kIterationGuard));
    }
  }
  const detail::RingUniverse u(theta, m);
  std::vector<std::array<std::uint32_t, 3>> triples;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      for (std::uint32_t k = j + 1; k < n; ++k) {
        triples.push_back({i, j, k});
      }
    }
  }
  std::vector<std::uint64_t> histogram(triples.size() + 1, 0);
  std::vector<std::uint64_t> digits(n, 0);  // digits[n-1] varies fastest
  const std::uint64_t assignments = total.convert_to<std::uint64_t>();
  for (std::uint64_t a = 0; a < assignments; ++a) {
    std::uint64_t count = 0;
    for (const auto& [i, j, k] : triples) {
      if (u.meet(digits[i], digits[j]) && u.meet(digits[i], digits[k]) &&
          u.meet(digits[j], digits[k])) {
        ++count;
      }
    }
    ++histogram[count];
    for (std::uint64_t pos = n; pos-- > 0;) {
      if (++digits[pos] < m) break;
      digits[pos] = 0;
    }
  }
  TriangleCountDistribution dist;
  dist.n = n;
  dist.probabilities.reserve(histogram.size());
  for (const std::uint64_t h : histogram) {
    dist.probabilities.emplace_back(BigInt(h), total);
  }
  return dist;
}

}  // namespace rkg::oracle

#endif  // RKG_ORACLE_HPP
