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
// Closed-form quantities of the random key graph model: avoidance, edge
// and triangle probabilities, clustering coefficients, triangle-count
// moments, and the exact/asymptotic comparison ratios against matched
// Erdos-Renyi graphs.
//
// Every function is a pure function of its arguments and is templated on
// the scalar type. Scalar = double gives the fast path; an exact-rational
// type (e.g. boost::multiprecision::cpp_rational) gives bit-exact values
// for oracle tests. Binomial ratios are always evaluated as products of
// ring_size factors, never through raw factorials, so the double path
// stays accurate for pool sizes up to ~1e9.

#ifndef RKG_ANALYTIC_HPP
#define RKG_ANALYTIC_HPP

#include <cstdint>
#include <string>
#include <type_traits>

#include "rkg/theta.hpp"

namespace rkg {

/// P(a key ring avoids a fixed set of `avoid_count` keys). Equals
/// C(P-s, K)/C(P, K), evaluated as prod_{l=0..K-1} (P-s-l)/(P-l);
/// 0 when avoid_count > P - K. Rejects avoid_count > P.
template <class Scalar = double>
Scalar avoidance_prob(const Theta& theta, std::uint64_t avoid_count) {
  const std::uint64_t k = theta.ring_size();
  const std::uint64_t p = theta.pool_size();
  if (avoid_count > p) {
    throw ModelError("avoidance_prob: avoided set larger than the pool");
  }
  if (avoid_count > p - k) return Scalar(0);
  Scalar prob(1);
  for (std::uint64_t l = 0; l < k; ++l) {
    prob = prob * Scalar(p - avoid_count - l) / Scalar(p - l);
  }
  return prob;
}

/// P(two independent key rings are disjoint). Positive iff 2K <= P.
template <class Scalar = double>
Scalar disjoint_prob(const Theta& theta) {
  if (theta.pool_size() < 2 * theta.ring_size()) return Scalar(0);
  return avoidance_prob<Scalar>(theta, theta.ring_size());
}

/// Edge probability: 1 - disjoint_prob. Equals 1 when P < 2K (the graph
/// is then complete).
template <class Scalar = double>
Scalar edge_prob(const Theta& theta) {
  return Scalar(1) - disjoint_prob<Scalar>(theta);
}

/// P(a key ring avoids the union of two disjoint rings), i.e. the
/// avoidance probability of a fixed 2K-subset. Zero when P < 3K.
template <class Scalar = double>
Scalar two_ring_avoidance_prob(const Theta& theta) {
  if (theta.pool_size() < 3 * theta.ring_size()) return Scalar(0);
  return avoidance_prob<Scalar>(theta, 2 * theta.ring_size());
}

/// Ratio two_ring_avoidance_prob / disjoint_prob^2 evaluated directly as
/// the product prod_{l=0..K-1} (1 - (K/(P-K-l))^2). Algebraically equal
/// to the quotient but free of the catastrophic cancellation the naive
/// route hits when the ratio is close to 1. Requires 3K <= P.
template <class Scalar = double>
Scalar avoidance_ratio_stable(const Theta& theta) {
  const std::uint64_t k = theta.ring_size();
  const std::uint64_t p = theta.pool_size();
  if (p < 3 * k) {
    throw ModelError("avoidance_ratio_stable: requires 3K <= P");
  }
  Scalar one(1);
  Scalar prod(1);
  for (std::uint64_t l = 0; l < k; ++l) {
    const Scalar f = Scalar(k) / Scalar(p - k - l);
    prod = prod * (one - f * f);
  }
  return prod;
}

/// P(three distinct nodes form a triangle):
/// (1-q)^3 + q^3 - q*r with q = disjoint_prob, r = two_ring_avoidance_prob.
/// Evaluated as (1-q)^3 + q^3*(1 - r/q^2) with the stable ratio, which is
/// the same expression with the cancellation-prone difference factored out.
/// Always >= (1-q)^3 > 0.
template <class Scalar = double>
Scalar triangle_prob(const Theta& theta) {
  const Scalar one(1);
  const Scalar q = disjoint_prob<Scalar>(theta);
  const Scalar p = one - q;
  if (theta.pool_size() < 3 * theta.ring_size()) {
    // r = 0; no small difference to protect.
    return p * p * p + q * q * q;
  }
  const Scalar ratio = avoidance_ratio_stable<Scalar>(theta);
  return p * p * p + q * q * q * (one - ratio);
}

/// Zero-one-law scaling surrogate K^3/P^2 + (K^2/P)^3 for the triangle
/// probability. Deliberately not clamped to [0,1]: it is a scaling
/// quantity, not a probability, and exceeds 1 for degenerate parameters.
template <class Scalar = double>
Scalar triangle_scaling(const Theta& theta) {
  const Scalar k(theta.ring_size());
  const Scalar p(theta.pool_size());
  const Scalar a = k * k * k / (p * p);
  const Scalar b = k * k / p;
  return a + b * b * b;
}

/// Conditional-probability clustering coefficient of the random key
/// graph: P(edge 12 | edges 13 and 23) = triangle_prob / edge_prob^2.
/// Equals 1 in the complete-graph regime P < 2K.
template <class Scalar = double>
Scalar rkg_clustering(const Theta& theta) {
  const Scalar p = edge_prob<Scalar>(theta);
  return triangle_prob<Scalar>(theta) / (p * p);
}

/// Clustering coefficient of an Erdos-Renyi graph with edge probability
/// p: by edge independence it is p itself.
template <class Scalar = double>
Scalar er_clustering(const Scalar& p) {
  if (p < Scalar(0) || p > Scalar(1)) {
    throw ModelError("er_clustering: edge probability outside [0, 1]");
  }
  return p;
}

namespace detail {

template <class Scalar>
Scalar choose3(std::uint64_t n) {
  return Scalar(n) * Scalar(n - 1) * Scalar(n - 2) / Scalar(6);
}

inline void require_n3(std::uint64_t n, const char* where) {
  if (n < 3) {
    throw ModelError(std::string(where) + ": requires n >= 3");
  }
}

// (C(n-3,3) + 3 C(n-3,2)) / C(n,3): weight of the pairs of triples that
// share at most one node, whose triangle indicators are independent. The
// two-shared-node pairs carry the cross moment and are added by callers.
template <class Scalar>
Scalar disjoint_pair_coeff(std::uint64_t n, const Scalar& c3) {
  Scalar coeff(0);
  if (n >= 5) {
    coeff = coeff + Scalar(3) * Scalar(n - 3) * Scalar(n - 4) / Scalar(2);
  }
  if (n >= 6) coeff = coeff + choose3<Scalar>(n - 3);
  return coeff / c3;
}

}  // namespace detail

/// E[number of triangles] = C(n,3) * triangle_prob.
template <class Scalar = double>
Scalar expected_triangles_rkg(std::uint64_t n, const Theta& theta) {
  detail::require_n3(n, "expected_triangles_rkg");
  return detail::choose3<Scalar>(n) * triangle_prob<Scalar>(theta);
}

/// E[number of triangles in an Erdos-Renyi graph] = C(n,3) * p^3.
template <class Scalar = double>
Scalar expected_triangles_er(std::uint64_t n, const Scalar& p) {
  detail::require_n3(n, "expected_triangles_er");
  return detail::choose3<Scalar>(n) * p * p * p;
}

namespace detail {

// The model gives no closed form for the two-triangle cross moment
// E[chi_123 chi_124]; callers supply it (enumerated or estimated). It is
// bracketed below by independence and above by dropping the third edge
// of the second triangle, and values outside that bracket are rejected.
template <class Scalar>
void check_cross_moment(const Theta& theta, const Scalar& cross_moment,
                        const char* where) {
  const Scalar beta = triangle_prob<Scalar>(theta);
  const Scalar lo = beta * beta;
  const Scalar hi = beta * (Scalar(1) - disjoint_prob<Scalar>(theta));
  Scalar slack(0);
  if constexpr (std::is_floating_point_v<Scalar>) slack = 1e-9 * hi;
  if (cross_moment < lo - slack || cross_moment > hi + slack) {
    throw ModelError(std::string(where) +
                     ": cross moment outside the admissible bracket "
                     "[triangle_prob^2, triangle_prob*(1-disjoint_prob)]");
  }
}

}  // namespace detail

/// Second moment of the triangle count:
///   E[T^2] = E[T] + (C(n-3,3)/C(n,3) + 3 C(n-3,2)/C(n,3)) E[T]^2
///          + 3 (n-3) C(n,3) * cross_moment
/// where cross_moment = E[chi_123 chi_124] is supplied by the caller.
template <class Scalar = double>
Scalar triangle_second_moment(std::uint64_t n, const Theta& theta,
                              const Scalar& cross_moment) {
  detail::require_n3(n, "triangle_second_moment");
  detail::check_cross_moment(theta, cross_moment, "triangle_second_moment");
  const Scalar c3 = detail::choose3<Scalar>(n);
  const Scalar mean = c3 * triangle_prob<Scalar>(theta);
  const Scalar pair_coeff = detail::disjoint_pair_coeff<Scalar>(n, c3);
  return mean + pair_coeff * mean * mean +
         Scalar(3) * Scalar(n - 3) * c3 * cross_moment;
}

/// Variance of the normalized count T_n / C(n,3); n^2 * variance tends to
/// 18 * (cross_moment - triangle_prob^2) as n grows.
template <class Scalar = double>
Scalar normalized_triangle_variance(std::uint64_t n, const Theta& theta,
                                    const Scalar& cross_moment) {
  detail::require_n3(n, "normalized_triangle_variance");
  detail::check_cross_moment(theta, cross_moment,
                             "normalized_triangle_variance");
  const Scalar c3 = detail::choose3<Scalar>(n);
  const Scalar beta = triangle_prob<Scalar>(theta);
  const Scalar pair_coeff = detail::disjoint_pair_coeff<Scalar>(n, c3);
  return beta / c3 + (pair_coeff - Scalar(1)) * beta * beta +
         Scalar(3) * Scalar(n - 3) / c3 * cross_moment;
}

/// Ratio of the random key graph clustering coefficient to that of the
/// exactly matched Erdos-Renyi graph (p = edge_prob):
///   1 + q^3 (1 - r/q^2) / (1-q)^3.
/// Always >= 1, with equality iff P < 2K. This also equals the ratio of
/// expected triangle counts under exact matching.
template <class Scalar = double>
Scalar exact_matching_ratio(const Theta& theta) {
  const Scalar one(1);
  const Scalar q = disjoint_prob<Scalar>(theta);
  const Scalar p = one - q;
  Scalar avoid_ratio(0);
  if (theta.pool_size() >= 3 * theta.ring_size()) {
    avoid_ratio = avoidance_ratio_stable<Scalar>(theta);
  }
  return one + q * q * q * (one - avoid_ratio) / (p * p * p);
}

/// Shared large-n limit of the triangle-count and clustering ratios
/// between a random key graph and its asymptotically matched
/// Erdos-Renyi graph: 1 + P/K^3.
template <class Scalar = double>
Scalar asymptotic_matching_ratio(const Theta& theta) {
  const Scalar k(theta.ring_size());
  return Scalar(1) + Scalar(theta.pool_size()) / (k * k * k);
}

enum class MatchMode {
  exact,       ///< p = edge_prob(theta)
  asymptotic,  ///< p = min(K^2/P, 1)
};

/// Edge probability of the Erdos-Renyi graph matched to `theta`.
template <class Scalar = double>
Scalar matched_edge_prob(const Theta& theta, MatchMode mode) {
  if (mode == MatchMode::exact) return edge_prob<Scalar>(theta);
  const Scalar k(theta.ring_size());
  const Scalar ratio = k * k / Scalar(theta.pool_size());
  return ratio > Scalar(1) ? Scalar(1) : ratio;
}

/// All closed-form quantities for one (n, theta) configuration, with the
/// Erdos-Renyi comparison columns computed under exact matching.
struct AnalyticReport {
  Theta theta;
  std::uint64_t n = 0;
  Probability disjoint;          // q
  Probability edge;              // p = 1 - q
  Probability two_ring_avoid;    // r
  Probability triangle;          // triangle probability
  double scaling = 0.0;          // tau; may exceed 1, not a probability
  Probability clustering_rkg;    // conditional clustering coefficient
  double expected_triangles = 0.0;
  double expected_triangles_matched_er = 0.0;
  double ratio_triangles = 0.0;
  double ratio_clustering = 0.0;
};

inline AnalyticReport make_analytic_report(std::uint64_t n,
                                           const Theta& theta) {
  detail::require_n3(n, "make_analytic_report");
  const double p = edge_prob(theta);
  // Under exact matching the triangle-count and clustering ratios agree.
  const double ratio = exact_matching_ratio(theta);
  return AnalyticReport{
      theta,
      n,
      Probability(disjoint_prob(theta)),
      Probability(p),
      Probability(two_ring_avoidance_prob(theta)),
      Probability(triangle_prob(theta)),
      triangle_scaling(theta),
      Probability(rkg_clustering(theta)),
      expected_triangles_rkg(n, theta),
      expected_triangles_er(n, p),
      ratio,
      ratio,
  };
}

}  // namespace rkg

#endif  // RKG_ANALYTIC_HPP
