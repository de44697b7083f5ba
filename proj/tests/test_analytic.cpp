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

#include <cmath>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "rkg/analytic.hpp"
#include "rkg/oracle.hpp"

using rkg::Theta;
using Rational = rkg::oracle::ExactProbability;

namespace {

// Every valid (K, P) with K <= 6, P <= 24: cheap exhaustive grid for the
// order and range invariants.
std::vector<Theta> small_grid() {
  std::vector<Theta> grid;
  for (std::uint64_t k = 1; k <= 6; ++k) {
    for (std::uint64_t p = k; p <= 24; ++p) grid.emplace_back(k, p);
  }
  return grid;
}

}  // namespace

TEST_CASE("Theta validates its invariants", "[analytic]") {
  REQUIRE_THROWS_AS(Theta(0, 5), rkg::ModelError);
  REQUIRE_THROWS_AS(Theta(5, 0), rkg::ModelError);
  REQUIRE_THROWS_AS(Theta(6, 5), rkg::ModelError);
  REQUIRE_NOTHROW(Theta(5, 5));  // degenerate full-pool ring is allowed
}

TEST_CASE("Probability rejects out-of-range values", "[analytic]") {
  REQUIRE_THROWS_AS(rkg::Probability(1.5), rkg::ModelError);
  REQUIRE_THROWS_AS(rkg::Probability(-0.1), rkg::ModelError);
  REQUIRE(rkg::Probability(1.0 + 1e-15).value() == 1.0);
  REQUIRE(rkg::Probability(-1e-15).value() == 0.0);
}

TEST_CASE("avoidance probability", "[analytic]") {
  REQUIRE(rkg::avoidance_prob(Theta(2, 4), 2) == Catch::Approx(1.0 / 6.0));
  REQUIRE(rkg::avoidance_prob(Theta(2, 4), 0) == 1.0);
  REQUIRE(rkg::avoidance_prob(Theta(6, 9), 0) == 1.0);
  // Avoiding more keys than can fit outside the ring is impossible.
  REQUIRE(rkg::avoidance_prob(Theta(2, 4), 3) == 0.0);
  REQUIRE_THROWS_AS(rkg::avoidance_prob(Theta(2, 4), 5), rkg::ModelError);
  // Reference-table value: avoiding one full ring, K=4 P=1000.
  REQUIRE(std::abs(rkg::avoidance_prob(Theta(4, 1000), 4) -
                   (1.0 - 0.0159)) < 5e-5);
}

TEST_CASE("disjointness probability", "[analytic]") {
  REQUIRE(rkg::disjoint_prob(Theta(3, 5)) == 0.0);
  REQUIRE(rkg::disjoint_prob(Theta(1, 10)) == Catch::Approx(0.9));
  REQUIRE(std::abs(rkg::disjoint_prob(Theta(4, 1000)) - 0.9841) < 5e-5);

  for (const Theta& theta : small_grid()) {
    const double q = rkg::disjoint_prob(theta);
    REQUIRE(q >= 0.0);
    REQUIRE(q < 1.0);
    const bool positive = 2 * theta.ring_size() <= theta.pool_size();
    REQUIRE((q > 0.0) == positive);
  }
}

TEST_CASE("disjointness is nondecreasing in the pool size", "[analytic]") {
  double prev = 0.0;
  for (std::uint64_t p = 6; p <= 60; ++p) {
    const double q = rkg::disjoint_prob(Theta(3, p));
    REQUIRE(q >= prev);
    prev = q;
  }
}

TEST_CASE("edge probability", "[analytic]") {
  REQUIRE(rkg::edge_prob(Theta(3, 5)) == 1.0);
  REQUIRE(std::abs(rkg::edge_prob(Theta(4, 1000)) - 0.0159) < 5e-5);
  REQUIRE(std::abs(rkg::edge_prob(Theta(8, 5000)) - 0.0127) < 5e-5);
}

TEST_CASE("two-ring avoidance probability", "[analytic]") {
  REQUIRE(rkg::two_ring_avoidance_prob(Theta(2, 4)) == 0.0);
  REQUIRE(rkg::two_ring_avoidance_prob(Theta(1, 10)) == Catch::Approx(0.8));
  REQUIRE(rkg::two_ring_avoidance_prob(Theta(2, 10)) ==
          Catch::Approx(1.0 / 3.0));
}

TEST_CASE("triangle probability", "[analytic]") {
  REQUIRE(rkg::triangle_prob(Theta(2, 4)) == Catch::Approx(7.0 / 12.0));
  REQUIRE(rkg::triangle_prob(Theta(3, 5)) == 1.0);
  REQUIRE(rkg::triangle_prob(Theta(1, 2)) == Catch::Approx(0.25));
}

TEST_CASE("order invariants across the grid", "[analytic]") {
  for (const Theta& theta : small_grid()) {
    const double q = rkg::disjoint_prob(theta);
    const double r = rkg::two_ring_avoidance_prob(theta);
    const double beta = rkg::triangle_prob(theta);
    REQUIRE(r <= q * q + 1e-15);
    REQUIRE(beta >= (1.0 - q) * (1.0 - q) * (1.0 - q) - 1e-15);
    REQUIRE(beta > 0.0);
    REQUIRE(beta <= 1.0 + 1e-15);
  }
}

TEST_CASE("triangle scaling surrogate", "[analytic]") {
  REQUIRE(std::abs(rkg::triangle_scaling(Theta(4, 1000)) - 6.8096e-5) <
          1e-9);
  REQUIRE(rkg::triangle_scaling(Theta(1, 1)) == 2.0);  // not a probability
  REQUIRE(rkg::triangle_scaling(Theta(2, 8)) == Catch::Approx(0.25));
}

TEST_CASE("clustering coefficients", "[analytic]") {
  REQUIRE(std::abs(rkg::rkg_clustering(Theta(4, 1000)) - 0.2590) < 5e-4);
  REQUIRE(std::abs(rkg::rkg_clustering(Theta(64, 1000000)) - 0.0196) < 5e-4);
  REQUIRE(rkg::rkg_clustering(Theta(3, 5)) == 1.0);

  REQUIRE(rkg::er_clustering(0.0159) == 0.0159);
  REQUIRE(rkg::er_clustering(0.0) == 0.0);
  REQUIRE(rkg::er_clustering(1.0) == 1.0);
  REQUIRE_THROWS_AS(rkg::er_clustering(1.5), rkg::ModelError);
}

TEST_CASE("expected triangle counts", "[analytic]") {
  REQUIRE(rkg::expected_triangles_rkg(3, Theta(2, 4)) ==
          Catch::Approx(7.0 / 12.0));
  REQUIRE(rkg::expected_triangles_rkg(4, Theta(3, 5)) == 4.0);
  REQUIRE_THROWS_AS(rkg::expected_triangles_rkg(2, Theta(2, 4)),
                    rkg::ModelError);

  REQUIRE(rkg::expected_triangles_er(3, 0.5) == Catch::Approx(0.125));
  REQUIRE(rkg::expected_triangles_er(4, 1.0) == 4.0);
  REQUIRE_THROWS_AS(rkg::expected_triangles_er(2, 0.5), rkg::ModelError);
}

TEST_CASE("triangle second moment", "[analytic]") {
  // At n = 3 the pair and cross terms vanish: E[T^2] = E[T] = beta.
  for (const Theta& theta :
       {Theta(2, 4), Theta(1, 2), Theta(3, 5), Theta(2, 10)}) {
    const double beta = rkg::triangle_prob(theta);
    const double q = rkg::disjoint_prob(theta);
    for (const double cross : {beta * beta, beta * (1.0 - q)}) {
      REQUIRE(rkg::triangle_second_moment(3, theta, cross) ==
              Catch::Approx(beta));
    }
  }
  // n = 4, theta = (2,4), enumerated cross moment 89/216: E[T^2] = 131/18.
  REQUIRE(rkg::triangle_second_moment(4, Theta(2, 4), 89.0 / 216.0) ==
          Catch::Approx(131.0 / 18.0).epsilon(1e-12));
}

TEST_CASE("cross moment bracket is enforced", "[analytic]") {
  const Theta theta(2, 10);
  const double beta = rkg::triangle_prob(theta);
  const double q = rkg::disjoint_prob(theta);
  REQUIRE_THROWS_AS(
      rkg::triangle_second_moment(5, theta, beta * beta - 1e-3),
      rkg::ModelError);
  REQUIRE_THROWS_AS(
      rkg::triangle_second_moment(5, theta, beta * (1.0 - q) + 1e-3),
      rkg::ModelError);
  REQUIRE_THROWS_AS(
      rkg::normalized_triangle_variance(5, theta, beta * beta - 1e-3),
      rkg::ModelError);
}

TEST_CASE("normalized triangle variance", "[analytic]") {
  // n = 3: the normalized count is Bernoulli(beta).
  const double beta24 = 7.0 / 12.0;
  REQUIRE(rkg::normalized_triangle_variance(3, Theta(2, 4), 89.0 / 216.0) ==
          Catch::Approx(beta24 * (1.0 - beta24)));

  // Fixed theta, growing n: variance decreases to zero...
  const Theta theta(2, 10);
  const double cross =
      rkg::oracle::enumerate_cross_moment(theta).convert_to<double>();
  double prev = rkg::normalized_triangle_variance(10, theta, cross);
  for (const std::uint64_t n : {20, 40, 80}) {
    const double var = rkg::normalized_triangle_variance(n, theta, cross);
    REQUIRE(var < prev);
    REQUIRE(var > 0.0);
    prev = var;
  }
  // ...with n^2 * variance approaching 18 * (cross - beta^2).
  const double beta = rkg::triangle_prob(theta);
  const double limit = 18.0 * (cross - beta * beta);
  const double near = 1280.0 * 1280.0 *
                      rkg::normalized_triangle_variance(1280, theta, cross);
  const double far =
      10.0 * 10.0 * rkg::normalized_triangle_variance(10, theta, cross);
  REQUIRE(std::abs(near / limit - 1.0) < 0.05);
  REQUIRE(std::abs(near - limit) < std::abs(far - limit));

  // Degenerate complete graph: the count is deterministic.
  for (const std::uint64_t n : {3, 5, 10}) {
    REQUIRE(std::abs(rkg::normalized_triangle_variance(n, Theta(3, 5),
                                                       1.0)) < 1e-12);
  }
}

TEST_CASE("exact matching ratio", "[analytic]") {
  REQUIRE(rkg::exact_matching_ratio(Theta(1, 100)) == Catch::Approx(100.0));
  REQUIRE(rkg::exact_matching_ratio(Theta(2, 10)) ==
          Catch::Approx(5.0 * 1593.0 / 4913.0));
  REQUIRE(rkg::exact_matching_ratio(Theta(3, 5)) == 1.0);

  for (const Theta& theta : small_grid()) {
    const double ratio = rkg::exact_matching_ratio(theta);
    REQUIRE(ratio >= 1.0 - 1e-15);
    const bool complete = theta.pool_size() < 2 * theta.ring_size();
    if (complete) {
      REQUIRE(ratio == 1.0);
    } else {
      REQUIRE(ratio > 1.0);
    }
    // Middle regime closed form: r = 0 there.
    if (!complete && theta.pool_size() < 3 * theta.ring_size()) {
      const double q = rkg::disjoint_prob(theta);
      const double odds = q / (1.0 - q);
      REQUIRE(ratio == Catch::Approx(1.0 + odds * odds * odds));
    }
  }
}

TEST_CASE("asymptotic matching ratio", "[analytic]") {
  REQUIRE(rkg::asymptotic_matching_ratio(Theta(1, 100)) == 101.0);
  REQUIRE(rkg::asymptotic_matching_ratio(Theta(10, 1000)) == 2.0);
  REQUIRE(rkg::asymptotic_matching_ratio(Theta(4, 1000)) == 16.625);
}

TEST_CASE("stable avoidance ratio equals r/q^2", "[analytic]") {
  REQUIRE(rkg::avoidance_ratio_stable(Theta(1, 10)) ==
          Catch::Approx(80.0 / 81.0));
  REQUIRE(rkg::avoidance_ratio_stable(Theta(2, 10)) ==
          Catch::Approx(675.0 / 784.0));
  REQUIRE(rkg::avoidance_ratio_stable(Theta(2, 6)) ==
          Catch::Approx(5.0 / 12.0));
  REQUIRE_THROWS_AS(rkg::avoidance_ratio_stable(Theta(2, 5)),
                    rkg::ModelError);

  for (const Theta& theta : small_grid()) {
    if (theta.pool_size() < 3 * theta.ring_size()) continue;
    const double q = rkg::disjoint_prob(theta);
    const double r = rkg::two_ring_avoidance_prob(theta);
    const double direct = r / (q * q);
    const double stable = rkg::avoidance_ratio_stable(theta);
    REQUIRE(std::abs(stable - direct) <= 1e-12 * direct);
  }
}

TEST_CASE("matched edge probability", "[analytic]") {
  REQUIRE(std::abs(rkg::matched_edge_prob(Theta(4, 1000),
                                          rkg::MatchMode::exact) -
                   0.0159) < 5e-5);
  REQUIRE(rkg::matched_edge_prob(Theta(4, 1000),
                                 rkg::MatchMode::asymptotic) == 0.016);
  REQUIRE(rkg::matched_edge_prob(Theta(3, 5), rkg::MatchMode::exact) == 1.0);
  // K^2/P > 1 clamps to 1.
  REQUIRE(rkg::matched_edge_prob(Theta(4, 10),
                                 rkg::MatchMode::asymptotic) == 1.0);
}

TEST_CASE("asymptotic equivalences along a vanishing-density sequence",
          "[analytic]") {
  // theta_m = (2, 10 * 2^m): K^2/P -> 0.
  std::uint64_t pool = 10;
  for (int m = 0; m <= 10; ++m, pool *= 2) {
    const Theta theta(2, pool);
    const double edge = rkg::edge_prob(theta);
    const double density = 4.0 / static_cast<double>(pool);
    const double lemma_ratio = edge / density;
    const double beta_tau_ratio =
        rkg::triangle_prob(theta) / rkg::triangle_scaling(theta);
    if (m == 10) {
      REQUIRE(std::abs(lemma_ratio - 1.0) < 0.05);
      REQUIRE(std::abs(beta_tau_ratio - 1.0) < 0.05);
    }
  }
}

TEST_CASE("exact rational evaluation path", "[analytic]") {
  REQUIRE(rkg::disjoint_prob<Rational>(Theta(1, 10)) == Rational(9, 10));
  REQUIRE(rkg::triangle_prob<Rational>(Theta(2, 4)) == Rational(7, 12));
  REQUIRE(rkg::triangle_prob<Rational>(Theta(1, 2)) == Rational(1, 4));
  REQUIRE(rkg::two_ring_avoidance_prob<Rational>(Theta(2, 10)) ==
          Rational(1, 3));
  REQUIRE(rkg::exact_matching_ratio<Rational>(Theta(2, 10)) ==
          Rational(7965, 4913));

  // The stable product is an algebraic identity, so it must match the
  // direct quotient exactly in rational arithmetic.
  for (const Theta& theta : {Theta(1, 10), Theta(2, 10), Theta(4, 30),
                             Theta(5, 64), Theta(3, 17)}) {
    const Rational q = rkg::disjoint_prob<Rational>(theta);
    const Rational r = rkg::two_ring_avoidance_prob<Rational>(theta);
    REQUIRE(rkg::avoidance_ratio_stable<Rational>(theta) == r / (q * q));
  }
}

TEST_CASE("analytic report", "[analytic]") {
  const auto rep = rkg::make_analytic_report(1000, Theta(4, 1000));
  REQUIRE(std::abs(rep.clustering_rkg.value() - 0.2590) < 5e-4);
  REQUIRE(std::abs(rep.edge.value() - 0.0159) < 5e-5);
  REQUIRE(rep.ratio_clustering >= 1.0);
  REQUIRE(rep.ratio_triangles == rep.ratio_clustering);
  const double q = rep.disjoint.value();
  REQUIRE(rep.triangle.value() >= (1 - q) * (1 - q) * (1 - q) - 1e-15);
  REQUIRE(rep.two_ring_avoid.value() <= q * q);
  REQUIRE(rep.expected_triangles ==
          Catch::Approx(166167000.0 * rep.triangle.value()));
  REQUIRE_THROWS_AS(rkg::make_analytic_report(2, Theta(4, 1000)),
                    rkg::ModelError);
}
