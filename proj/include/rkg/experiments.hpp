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
// Monte Carlo estimators, scaling families and the experiments that
// reproduce the model's reference tables and threshold behavior.
//
// Reproducibility contract: every replication r of configuration block b
// draws from Xoshiro256::substream(seed, b*replications + r), and results
// are stored per replication and reduced in index order. Output is
// therefore byte-identical for a given seed regardless of worker count.

#ifndef RKG_EXPERIMENTS_HPP
#define RKG_EXPERIMENTS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "rkg/analytic.hpp"
#include "rkg/graphgen.hpp"
#include "rkg/metrics.hpp"
#include "rkg/oracle.hpp"
#include "rkg/rng.hpp"
#include "rkg/theta.hpp"

namespace rkg {

/// Runs fn(i) for i in [0, count) on up to `threads` workers with static
/// contiguous partitioning. The first exception thrown by any worker is
/// rethrown on the caller.
template <class Fn>
void parallel_for(std::uint64_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = count * w / workers;
    const std::uint64_t hi = count * (w + 1) / workers;
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::uint64_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t replications = 0;
};

namespace detail {

inline McEstimate frequency_estimate(const std::vector<std::uint8_t>& hits) {
  const auto reps = static_cast<std::uint64_t>(hits.size());
  std::uint64_t count = 0;
  for (const std::uint8_t h : hits) count += h;
  const double v = static_cast<double>(count) / static_cast<double>(reps);
  const double se = std::sqrt(v * (1.0 - v) / static_cast<double>(reps));
  return {v, se, reps};
}

struct MeanVar {
  double mean = 0.0;
  double variance = 0.0;  // sample variance (n-1 denominator)
  double se_mean = 0.0;
};

template <class T>
MeanVar mean_var(const std::vector<T>& xs) {
  const auto n = static_cast<double>(xs.size());
  double sum = 0.0;
  for (const T& x : xs) sum += static_cast<double>(x);
  const double mean = sum / n;
  double ss = 0.0;
  for (const T& x : xs) {
    const double d = static_cast<double>(x) - mean;
    ss += d * d;
  }
  const double var = xs.size() > 1 ? ss / (n - 1.0) : 0.0;
  return {mean, var, std::sqrt(var / n)};
}

}  // namespace detail

/// Triangle-event frequency over independent ring triples; binomial
/// standard error.
inline McEstimate estimate_beta_mc(const Theta& theta,
                                   std::uint64_t replications,
                                   std::uint64_t seed, unsigned threads = 1) {
  if (replications < 1) throw ModelError("estimate_beta_mc: replications >= 1");
  std::vector<std::uint8_t> hits(replications, 0);
  parallel_for(replications, threads, [&](std::uint64_t r) {
    auto rng = Xoshiro256::substream(seed, r);
    const KeyRing a = sample_key_ring(theta, rng);
    const KeyRing b = sample_key_ring(theta, rng);
    const KeyRing c = sample_key_ring(theta, rng);
    hits[r] = rings_intersect(a, b) && rings_intersect(a, c) &&
                      rings_intersect(b, c)
                  ? 1
                  : 0;
  });
  return detail::frequency_estimate(hits);
}

/// Frequency of both node triples {1,2,3} and {1,2,4} forming triangles
/// over independent ring quadruples.
inline McEstimate estimate_cross_moment_mc(const Theta& theta,
                                           std::uint64_t replications,
                                           std::uint64_t seed,
                                           unsigned threads = 1) {
  if (replications < 1) {
    throw ModelError("estimate_cross_moment_mc: replications >= 1");
  }
  std::vector<std::uint8_t> hits(replications, 0);
  parallel_for(replications, threads, [&](std::uint64_t r) {
    auto rng = Xoshiro256::substream(seed, r);
    const KeyRing a = sample_key_ring(theta, rng);
    const KeyRing b = sample_key_ring(theta, rng);
    const KeyRing c = sample_key_ring(theta, rng);
    const KeyRing d = sample_key_ring(theta, rng);
    const bool base = rings_intersect(a, b);
    hits[r] = base && rings_intersect(a, c) && rings_intersect(b, c) &&
                      rings_intersect(a, d) && rings_intersect(b, d)
                  ? 1
                  : 0;
  });
  return detail::frequency_estimate(hits);
}

// ---------------------------------------------------------------------------
// Scaling families

/// A rule assigning model parameters theta_n to every graph size n.
class ScalingFamily {
 public:
  enum class Kind { connectivity, sparse, explicit_table };

  /// Secure-connectivity regime: ring and pool sizes grow so that
  /// K_n^2/P_n tracks c*ln(n)/n while K_n/P_n tracks 1/n.
  /// K_n = ceil(c*ln n), P_n = round(n*K_n^2/(c*ln n)).
  static ScalingFamily connectivity(double c) {
    if (c <= 0) throw ModelError("ScalingFamily: c must be positive");
    ScalingFamily f;
    f.kind_ = Kind::connectivity;
    f.c_ = c;
    return f;
  }

  /// Constant-expected-degree regime: K_n^2/P_n tracks c/n, with the ring
  /// size given either as a constant or as ceil(coeff*n^exponent).
  static ScalingFamily sparse(double c, std::uint64_t constant_ring) {
    if (c <= 0 || constant_ring < 1) {
      throw ModelError("ScalingFamily: invalid sparse parameters");
    }
    ScalingFamily f;
    f.kind_ = Kind::sparse;
    f.c_ = c;
    f.ring_const_ = constant_ring;
    return f;
  }

  static ScalingFamily sparse(double c, double ring_coeff,
                              double ring_exponent) {
    if (c <= 0 || ring_coeff <= 0) {
      throw ModelError("ScalingFamily: invalid sparse parameters");
    }
    ScalingFamily f;
    f.kind_ = Kind::sparse;
    f.c_ = c;
    f.ring_coeff_ = ring_coeff;
    f.ring_exp_ = ring_exponent;
    return f;
  }

  /// Explicit (n, K, P) rows.
  static ScalingFamily explicit_table(
      std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>
          rows) {
    if (rows.empty()) throw ModelError("ScalingFamily: empty table");
    ScalingFamily f;
    f.kind_ = Kind::explicit_table;
    f.rows_ = std::move(rows);
    return f;
  }

  Theta theta_at(std::uint64_t n) const {
    switch (kind_) {
      case Kind::connectivity: {
        if (n < 2) throw ModelError("ScalingFamily: connectivity needs n >= 2");
        const double logn = std::log(static_cast<double>(n));
        const std::uint64_t k =
            static_cast<std::uint64_t>(std::ceil(c_ * logn));
        const double p_raw =
            static_cast<double>(n) * static_cast<double>(k) *
            static_cast<double>(k) / (c_ * logn);
        return make_theta(k, p_raw);
      }
      case Kind::sparse: {
        std::uint64_t k = ring_const_;
        if (k == 0) {
          k = static_cast<std::uint64_t>(std::ceil(
              ring_coeff_ * std::pow(static_cast<double>(n), ring_exp_)));
        }
        const double p_raw = static_cast<double>(n) *
                             static_cast<double>(k) * static_cast<double>(k) /
                             c_;
        return make_theta(k, p_raw);
      }
      case Kind::explicit_table:
        for (const auto& [rn, rk, rp] : rows_) {
          if (rn == n) return Theta(rk, rp);
        }
        throw ModelError("ScalingFamily: no explicit row for n = " +
                         std::to_string(n));
    }
    throw ModelError("ScalingFamily: invalid kind");
  }

  Kind kind() const { return kind_; }

  /// The n values of an explicit table, in file order.
  std::vector<std::uint64_t> listed_sizes() const {
    std::vector<std::uint64_t> out;
    out.reserve(rows_.size());
    for (const auto& [n, k, p] : rows_) out.push_back(n);
    return out;
  }

  std::string describe() const {
    switch (kind_) {
      case Kind::connectivity:
        return "connectivity(c=" + std::to_string(c_) + ")";
      case Kind::sparse:
        if (ring_const_ > 0) {
          return "sparse(c=" + std::to_string(c_) +
                 ", K=" + std::to_string(ring_const_) + ")";
        }
        return "sparse(c=" + std::to_string(c_) +
               ", K=ceil(" + std::to_string(ring_coeff_) + "*n^" +
               std::to_string(ring_exp_) + "))";
      case Kind::explicit_table:
        return "explicit(" + std::to_string(rows_.size()) + " rows)";
    }
    return "invalid";
  }

 private:
  static Theta make_theta(std::uint64_t k, double p_raw) {
    // Round half up, then restore K <= P if rounding undershot.
    auto p = static_cast<std::uint64_t>(std::floor(p_raw + 0.5));
    if (p < k) p = k;
    return Theta(k, p);
  }

  Kind kind_ = Kind::explicit_table;
  double c_ = 0.0;
  std::uint64_t ring_const_ = 0;
  double ring_coeff_ = 0.0;
  double ring_exp_ = 0.0;
  std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> rows_;
};

// ---------------------------------------------------------------------------
// Zero-one sweep

struct SweepResult {
  std::uint64_t n = 0;
  std::uint64_t ring_size = 0;
  std::uint64_t pool_size = 0;
  double scaling = 0.0;     // tau(theta_n)
  double n3_scaling = 0.0;  // n^3 * tau(theta_n), the threshold quantity
  double empirical_triangle_prob = 0.0;
  double mean_triangles = 0.0;
  double var_triangles = 0.0;
  std::uint64_t replications = 0;
  std::uint64_t seed = 0;
};

/// Samples `replications` random key graphs per n and records the
/// empirical probability of containing a triangle together with the
/// first two empirical moments of the triangle count.
inline std::vector<SweepResult> zero_one_sweep(
    const ScalingFamily& family, const std::vector<std::uint64_t>& sizes,
    std::uint64_t replications, std::uint64_t seed, unsigned threads = 1) {
  if (replications < 1) throw ModelError("zero_one_sweep: replications >= 1");
  std::vector<SweepResult> results;
  results.reserve(sizes.size());
  for (std::size_t block = 0; block < sizes.size(); ++block) {
    const std::uint64_t n = sizes[block];
    if (n < 3) throw ModelError("zero_one_sweep: n >= 3");
    const Theta theta = family.theta_at(n);
    std::vector<std::uint64_t> counts(replications, 0);
    parallel_for(replications, threads, [&](std::uint64_t r) {
      auto rng = Xoshiro256::substream(seed, block * replications + r);
      const SimpleGraph g =
          sample_rkg(static_cast<std::uint32_t>(n), theta, rng);
      counts[r] = count_triangles(g).total_triangles;
    });
    std::uint64_t with_triangle = 0;
    for (const std::uint64_t c : counts) with_triangle += c > 0 ? 1 : 0;
    const auto mv = detail::mean_var(counts);
    SweepResult res;
    res.n = n;
    res.ring_size = theta.ring_size();
    res.pool_size = theta.pool_size();
    res.scaling = triangle_scaling(theta);
    res.n3_scaling = static_cast<double>(n) * static_cast<double>(n) *
                     static_cast<double>(n) * res.scaling;
    res.empirical_triangle_prob = static_cast<double>(with_triangle) /
                                  static_cast<double>(replications);
    res.mean_triangles = mv.mean;
    res.var_triangles = mv.variance;
    res.replications = replications;
    res.seed = seed;
    results.push_back(res);
  }
  return results;
}

// ---------------------------------------------------------------------------
// Table reproduction

enum class PaperTable { one, two };

/// The eight (K, P) parameter rows of the reference tables.
inline const std::vector<std::pair<std::uint64_t, std::uint64_t>>&
table_thetas() {
  static const std::vector<std::pair<std::uint64_t, std::uint64_t>> rows = {
      {4, 1000},   {8, 5000},    {16, 20000},  {20, 40000},
      {24, 100000}, {32, 100000}, {40, 500000}, {64, 1000000}};
  return rows;
}

struct TableRow {
  std::uint64_t ring_size = 0;
  std::uint64_t pool_size = 0;
  double one_minus_q = 0.0;     // analytic edge probability
  double clustering_rkg = 0.0;  // analytic conditional clustering
  double clustering_rkg_mc = 0.0;  // mean global clustering over realizations
  double clustering_er = 0.0;      // analytic, exactly matched p
  double clustering_er_mc = 0.0;   // NaN unless the ER columns were run
  std::uint64_t n = 0;
  std::uint64_t replications = 0;
};

/// Reproduces the reference tables: per row, the analytic columns plus
/// the global clustering coefficient averaged over `replications`
/// sampled graphs (per-realization coefficient, then the mean). Table
/// two additionally runs the exactly matched Erdos-Renyi columns.
inline std::vector<TableRow> reproduce_table(PaperTable which,
                                             std::uint64_t n,
                                             std::uint64_t replications,
                                             std::uint64_t seed,
                                             unsigned threads = 1) {
  if (n < 3) throw ModelError("reproduce_table: n >= 3");
  if (replications < 1) throw ModelError("reproduce_table: replications >= 1");
  const auto& thetas = table_thetas();
  std::vector<TableRow> rows;
  rows.reserve(thetas.size());
  for (std::size_t idx = 0; idx < thetas.size(); ++idx) {
    const Theta theta(thetas[idx].first, thetas[idx].second);
    TableRow row;
    row.ring_size = theta.ring_size();
    row.pool_size = theta.pool_size();
    row.one_minus_q = edge_prob(theta);
    row.clustering_rkg = rkg_clustering(theta);
    row.clustering_er = er_clustering(row.one_minus_q);
    row.n = n;
    row.replications = replications;

    std::vector<double> cstar(replications, 0.0);
    parallel_for(replications, threads, [&](std::uint64_t r) {
      auto rng = Xoshiro256::substream(seed, idx * replications + r);
      const SimpleGraph g =
          sample_rkg(static_cast<std::uint32_t>(n), theta, rng);
      cstar[r] = global_clustering(count_triangles(g));
    });
    double sum = 0.0;
    for (const double c : cstar) sum += c;
    row.clustering_rkg_mc = sum / static_cast<double>(replications);

    if (which == PaperTable::two) {
      const double p = row.one_minus_q;
      std::vector<double> cstar_er(replications, 0.0);
      parallel_for(replications, threads, [&](std::uint64_t r) {
        auto rng = Xoshiro256::substream(
            seed, (thetas.size() + idx) * replications + r);
        const SimpleGraph g =
            sample_er(static_cast<std::uint32_t>(n), p, rng);
        cstar_er[r] = global_clustering(count_triangles(g));
      });
      double sum_er = 0.0;
      for (const double c : cstar_er) sum_er += c;
      row.clustering_er_mc = sum_er / static_cast<double>(replications);
    } else {
      row.clustering_er_mc = std::nan("");
    }
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Triangle-ratio sweep

struct RatioRow {
  std::uint64_t n = 0;
  std::uint64_t ring_size = 0;
  std::uint64_t pool_size = 0;
  double expected_triangles_rkg = 0.0;
  double p_exact = 0.0;
  double expected_triangles_er_exact = 0.0;
  double ratio_exact = 0.0;
  double p_asymptotic = 0.0;
  double expected_triangles_er_asymptotic = 0.0;
  double ratio_asymptotic = 0.0;
  double predicted_ratio = 0.0;  // 1 + P/K^3
  double mc_mean_triangles = 0.0;  // NaN unless mc_replications > 0
  double mc_se_triangles = 0.0;
  std::uint64_t mc_replications = 0;
};

/// Analytic expected-triangle comparison against exactly and
/// asymptotically matched Erdos-Renyi graphs, with the shared predicted
/// ratio 1 + P/K^3. With mc_replications > 0 the expected count is also
/// validated by sampling.
inline std::vector<RatioRow> ratio_sweep(
    const ScalingFamily& family, const std::vector<std::uint64_t>& sizes,
    std::uint64_t mc_replications, std::uint64_t seed, unsigned threads = 1) {
  std::vector<RatioRow> rows;
  rows.reserve(sizes.size());
  for (std::size_t block = 0; block < sizes.size(); ++block) {
    const std::uint64_t n = sizes[block];
    if (n < 3) throw ModelError("ratio_sweep: n >= 3");
    const Theta theta = family.theta_at(n);
    RatioRow row;
    row.n = n;
    row.ring_size = theta.ring_size();
    row.pool_size = theta.pool_size();
    row.expected_triangles_rkg = expected_triangles_rkg(n, theta);
    row.p_exact = matched_edge_prob(theta, MatchMode::exact);
    row.expected_triangles_er_exact = expected_triangles_er(n, row.p_exact);
    row.ratio_exact = exact_matching_ratio(theta);
    row.p_asymptotic = matched_edge_prob(theta, MatchMode::asymptotic);
    row.expected_triangles_er_asymptotic =
        expected_triangles_er(n, row.p_asymptotic);
    row.ratio_asymptotic =
        triangle_prob(theta) /
        (row.p_asymptotic * row.p_asymptotic * row.p_asymptotic);
    row.predicted_ratio = asymptotic_matching_ratio(theta);
    row.mc_replications = mc_replications;
    if (mc_replications > 0) {
      std::vector<std::uint64_t> counts(mc_replications, 0);
      parallel_for(mc_replications, threads, [&](std::uint64_t r) {
        auto rng = Xoshiro256::substream(seed, block * mc_replications + r);
        const SimpleGraph g =
            sample_rkg(static_cast<std::uint32_t>(n), theta, rng);
        counts[r] = count_triangles(g).total_triangles;
      });
      const auto mv = detail::mean_var(counts);
      row.mc_mean_triangles = mv.mean;
      row.mc_se_triangles = mv.se_mean;
    } else {
      row.mc_mean_triangles = std::nan("");
      row.mc_se_triangles = std::nan("");
    }
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Moment check

struct MomentReport {
  std::uint64_t n = 0;
  std::uint64_t ring_size = 0;
  std::uint64_t pool_size = 0;
  std::uint64_t replications = 0;
  double mc_mean = 0.0;
  double mc_mean_se = 0.0;
  double analytic_mean = 0.0;
  double mean_deviation_se = 0.0;  // |mc - analytic| in SE units
  double mc_second_moment = 0.0;
  double mc_second_moment_se = 0.0;
  double formula_second_moment = 0.0;
  double second_moment_deviation_se = 0.0;
  double cross_moment = 0.0;
  bool cross_from_oracle = false;
  bool flagged = false;  // any deviation beyond 4 SE
};

/// Compares sampled first and second moments of the triangle count
/// against the closed forms; the cross moment comes from exhaustive
/// enumeration when feasible, otherwise from its own Monte Carlo block.
inline MomentReport moment_check(std::uint64_t n, const Theta& theta,
                                 std::uint64_t replications,
                                 std::uint64_t seed, unsigned threads = 1) {
  if (n < 3) throw ModelError("moment_check: n >= 3");
  if (replications < 1) throw ModelError("moment_check: replications >= 1");
  MomentReport rep;
  rep.n = n;
  rep.ring_size = theta.ring_size();
  rep.pool_size = theta.pool_size();
  rep.replications = replications;

  std::vector<std::uint64_t> counts(replications, 0);
  parallel_for(replications, threads, [&](std::uint64_t r) {
    auto rng = Xoshiro256::substream(seed, r);
    const SimpleGraph g =
        sample_rkg(static_cast<std::uint32_t>(n), theta, rng);
    counts[r] = count_triangles(g).total_triangles;
  });
  const auto mv = detail::mean_var(counts);
  rep.mc_mean = mv.mean;
  rep.mc_mean_se = mv.se_mean;

  std::vector<double> squares(replications, 0.0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    squares[i] = static_cast<double>(counts[i]) *
                 static_cast<double>(counts[i]);
  }
  const auto mv2 = detail::mean_var(squares);
  rep.mc_second_moment = mv2.mean;
  rep.mc_second_moment_se = mv2.se_mean;

  double cross;
  try {
    cross = oracle::enumerate_cross_moment(theta)
                .convert_to<double>();
    rep.cross_from_oracle = true;
  } catch (const oracle::GuardError&) {
    const McEstimate est = estimate_cross_moment_mc(
        theta, replications, seed + 1, threads);
    // Clamp the noisy estimate into the admissible bracket; the true
    // value is guaranteed to lie there.
    const double beta = triangle_prob(theta);
    const double lo = beta * beta;
    const double hi = beta * (1.0 - disjoint_prob(theta));
    cross = std::min(std::max(est.value, lo), hi);
    rep.cross_from_oracle = false;
  }
  rep.cross_moment = cross;

  rep.analytic_mean = expected_triangles_rkg(n, theta);
  rep.formula_second_moment = triangle_second_moment(n, theta, cross);

  const auto deviation = [](double mc, double reference, double se) {
    const double diff = std::abs(mc - reference);
    if (se > 0.0) return diff / se;
    return diff <= 1e-9 * std::max(1.0, std::abs(reference)) ? 0.0 : 1e300;
  };
  rep.mean_deviation_se = deviation(rep.mc_mean, rep.analytic_mean,
                                    rep.mc_mean_se);
  rep.second_moment_deviation_se = deviation(
      rep.mc_second_moment, rep.formula_second_moment,
      rep.mc_second_moment_se);
  rep.flagged =
      rep.mean_deviation_se > 4.0 || rep.second_moment_deviation_se > 4.0;
  return rep;
}

}  // namespace rkg

#endif  // RKG_EXPERIMENTS_HPP
