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
// CSV and JSON serialization of experiment results. Column orders are
// fixed (documented in the README); numeric formatting is deterministic,
// so identical inputs produce byte-identical files. Cells whose value
// was not computed (NaN) are left empty in CSV and null in JSON.

#ifndef RKG_OUTPUT_HPP
#define RKG_OUTPUT_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rkg/analytic.hpp"
#include "rkg/experiments.hpp"

namespace rkg {

inline constexpr char kVersion[] = "0.1.0";

/// Deterministic numeric cell formatting ("%.10g"); NaN, which marks a
/// value that was not computed, becomes the empty cell.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace detail {

inline nlohmann::json num_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Analytic report

inline void write_csv(const AnalyticReport& rep, std::ostream& out) {
  out << "K,P,n,q,p_edge,r,beta,tau,c_k,expected_triangles,"
         "expected_triangles_matched_er,ratio_triangles,ratio_clustering\n";
  const auto& fmt = format_double;
  out << rep.theta.ring_size() << ',' << rep.theta.pool_size() << ','
      << rep.n << ',' << fmt(rep.disjoint) << ',' << fmt(rep.edge) << ','
      << fmt(rep.two_ring_avoid) << ',' << fmt(rep.triangle) << ','
      << fmt(rep.scaling) << ',' << fmt(rep.clustering_rkg) << ','
      << fmt(rep.expected_triangles) << ','
      << fmt(rep.expected_triangles_matched_er) << ','
      << fmt(rep.ratio_triangles) << ',' << fmt(rep.ratio_clustering)
      << '\n';
}

inline nlohmann::json to_json(const AnalyticReport& rep) {
  return {
      {"K", rep.theta.ring_size()},
      {"P", rep.theta.pool_size()},
      {"n", rep.n},
      {"q", rep.disjoint.value()},
      {"p_edge", rep.edge.value()},
      {"r", rep.two_ring_avoid.value()},
      {"beta", rep.triangle.value()},
      {"tau", rep.scaling},
      {"c_k", rep.clustering_rkg.value()},
      {"expected_triangles", rep.expected_triangles},
      {"expected_triangles_matched_er", rep.expected_triangles_matched_er},
      {"ratio_triangles", rep.ratio_triangles},
      {"ratio_clustering", rep.ratio_clustering},
  };
}

// ---------------------------------------------------------------------------
// Table rows

inline void write_csv(const std::vector<TableRow>& rows, std::ostream& out) {
  out << "K,P,one_minus_q,c_k,c_star_hat,c_er,c_star_hat_er,n,"
         "replications\n";
  const auto& fmt = format_double;
  for (const TableRow& r : rows) {
    out << r.ring_size << ',' << r.pool_size << ',' << fmt(r.one_minus_q)
        << ',' << fmt(r.clustering_rkg) << ',' << fmt(r.clustering_rkg_mc)
        << ',' << fmt(r.clustering_er) << ',' << fmt(r.clustering_er_mc)
        << ',' << r.n << ',' << r.replications << '\n';
  }
}

inline nlohmann::json to_json(const TableRow& r) {
  return {
      {"K", r.ring_size},
      {"P", r.pool_size},
      {"one_minus_q", r.one_minus_q},
      {"c_k", r.clustering_rkg},
      {"c_star_hat", r.clustering_rkg_mc},
      {"c_er", r.clustering_er},
      {"c_star_hat_er", detail::num_or_null(r.clustering_er_mc)},
      {"n", r.n},
      {"replications", r.replications},
  };
}

// ---------------------------------------------------------------------------
// Zero-one sweep rows

inline void write_csv(const std::vector<SweepResult>& rows,
                      std::ostream& out) {
  out << "n,K,P,tau,n3_tau,empirical_triangle_prob,mean_T,var_T,"
         "replications,seed\n";
  const auto& fmt = format_double;
  for (const SweepResult& r : rows) {
    out << r.n << ',' << r.ring_size << ',' << r.pool_size << ','
        << fmt(r.scaling) << ',' << fmt(r.n3_scaling) << ','
        << fmt(r.empirical_triangle_prob) << ',' << fmt(r.mean_triangles)
        << ',' << fmt(r.var_triangles) << ',' << r.replications << ','
        << r.seed << '\n';
  }
}

inline nlohmann::json to_json(const SweepResult& r) {
  return {
      {"n", r.n},
      {"K", r.ring_size},
      {"P", r.pool_size},
      {"tau", r.scaling},
      {"n3_tau", r.n3_scaling},
      {"empirical_triangle_prob", r.empirical_triangle_prob},
      {"mean_T", r.mean_triangles},
      {"var_T", r.var_triangles},
      {"replications", r.replications},
      {"seed", r.seed},
  };
}

// ---------------------------------------------------------------------------
// Ratio rows

inline void write_csv(const std::vector<RatioRow>& rows, std::ostream& out) {
  out << "n,K,P,expected_triangles_rkg,p_exact,expected_triangles_er_exact,"
         "ratio_exact,p_asymptotic,expected_triangles_er_asymptotic,"
         "ratio_asymptotic,predicted_ratio,mc_mean_T,mc_se_T,"
         "mc_replications\n";
  const auto& fmt = format_double;
  for (const RatioRow& r : rows) {
    out << r.n << ',' << r.ring_size << ',' << r.pool_size << ','
        << fmt(r.expected_triangles_rkg) << ',' << fmt(r.p_exact) << ','
        << fmt(r.expected_triangles_er_exact) << ',' << fmt(r.ratio_exact)
        << ',' << fmt(r.p_asymptotic) << ','
        << fmt(r.expected_triangles_er_asymptotic) << ','
        << fmt(r.ratio_asymptotic) << ',' << fmt(r.predicted_ratio) << ','
        << fmt(r.mc_mean_triangles) << ',' << fmt(r.mc_se_triangles) << ','
        << r.mc_replications << '\n';
  }
}

inline nlohmann::json to_json(const RatioRow& r) {
  return {
      {"n", r.n},
      {"K", r.ring_size},
      {"P", r.pool_size},
      {"expected_triangles_rkg", r.expected_triangles_rkg},
      {"p_exact", r.p_exact},
      {"expected_triangles_er_exact", r.expected_triangles_er_exact},
      {"ratio_exact", r.ratio_exact},
      {"p_asymptotic", r.p_asymptotic},
      {"expected_triangles_er_asymptotic",
       r.expected_triangles_er_asymptotic},
      {"ratio_asymptotic", r.ratio_asymptotic},
      {"predicted_ratio", r.predicted_ratio},
      {"mc_mean_T", detail::num_or_null(r.mc_mean_triangles)},
      {"mc_se_T", detail::num_or_null(r.mc_se_triangles)},
      {"mc_replications", r.mc_replications},
  };
}

// ---------------------------------------------------------------------------
// Moment report

inline void write_csv(const MomentReport& r, std::ostream& out) {
  out << "n,K,P,replications,mc_mean,mc_mean_se,analytic_mean,"
         "mean_deviation_se,mc_second_moment,mc_second_moment_se,"
         "formula_second_moment,second_moment_deviation_se,cross_moment,"
         "cross_source,flagged\n";
  const auto& fmt = format_double;
  out << r.n << ',' << r.ring_size << ',' << r.pool_size << ','
      << r.replications << ',' << fmt(r.mc_mean) << ',' << fmt(r.mc_mean_se)
      << ',' << fmt(r.analytic_mean) << ',' << fmt(r.mean_deviation_se)
      << ',' << fmt(r.mc_second_moment) << ','
      << fmt(r.mc_second_moment_se) << ',' << fmt(r.formula_second_moment)
      << ',' << fmt(r.second_moment_deviation_se) << ','
      << fmt(r.cross_moment) << ','
      << (r.cross_from_oracle ? "oracle" : "mc") << ','
      << (r.flagged ? 1 : 0) << '\n';
}

inline nlohmann::json to_json(const MomentReport& r) {
  return {
      {"n", r.n},
      {"K", r.ring_size},
      {"P", r.pool_size},
      {"replications", r.replications},
      {"mc_mean", r.mc_mean},
      {"mc_mean_se", r.mc_mean_se},
      {"analytic_mean", r.analytic_mean},
      {"mean_deviation_se", r.mean_deviation_se},
      {"mc_second_moment", r.mc_second_moment},
      {"mc_second_moment_se", r.mc_second_moment_se},
      {"formula_second_moment", r.formula_second_moment},
      {"second_moment_deviation_se", r.second_moment_deviation_se},
      {"cross_moment", r.cross_moment},
      {"cross_source", r.cross_from_oracle ? "oracle" : "mc"},
      {"flagged", r.flagged},
  };
}

/// Standard envelope for JSON output: configuration echo, result rows,
/// seed and library version.
inline nlohmann::json json_document(nlohmann::json config,
                                    nlohmann::json rows,
                                    nlohmann::json seed) {
  return {
      {"config", std::move(config)},
      {"rows", std::move(rows)},
      {"seed", std::move(seed)},
      {"version", kVersion},
  };
}

}  // namespace rkg

#endif  // RKG_OUTPUT_HPP
