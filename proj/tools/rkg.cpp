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
// Command-line front end. Every command is a thin wrapper over the
// library: parse flags, call one library entry point, serialize the
// result. Exit codes: 0 success, 2 bad flags, 3 model precondition
// violated, 4 enumeration guard exceeded.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rkg/rkg.hpp"

namespace {

enum class Format { text, csv, json };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw rkg::ModelError("unknown format: " + name);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw rkg::ModelError("cannot open output file: " + out_path);
  out << content;
}

std::string txt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Shared flag bundles ------------------------------------------------------

struct CommonOpts {
  std::string format = "text";
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", out_path, "write output to this file");
  }
};

struct FamilyOpts {
  std::string family;
  double c = 2.0;
  std::uint64_t ring_const = 0;
  double ring_coeff = 0.0;
  double ring_exp = 0.0;
  std::string family_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "scaling family: connectivity, sparse or file")
        ->check(CLI::IsMember({"connectivity", "sparse", "file"}))
        ->required();
    cmd->add_option("--c", c, "family constant c");
    cmd->add_option("--k-const", ring_const,
                    "sparse family: constant ring size");
    cmd->add_option("--k-coeff", ring_coeff,
                    "sparse family: ring size ceil(coeff*n^exp)");
    cmd->add_option("--k-exp", ring_exp, "sparse family: ring size exponent");
    cmd->add_option("--family-file", family_file,
                    "explicit family: CSV file with n,K,P per line");
  }

  rkg::ScalingFamily build() const {
    if (family == "connectivity") return rkg::ScalingFamily::connectivity(c);
    if (family == "sparse") {
      if (ring_const > 0) return rkg::ScalingFamily::sparse(c, ring_const);
      if (ring_coeff > 0) {
        return rkg::ScalingFamily::sparse(c, ring_coeff, ring_exp);
      }
      throw rkg::ModelError(
          "sparse family needs --k-const or --k-coeff/--k-exp");
    }
    if (family_file.empty()) {
      throw rkg::ModelError("explicit family needs --family-file");
    }
    std::ifstream in(family_file);
    if (!in) throw rkg::ModelError("cannot open family file: " + family_file);
    std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line.rfind("n,", 0) == 0) continue;  // header
      std::istringstream ls(line);
      std::uint64_t n = 0, k = 0, p = 0;
      char comma1 = 0, comma2 = 0;
      if (!(ls >> n >> comma1 >> k >> comma2 >> p) || comma1 != ',' ||
          comma2 != ',') {
        throw rkg::ModelError("bad family file line: " + line);
      }
      rows.emplace_back(n, k, p);
    }
    return rkg::ScalingFamily::explicit_table(std::move(rows));
  }
};

// Commands -----------------------------------------------------------------

int run_analytic(std::uint64_t k, std::uint64_t p, std::uint64_t n,
                 const CommonOpts& common) {
  const rkg::AnalyticReport rep =
      rkg::make_analytic_report(n, rkg::Theta(k, p));
  std::ostringstream body;
  switch (parse_format(common.format)) {
    case Format::csv:
      rkg::write_csv(rep, body);
      break;
    case Format::json: {
      const auto doc = rkg::json_document(
          {{"command", "analytic"}, {"K", k}, {"P", p}, {"n", n}},
          nlohmann::json::array({rkg::to_json(rep)}), nullptr);
      body << doc.dump(2) << '\n';
      break;
    }
    case Format::text:
      body << "theta: K=" << k << " P=" << p << " n=" << n << '\n'
           << "q (ring disjoint prob)      = " << txt(rep.disjoint) << '\n'
           << "p (edge prob)               = " << txt(rep.edge) << '\n'
           << "r (two-ring avoidance)      = " << txt(rep.two_ring_avoid)
           << '\n'
           << "beta (triangle prob)        = " << txt(rep.triangle) << '\n'
           << "tau (threshold scaling)     = " << txt(rep.scaling) << '\n'
           << "C_K (clustering)            = " << txt(rep.clustering_rkg)
           << '\n'
           << "E[T_n]                      = " << txt(rep.expected_triangles)
           << '\n'
           << "E[T_n] matched ER           = "
           << txt(rep.expected_triangles_matched_er) << '\n'
           << "triangle ratio vs ER        = " << txt(rep.ratio_triangles)
           << '\n'
           << "clustering ratio vs ER      = " << txt(rep.ratio_clustering)
           << '\n';
      break;
  }
  emit(body.str(), common.out_path);
  return 0;
}

int run_sample(const std::string& kind, std::uint64_t n, std::uint64_t k,
               std::uint64_t p_pool, double p_edge, std::uint64_t seed,
               const std::string& builder, const std::string& dump_path,
               const CommonOpts& common) {
  auto rng = rkg::Xoshiro256::substream(seed, 0);
  rkg::SimpleGraph graph;
  if (kind == "rkg") {
    const rkg::Theta theta(k, p_pool);
    rkg::RkgBuild strategy = rkg::RkgBuild::auto_select;
    if (builder == "merge") strategy = rkg::RkgBuild::merge_scan;
    if (builder == "inverted") strategy = rkg::RkgBuild::inverted_index;
    graph = rkg::sample_rkg(static_cast<std::uint32_t>(n), theta, rng,
                            strategy);
  } else {
    graph = rkg::sample_er(static_cast<std::uint32_t>(n), p_edge, rng);
  }
  if (!dump_path.empty()) {
    std::ofstream dump(dump_path, std::ios::binary);
    if (!dump) {
      throw rkg::ModelError("cannot open dump file: " + dump_path);
    }
    rkg::write_edge_list(graph, dump);
  }
  const rkg::TriangleStats stats = rkg::count_triangles(graph);
  const double c_star = rkg::global_clustering(stats);
  const double c_avg = rkg::average_clustering(stats);
  std::ostringstream body;
  switch (parse_format(common.format)) {
    case Format::csv:
      body << "kind,n,K,P,p,seed,edges,triangles,c_star,c_avg\n"
           << kind << ',' << n << ',';
      if (kind == "rkg") {
        body << k << ',' << p_pool << ',';
      } else {
        body << ",,";
      }
      body << (kind == "er" ? rkg::format_double(p_edge) : "") << ',' << seed
           << ',' << graph.edge_count() << ',' << stats.total_triangles
           << ',' << rkg::format_double(c_star) << ','
           << rkg::format_double(c_avg) << '\n';
      break;
    case Format::json: {
      nlohmann::json config{{"command", "sample"}, {"kind", kind}, {"n", n}};
      if (kind == "rkg") {
        config["K"] = k;
        config["P"] = p_pool;
        config["builder"] = builder;
      } else {
        config["p"] = p_edge;
      }
      if (!dump_path.empty()) config["dump"] = dump_path;
      const auto doc = rkg::json_document(
          config,
          nlohmann::json::array({{{"edges", graph.edge_count()},
                                  {"triangles", stats.total_triangles},
                                  {"c_star", c_star},
                                  {"c_avg", c_avg}}}),
          seed);
      body << doc.dump(2) << '\n';
      break;
    }
    case Format::text:
      body << "sampled " << kind << " graph: n=" << n;
      if (kind == "rkg") {
        body << " K=" << k << " P=" << p_pool;
      } else {
        body << " p=" << txt(p_edge);
      }
      body << " seed=" << seed << '\n'
           << "edges      = " << graph.edge_count() << '\n'
           << "triangles  = " << stats.total_triangles << '\n'
           << "C* (global)= " << txt(c_star) << '\n'
           << "C_avg      = " << txt(c_avg) << '\n';
      break;
  }
  emit(body.str(), common.out_path);
  return 0;
}

int run_table(const std::string& which, std::uint64_t n, std::uint64_t reps,
              std::uint64_t seed, unsigned threads,
              const CommonOpts& common) {
  const rkg::PaperTable table =
      which == "I" ? rkg::PaperTable::one : rkg::PaperTable::two;
  const auto rows = rkg::reproduce_table(table, n, reps, seed, threads);
  std::ostringstream body;
  switch (parse_format(common.format)) {
    case Format::csv:
      rkg::write_csv(rows, body);
      break;
    case Format::json: {
      nlohmann::json jrows = nlohmann::json::array();
      for (const auto& row : rows) jrows.push_back(rkg::to_json(row));
      const auto doc = rkg::json_document({{"command", "table"},
                                           {"which", which},
                                           {"n", n},
                                           {"replications", reps},
                                           {"threads", threads}},
                                          jrows, seed);
      body << doc.dump(2) << '\n';
      break;
    }
    case Format::text: {
      body << "table " << which << " (n=" << n << ", " << reps
           << " realizations, seed=" << seed << ")\n";
      char line[160];
      std::snprintf(line, sizeof line, "%-6s %-9s %-10s %-10s %-10s", "K",
                    "P", "1-q", "C_K", "C*hat");
      body << line;
      if (table == rkg::PaperTable::two) {
        std::snprintf(line, sizeof line, " %-10s %-10s", "C_ER", "C*hat_ER");
        body << line;
      }
      body << '\n';
      for (const auto& row : rows) {
        std::snprintf(line, sizeof line, "%-6llu %-9llu %-10.4f %-10.4f %-10.4f",
                      static_cast<unsigned long long>(row.ring_size),
                      static_cast<unsigned long long>(row.pool_size),
                      row.one_minus_q, row.clustering_rkg,
                      row.clustering_rkg_mc);
        body << line;
        if (table == rkg::PaperTable::two) {
          std::snprintf(line, sizeof line, " %-10.4f %-10.4f",
                        row.clustering_er, row.clustering_er_mc);
          body << line;
        }
        body << '\n';
      }
      break;
    }
  }
  emit(body.str(), common.out_path);
  return 0;
}

int run_zero_one(const rkg::ScalingFamily& family,
                 const std::vector<std::uint64_t>& sizes, std::uint64_t reps,
                 std::uint64_t seed, unsigned threads,
                 const CommonOpts& common) {
  const auto rows = rkg::zero_one_sweep(family, sizes, reps, seed, threads);
  std::ostringstream body;
  switch (parse_format(common.format)) {
    case Format::csv:
      rkg::write_csv(rows, body);
      break;
    case Format::json: {
      nlohmann::json jrows = nlohmann::json::array();
      for (const auto& row : rows) jrows.push_back(rkg::to_json(row));
      const auto doc = rkg::json_document({{"command", "zero-one"},
                                           {"family", family.describe()},
                                           {"n_list", sizes},
                                           {"replications", reps},
                                           {"threads", threads}},
                                          jrows, seed);
      body << doc.dump(2) << '\n';
      break;
    }
    case Format::text:
      body << "zero-one sweep: " << family.describe() << ", " << reps
           << " replications, seed=" << seed << '\n';
      for (const auto& row : rows) {
        body << "n=" << row.n << " K=" << row.ring_size
             << " P=" << row.pool_size
             << " n3_tau=" << txt(row.n3_scaling)
             << " P(T>0)=" << txt(row.empirical_triangle_prob)
             << " mean_T=" << txt(row.mean_triangles)
             << " var_T=" << txt(row.var_triangles) << '\n';
      }
      break;
  }
  emit(body.str(), common.out_path);
  return 0;
}

int run_ratio_sweep(const rkg::ScalingFamily& family,
                    const std::vector<std::uint64_t>& sizes,
                    std::uint64_t mc_reps, std::uint64_t seed,
                    unsigned threads, const CommonOpts& common) {
  const auto rows = rkg::ratio_sweep(family, sizes, mc_reps, seed, threads);
  std::ostringstream body;
  switch (parse_format(common.format)) {
    case Format::csv:
      rkg::write_csv(rows, body);
      break;
    case Format::json: {
      nlohmann::json jrows = nlohmann::json::array();
      for (const auto& row : rows) jrows.push_back(rkg::to_json(row));
      const auto doc = rkg::json_document(
          {{"command", "sweep"},
           {"family", family.describe()},
           {"n_list", sizes},
           {"mc_replications", mc_reps},
           {"threads", threads}},
          jrows, mc_reps > 0 ? nlohmann::json(seed) : nlohmann::json());
      body << doc.dump(2) << '\n';
      break;
    }
    case Format::text:
      body << "triangle-ratio sweep: " << family.describe() << '\n';
      for (const auto& row : rows) {
        body << "n=" << row.n << " K=" << row.ring_size
             << " P=" << row.pool_size << " E[T]="
             << txt(row.expected_triangles_rkg)
             << " ratio_exact=" << txt(row.ratio_exact)
             << " ratio_asym=" << txt(row.ratio_asymptotic)
             << " predicted(1+P/K^3)=" << txt(row.predicted_ratio);
        if (row.mc_replications > 0) {
          body << " mc_mean_T=" << txt(row.mc_mean_triangles) << "+-"
               << txt(row.mc_se_triangles);
        }
        body << '\n';
      }
      break;
  }
  emit(body.str(), common.out_path);
  return 0;
}

int run_moments(std::uint64_t n, std::uint64_t k, std::uint64_t p,
                std::uint64_t reps, std::uint64_t seed, unsigned threads,
                const CommonOpts& common) {
  const rkg::MomentReport rep =
      rkg::moment_check(n, rkg::Theta(k, p), reps, seed, threads);
  std::ostringstream body;
  switch (parse_format(common.format)) {
    case Format::csv:
      rkg::write_csv(rep, body);
      break;
    case Format::json: {
      const auto doc = rkg::json_document({{"command", "moments"},
                                           {"n", n},
                                           {"K", k},
                                           {"P", p},
                                           {"replications", reps},
                                           {"threads", threads}},
                                          nlohmann::json::array(
                                              {rkg::to_json(rep)}),
                                          seed);
      body << doc.dump(2) << '\n';
      break;
    }
    case Format::text:
      body << "moment check: n=" << n << " K=" << k << " P=" << p << ", "
           << reps << " replications, seed=" << seed << '\n'
           << "mean T        mc=" << txt(rep.mc_mean)
           << " analytic=" << txt(rep.analytic_mean) << " ("
           << txt(rep.mean_deviation_se) << " SE)\n"
           << "second moment mc=" << txt(rep.mc_second_moment)
           << " formula=" << txt(rep.formula_second_moment) << " ("
           << txt(rep.second_moment_deviation_se) << " SE)\n"
           << "cross moment  = " << txt(rep.cross_moment) << " (from "
           << (rep.cross_from_oracle ? "oracle" : "mc") << ")\n"
           << (rep.flagged ? "FLAGGED: deviation beyond 4 SE\n"
                           : "within 4 SE\n");
      break;
  }
  emit(body.str(), common.out_path);
  return 0;
}

int run_oracle(const std::string& op, std::uint64_t k, std::uint64_t p,
               std::uint64_t n, const CommonOpts& common) {
  namespace oc = rkg::oracle;
  const rkg::Theta theta(k, p);
  std::ostringstream body;
  const Format format = parse_format(common.format);

  const auto rational_row = [](const char* name,
                               const oc::ExactProbability& v) {
    nlohmann::json row;
    row["quantity"] = name;
    row["numerator"] = boost::multiprecision::numerator(v).str();
    row["denominator"] = boost::multiprecision::denominator(v).str();
    row["value"] = v.convert_to<double>();
    return row;
  };

  nlohmann::json rows = nlohmann::json::array();
  if (op == "beta") {
    const auto v = oc::enumerate_beta(theta);
    rows.push_back(rational_row("beta", v));
  } else if (op == "cross") {
    const auto v = oc::enumerate_cross_moment(theta);
    rows.push_back(rational_row("cross_moment", v));
  } else {
    const auto dist = oc::enumerate_triangle_count_distribution(n, theta);
    for (std::size_t t = 0; t < dist.probabilities.size(); ++t) {
      auto row = rational_row("P(T=t)", dist.probabilities[t]);
      row["t"] = t;
      rows.push_back(row);
    }
    rows.push_back(rational_row("mean", dist.mean()));
    rows.push_back(rational_row("second_moment", dist.second_moment()));
  }

  switch (format) {
    case Format::csv:
      body << "quantity,t,numerator,denominator,value\n";
      for (const auto& row : rows) {
        body << row["quantity"].get<std::string>() << ',';
        if (row.contains("t")) body << row["t"].get<std::uint64_t>();
        body << ',' << row["numerator"].get<std::string>() << ','
             << row["denominator"].get<std::string>() << ','
             << rkg::format_double(row["value"].get<double>()) << '\n';
      }
      break;
    case Format::json: {
      nlohmann::json config{{"command", "oracle"},
                            {"op", op},
                            {"K", k},
                            {"P", p}};
      if (op == "distribution") config["n"] = n;
      body << rkg::json_document(config, rows, nullptr).dump(2) << '\n';
      break;
    }
    case Format::text:
      for (const auto& row : rows) {
        body << row["quantity"].get<std::string>();
        if (row.contains("t")) body << '[' << row["t"].get<std::uint64_t>() << ']';
        body << " = " << row["numerator"].get<std::string>() << '/'
             << row["denominator"].get<std::string>() << " = "
             << txt(row["value"].get<double>()) << '\n';
      }
      break;
  }
  emit(body.str(), common.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"random key graph triangle and clustering analytics"};
  app.require_subcommand(1);

  // analytic
  auto* analytic_cmd =
      app.add_subcommand("analytic", "evaluate all closed-form quantities");
  std::uint64_t a_k = 0, a_p = 0, a_n = 1000;
  CommonOpts a_common;
  analytic_cmd->add_option("--K", a_k, "key ring size")->required();
  analytic_cmd->add_option("--P", a_p, "key pool size")->required();
  analytic_cmd->add_option("--n", a_n, "node count for expected counts");
  a_common.attach(analytic_cmd);

  // sample
  auto* sample_cmd =
      app.add_subcommand("sample", "sample one graph and summarize it");
  std::string s_kind = "rkg";
  std::uint64_t s_n = 0, s_k = 0, s_p = 0, s_seed = 0;
  double s_edge_prob = -1.0;
  std::string s_builder = "auto", s_dump;
  CommonOpts s_common;
  sample_cmd->add_option("--kind", s_kind, "graph kind: rkg or er")
      ->check(CLI::IsMember({"rkg", "er"}));
  sample_cmd->add_option("--n", s_n, "node count")->required();
  sample_cmd->add_option("--K", s_k, "key ring size (rkg)");
  sample_cmd->add_option("--P", s_p, "key pool size (rkg)");
  sample_cmd->add_option("--p", s_edge_prob, "edge probability (er)");
  sample_cmd->add_option("--seed", s_seed, "RNG seed")->required();
  sample_cmd->add_option("--builder", s_builder,
                         "rkg edge detection: merge, inverted or auto")
      ->check(CLI::IsMember({"merge", "inverted", "auto"}));
  sample_cmd->add_option("--dump", s_dump, "write the edge list here");
  s_common.attach(sample_cmd);

  // table
  auto* table_cmd =
      app.add_subcommand("table", "reproduce the reference tables");
  std::string t_which = "I";
  std::uint64_t t_n = 1000, t_reps = 200, t_seed = 0;
  unsigned t_threads = 1;
  CommonOpts t_common;
  table_cmd->add_option("--which", t_which, "table to reproduce: I or II")
      ->check(CLI::IsMember({"I", "II"}))
      ->required();
  table_cmd->add_option("--n", t_n, "node count");
  table_cmd->add_option("--reps", t_reps, "realizations per row");
  table_cmd->add_option("--seed", t_seed, "RNG seed")->required();
  table_cmd->add_option("--threads", t_threads, "worker threads");
  t_common.attach(table_cmd);

  // zero-one
  auto* zero_cmd = app.add_subcommand(
      "zero-one", "empirical triangle-existence sweep over n");
  FamilyOpts z_family;
  std::vector<std::uint64_t> z_sizes;
  std::uint64_t z_reps = 500, z_seed = 0;
  unsigned z_threads = 1;
  CommonOpts z_common;
  z_family.attach(zero_cmd);
  zero_cmd->add_option("--n-list", z_sizes, "node counts (comma separated)")
      ->delimiter(',');
  zero_cmd->add_option("--reps", z_reps, "replications per n");
  zero_cmd->add_option("--seed", z_seed, "RNG seed")->required();
  zero_cmd->add_option("--threads", z_threads, "worker threads");
  z_common.attach(zero_cmd);

  // sweep (triangle ratios)
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "expected-triangle ratio vs matched Erdos-Renyi graphs");
  FamilyOpts r_family;
  std::vector<std::uint64_t> r_sizes;
  std::uint64_t r_mc_reps = 0, r_seed = 0;
  unsigned r_threads = 1;
  CommonOpts r_common;
  r_family.attach(sweep_cmd);
  sweep_cmd->add_option("--n-list", r_sizes, "node counts (comma separated)")
      ->delimiter(',');
  auto* mc_opt = sweep_cmd->add_option(
      "--mc-reps", r_mc_reps, "Monte Carlo replications (0 = analytic only)");
  auto* seed_opt =
      sweep_cmd->add_option("--seed", r_seed, "RNG seed (needed with --mc-reps)");
  sweep_cmd->add_option("--threads", r_threads, "worker threads");
  r_common.attach(sweep_cmd);

  // moments
  auto* moments_cmd = app.add_subcommand(
      "moments", "check sampled triangle moments against the closed forms");
  std::uint64_t m_n = 0, m_k = 0, m_p = 0, m_reps = 100000, m_seed = 0;
  unsigned m_threads = 1;
  CommonOpts m_common;
  moments_cmd->add_option("--n", m_n, "node count")->required();
  moments_cmd->add_option("--K", m_k, "key ring size")->required();
  moments_cmd->add_option("--P", m_p, "key pool size")->required();
  moments_cmd->add_option("--reps", m_reps, "replications");
  moments_cmd->add_option("--seed", m_seed, "RNG seed")->required();
  moments_cmd->add_option("--threads", m_threads, "worker threads");
  m_common.attach(moments_cmd);

  // oracle
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exact-rational enumeration for tiny parameters");
  std::string o_op = "beta";
  std::uint64_t o_k = 0, o_p = 0, o_n = 3;
  CommonOpts o_common;
  oracle_cmd->add_option("--op", o_op,
                         "beta, cross or distribution")
      ->check(CLI::IsMember({"beta", "cross", "distribution"}))
      ->required();
  oracle_cmd->add_option("--K", o_k, "key ring size")->required();
  oracle_cmd->add_option("--P", o_p, "key pool size")->required();
  oracle_cmd->add_option("--n", o_n, "node count (distribution)");
  o_common.attach(oracle_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analytic_cmd) return run_analytic(a_k, a_p, a_n, a_common);
    if (*sample_cmd) {
      if (s_kind == "rkg" && (s_k == 0 || s_p == 0)) {
        throw rkg::ModelError("sample --kind rkg needs --K and --P");
      }
      if (s_kind == "er" && (s_edge_prob < 0.0 || s_edge_prob > 1.0)) {
        throw rkg::ModelError("sample --kind er needs --p in [0, 1]");
      }
      return run_sample(s_kind, s_n, s_k, s_p, s_edge_prob, s_seed,
                        s_builder, s_dump, s_common);
    }
    if (*table_cmd) {
      return run_table(t_which, t_n, t_reps, t_seed, t_threads, t_common);
    }
    if (*zero_cmd) {
      const rkg::ScalingFamily family = z_family.build();
      if (z_sizes.empty()) z_sizes = family.listed_sizes();
      if (z_sizes.empty()) throw rkg::ModelError("zero-one needs --n-list");
      return run_zero_one(family, z_sizes, z_reps, z_seed, z_threads,
                          z_common);
    }
    if (*sweep_cmd) {
      if (r_mc_reps > 0 && seed_opt->count() == 0) {
        throw rkg::ModelError("sweep with --mc-reps needs an explicit --seed");
      }
      (void)mc_opt;
      const rkg::ScalingFamily family = r_family.build();
      if (r_sizes.empty()) r_sizes = family.listed_sizes();
      if (r_sizes.empty()) throw rkg::ModelError("sweep needs --n-list");
      return run_ratio_sweep(family, r_sizes, r_mc_reps, r_seed, r_threads,
                             r_common);
    }
    if (*moments_cmd) {
      return run_moments(m_n, m_k, m_p, m_reps, m_seed, m_threads, m_common);
    }
    if (*oracle_cmd) return run_oracle(o_op, o_k, o_p, o_n, o_common);
  } catch (const rkg::oracle::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const rkg::ModelError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
