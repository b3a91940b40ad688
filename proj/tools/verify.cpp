/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cli_support.hpp"

#include <slink_oracle/generators.hpp>
#include <slink_oracle/oracle.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

namespace slink_cli {

namespace {

struct outcome {
  bool pass;
  std::string detail;
};

matrix_ptr make_matrix(slink_context* ctx, const std::vector<float>& data, std::size_t n, std::size_t d)
{
  slink_matrix* raw = nullptr;
  check(ctx, slink_matrix_create(ctx, static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(d), data.data(), &raw));
  return matrix_ptr(raw);
}

graph_ptr make_graph(slink_context* ctx, int n, const std::vector<slink_oracle::edge>& edges)
{
  std::vector<std::int32_t> src, dst;
  std::vector<double> w;
  for (const auto& e : edges) {
    src.push_back(e.u);
    dst.push_back(e.v);
    w.push_back(e.w);
  }
  slink_graph* raw = nullptr;
  check(ctx, slink_graph_create(ctx, n, edges.size(), src.data(), dst.data(), w.data(), &raw));
  return graph_ptr(raw);
}

outcome check_knn(slink_context* ctx, std::uint64_t seed)
{
  const std::size_t n = 120 + seed % 200, d = std::size_t{2} << (seed % 4), k = 1 + seed % 24;
  auto data   = slink_oracle::uniform_points(n, d, seed);
  auto x      = make_matrix(ctx, data, n, d);
  slink_knn_result* raw = nullptr;
  check(ctx, slink_knn(ctx, x.get(), static_cast<int>(k), SLINK_METRIC_SQEUCLIDEAN, &raw));
  knn_ptr got(raw);
  auto want = slink_oracle::sorted_knn(data, n, d, k);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < n * k; ++i) {
    const double ref = want.distances[i];
    if (slink_knn_indices(raw)[i] != want.indices[i] ||
        std::abs(slink_knn_distances(raw)[i] - ref) > 1e-6 * std::max(ref, 1e-12)) {
      ++bad;
    }
  }
  std::ostringstream s;
  s << "N=" << n << " d=" << d << " k=" << k << " mismatches=" << bad;
  return {bad == 0, s.str()};
}

outcome check_mst(slink_context* ctx, std::uint64_t seed)
{
  const int v    = 50 + static_cast<int>(seed % 250);
  const auto e   = static_cast<std::size_t>(v) * 4;
  const auto mode = seed % 3 == 0 ? slink_oracle::weight_mode::heavy_ties : slink_oracle::weight_mode::continuous;
  auto edges = slink_oracle::random_connected_graph(v, e, mode, seed);
  auto g     = make_graph(ctx, v, edges);
  slink_mst_result* raw = nullptr;
  check(ctx, slink_mst(ctx, g.get(), 0, seed, &raw));
  mst_ptr got(raw);
  auto want       = slink_oracle::kruskal(v, edges);
  const double gw = slink_mst_total_weight(raw);
  const bool ok   = slink_mst_edges(raw) == static_cast<std::size_t>(v - 1) &&
                  std::abs(gw - want.total) <= 1e-9 * std::max(1.0, std::abs(want.total));
  std::ostringstream s;
  s << "V=" << v << " E=" << e << (mode == slink_oracle::weight_mode::heavy_ties ? " ties" : "") << " weight=" << gw
    << " kruskal=" << want.total;
  return {ok, s.str()};
}

outcome check_forest(slink_context* ctx, std::uint64_t seed)
{
  const int v = 60 + static_cast<int>(seed % 140), c = 2 + static_cast<int>(seed % 6);
  auto edges  = slink_oracle::random_forest_graph(v, c, 8, slink_oracle::weight_mode::continuous, seed);
  auto g      = make_graph(ctx, v, edges);
  slink_mst_result* raw = nullptr;
  check(ctx, slink_mst(ctx, g.get(), 0, seed, &raw));
  mst_ptr got(raw);
  const bool ok = slink_mst_components(raw) == c && slink_mst_edges(raw) == static_cast<std::size_t>(v - c);
  std::ostringstream s;
  s << "V=" << v << " components=" << slink_mst_components(raw) << " expected=" << c;
  return {ok, s.str()};
}

outcome check_linkage(slink_context* ctx, std::uint64_t seed)
{
  const std::size_t n = 200 + seed % 300, d = 2 + seed % 7;
  const int clusters  = 2 + static_cast<int>(seed % 5);
  auto data = slink_oracle::gaussian_blobs(n, d, static_cast<std::size_t>(clusters) + 1, 10.0, 1.0, seed);
  auto x    = make_matrix(ctx, data, n, d);
  slink_linkage_params params;
  slink_linkage_params_init(&params);
  params.n_clusters = clusters;
  params.k          = 10;
  params.seed       = seed;
  slink_linkage_result* raw = nullptr;
  check(ctx, slink_single_linkage(ctx, x.get(), &params, &raw));
  linkage_ptr got(raw);
  std::vector<int> labels(slink_linkage_labels(raw), slink_linkage_labels(raw) + n);
  const double ari = slink_oracle::adjusted_rand_index(labels, slink_oracle::naive_single_linkage(data, n, d, clusters));
  std::ostringstream s;
  s << "N=" << n << " d=" << d << " clusters=" << clusters << " ari=" << ari;
  return {ari == 1.0, s.str()};
}

}  // namespace

int cmd_verify(const common_options& opts, int n_cases)
{
  auto ctx = make_context(opts);
  const std::vector<std::pair<const char*, std::function<outcome(slink_context*, std::uint64_t)>>> checks{
    {"knn", check_knn}, {"mst", check_mst}, {"forest", check_forest}, {"linkage", check_linkage}};

  std::printf("%-8s %-5s %-20s %-6s %s\n", "check", "case", "seed", "result", "detail");
  int failures = 0;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [name, run] : checks) {
    for (int c = 0; c < n_cases; ++c) {
      const std::uint64_t seed = opts.seed * 1000003ULL + static_cast<std::uint64_t>(c);
      auto result              = run(ctx.get(), seed);
      failures += result.pass ? 0 : 1;
      std::printf("%-8s %-5d %-20llu %-6s %s\n", name, c, static_cast<unsigned long long>(seed),
                  result.pass ? "PASS" : "FAIL", result.detail.c_str());
      rows.push_back({{"check", name}, {"seed", seed}, {"pass", result.pass}, {"detail", result.detail}});
    }
  }
  std::printf("%d of %zu checks failed\n", failures, checks.size() * static_cast<std::size_t>(n_cases));

  if (!opts.output_dir.empty()) {
    manifest log("verify", opts, slink_context_threads(ctx.get()));
    log.doc["results"] = rows;
    log.write(opts);
  }
  return failures == 0 ? exit_ok : exit_internal;
}

}  // namespace slink_cli
