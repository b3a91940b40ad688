/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cli_support.hpp"

#include <slink_oracle/oracle.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>

using namespace slink_cli;

namespace {

class stopwatch {
 public:
  double lap()
  {
    auto now  = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_    = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

matrix_ptr read_points(slink_context* ctx, const common_options& opts)
{
  slink_matrix* raw = nullptr;
  check(ctx, slink_matrix_read(ctx, opts.input.c_str(), &raw));
  return matrix_ptr(raw);
}

int cmd_cluster(const common_options& opts)
{
  auto ctx = make_context(opts);
  manifest log("cluster", opts, slink_context_threads(ctx.get()));
  stopwatch clock;
  auto x = read_points(ctx.get(), opts);
  log.timing("read", clock.lap());

  slink_linkage_params params;
  slink_linkage_params_init(&params);
  params.n_clusters = opts.n_clusters;
  params.k          = opts.k;
  params.metric     = parse_metric(opts.metric);
  params.seed       = opts.seed;

  slink_linkage_result* raw = nullptr;
  check(ctx.get(), slink_single_linkage(ctx.get(), x.get(), &params, &raw));
  linkage_ptr result(raw);
  clock.lap();
  log.timing("knn", slink_linkage_stage_ms(raw, SLINK_STAGE_KNN));
  log.timing("mst", slink_linkage_stage_ms(raw, SLINK_STAGE_MST));
  log.timing("connect", slink_linkage_stage_ms(raw, SLINK_STAGE_CONNECT));
  log.timing("dendrogram", slink_linkage_stage_ms(raw, SLINK_STAGE_DENDROGRAM));
  log.timing("extract", slink_linkage_stage_ms(raw, SLINK_STAGE_EXTRACT));

  auto labels     = output_path(opts, "labels.csv");
  auto dendrogram = output_path(opts, "dendrogram.csv");
  check(ctx.get(), slink_linkage_write_labels(ctx.get(), raw, labels.c_str()));
  check(ctx.get(), slink_linkage_write_dendrogram(ctx.get(), raw, dendrogram.c_str()));
  log.timing("write", clock.lap());
  log.output(labels);
  log.output(dendrogram);
  log.doc["initial_components"] = slink_linkage_initial_components(raw);
  log.doc["connect_iterations"] = slink_linkage_connect_iterations(raw);
  log.write(opts);
  return exit_ok;
}

int cmd_knn(const common_options& opts)
{
  auto ctx = make_context(opts);
  manifest log("knn", opts, slink_context_threads(ctx.get()));
  stopwatch clock;
  auto x = read_points(ctx.get(), opts);
  log.timing("read", clock.lap());

  slink_knn_result* raw = nullptr;
  check(ctx.get(), slink_knn(ctx.get(), x.get(), opts.k, parse_metric(opts.metric), &raw));
  knn_ptr result(raw);
  log.timing("knn", clock.lap());

  auto indices   = output_path(opts, "knn_indices.csv");
  auto distances = output_path(opts, "knn_distances.csv");
  check(ctx.get(), slink_knn_write_csv(ctx.get(), raw, indices.c_str(), distances.c_str()));
  log.timing("write", clock.lap());
  log.output(indices);
  log.output(distances);
  log.write(opts);
  return exit_ok;
}

int cmd_mst(const common_options& opts, bool maximize, bool verify)
{
  auto ctx = make_context(opts);
  manifest log("mst", opts, slink_context_threads(ctx.get()));
  log.doc["parameters"]["maximize"] = maximize;
  stopwatch clock;
  slink_graph* graw = nullptr;
  check(ctx.get(), slink_graph_read_mtx(ctx.get(), opts.input.c_str(), &graw));
  graph_ptr graph(graw);
  log.timing("read", clock.lap());

  slink_mst_result* raw = nullptr;
  check(ctx.get(), slink_mst(ctx.get(), graw, maximize ? 1 : 0, opts.seed, &raw));
  mst_ptr result(raw);
  log.timing("mst", clock.lap());

  auto path = output_path(opts, "mst.csv");
  check(ctx.get(), slink_mst_write_csv(ctx.get(), raw, path.c_str()));
  log.timing("write", clock.lap());
  log.output(path);

  const double total = slink_mst_total_weight(raw);
  log.doc["components"]   = slink_mst_components(raw);
  log.doc["edges"]        = slink_mst_edges(raw);
  log.doc["total_weight"] = total;
  std::printf("vertices %d\nedges %zu\ncomponents %d\ntotal_weight %.17g\n", slink_mst_vertices(raw),
              slink_mst_edges(raw), slink_mst_components(raw), total);

  int status = exit_ok;
  if (verify) {
    const double sign = maximize ? -1.0 : 1.0;
    std::vector<slink_oracle::edge> edges;
    const auto n_edges = slink_graph_edges(graw);
    for (std::size_t e = 0; e < n_edges; ++e) {
      edges.push_back({slink_graph_src(graw)[e], slink_graph_dst(graw)[e], sign * slink_graph_weights(graw)[e]});
    }
    auto expected     = slink_oracle::kruskal(slink_graph_vertices(graw), std::move(edges));
    const double want = sign * expected.total;
    const bool ok = expected.edges.size() == slink_mst_edges(raw) &&
                    std::abs(total - want) <= 1e-9 * std::max(1.0, std::abs(want));
    std::printf("verify %s (kruskal total_weight %.17g, edges %zu)\n", ok ? "PASS" : "FAIL", want,
                expected.edges.size());
    log.doc["verified"] = ok;
    log.timing("verify", clock.lap());
    if (!ok) status = exit_internal;
  }
  log.write(opts);
  return status;
}

void add_common(CLI::App* cmd, common_options& opts, bool needs_input)
{
  auto* in = cmd->add_option("--input,-i", opts.input, "Input file");
  if (needs_input) in->required();
  cmd->add_option("--output-dir,-o", opts.output_dir, "Directory for outputs and manifest.json");
  cmd->add_option("--threads", opts.threads, "Worker threads (overrides SLINK_NUM_THREADS)");
  cmd->add_option("--seed", opts.seed, "Seed for weight alteration and data generation");
}

void add_points(CLI::App* cmd, common_options& opts)
{
  cmd->add_option("--metric", opts.metric, "euclidean or sqeuclidean")
    ->check(CLI::IsMember({"euclidean", "sqeuclidean"}));
  cmd->add_option("--k", opts.k, "Neighbors per point");
  cmd->add_option("--batch-m", opts.batch_m, "Query rows per distance tile");
  cmd->add_option("--batch-n", opts.batch_n, "Index rows per distance tile");
}

std::vector<int> parse_list(const std::string& text, const char* flag)
{
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + comma, value);
    if (ec != std::errc{} || ptr != text.data() + comma || value < 1) {
      throw failure(exit_usage, std::string(flag) + " expects comma-separated positive integers");
    }
    out.push_back(value);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Parallel single-linkage clustering"};
  app.set_version_flag("--version", std::string(slink_version()));
  app.require_subcommand(1);

  common_options opts;
  bool maximize = false;
  bool verify   = false;
  int n_cases   = 5;
  std::string sizes = "2000,8000", dims = "8,16", ks = "15", thread_list = "1";
  bench_options bench;

  auto* cluster = app.add_subcommand("cluster", "Cluster a point matrix; writes labels.csv and dendrogram.csv");
  add_common(cluster, opts, true);
  add_points(cluster, opts);
  cluster->add_option("--n-clusters", opts.n_clusters, "Number of flat clusters");

  auto* knn = app.add_subcommand("knn", "Exact k nearest neighbors; writes knn_indices.csv and knn_distances.csv");
  add_common(knn, opts, true);
  add_points(knn, opts);

  auto* mst = app.add_subcommand("mst", "Minimum spanning forest of a Matrix Market graph; writes mst.csv");
  add_common(mst, opts, true);
  mst->add_flag("--maximize", maximize, "Maximum spanning forest");
  mst->add_flag("--verify", verify, "Compare total weight against Kruskal");

  auto* ver = app.add_subcommand("verify", "Check seeded random instances against reference implementations");
  add_common(ver, opts, false);
  ver->add_option("--cases", n_cases, "Instances per check")->check(CLI::PositiveNumber);

  auto* bch = app.add_subcommand("bench", "Per-stage timings over sweeps of N, d, k and threads (CSV)");
  add_common(bch, opts, false);
  bch->add_option("--metric", opts.metric, "euclidean or sqeuclidean")
    ->check(CLI::IsMember({"euclidean", "sqeuclidean"}));
  bch->add_option("--n-clusters", opts.n_clusters, "Number of flat clusters");
  bch->add_option("--sizes", sizes, "Comma-separated N values");
  bch->add_option("--dims", dims, "Comma-separated d values");
  bch->add_option("--ks", ks, "Comma-separated k values");
  bch->add_option("--thread-counts", thread_list, "Comma-separated thread counts");
  bch->add_option("--repeats", bench.repeats, "Runs per configuration")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*cluster) return cmd_cluster(opts);
    if (*knn) return cmd_knn(opts);
    if (*mst) return cmd_mst(opts, maximize, verify);
    // verify and bench write to stdout unless a directory is named
    if ((*ver || *bch) && app.get_subcommands().front()->count("--output-dir") == 0) opts.output_dir.clear();
    if (*ver) return cmd_verify(opts, n_cases);
    bench.sizes   = parse_list(sizes, "--sizes");
    bench.dims    = parse_list(dims, "--dims");
    bench.ks      = parse_list(ks, "--ks");
    bench.threads = parse_list(thread_list, "--thread-counts");
    return cmd_bench(opts, bench);
  } catch (const failure& e) {
    std::cerr << "slink: " << e.what() << '\n';
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "slink: internal error: " << e.what() << '\n';
    return exit_internal;
  }
}
