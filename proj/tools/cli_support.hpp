/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink/slink.h>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace slink_cli {

inline constexpr int exit_ok       = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage    = 2;

/** Carries the process exit code up to main. */
struct failure : std::runtime_error {
  int code;
  failure(int c, const std::string& what) : std::runtime_error(what), code(c) {}
};

int exit_code_for(slink_status s);

template <typename T, void (*Destroy)(T*)>
struct handle_deleter {
  void operator()(T* p) const { Destroy(p); }
};

using context_ptr = std::unique_ptr<slink_context, handle_deleter<slink_context, slink_context_destroy>>;
using matrix_ptr  = std::unique_ptr<slink_matrix, handle_deleter<slink_matrix, slink_matrix_destroy>>;
using graph_ptr   = std::unique_ptr<slink_graph, handle_deleter<slink_graph, slink_graph_destroy>>;
using knn_ptr     = std::unique_ptr<slink_knn_result, handle_deleter<slink_knn_result, slink_knn_destroy>>;
using mst_ptr     = std::unique_ptr<slink_mst_result, handle_deleter<slink_mst_result, slink_mst_destroy>>;
using linkage_ptr = std::unique_ptr<slink_linkage_result, handle_deleter<slink_linkage_result, slink_linkage_destroy>>;

/** Throws failure with the context's last error when s is not SLINK_OK. */
void check(slink_context* ctx, slink_status s);

/** Shared flag values. */
struct common_options {
  std::string input;
  std::string output_dir = ".";
  std::string metric     = "sqeuclidean";
  int k                  = 15;
  int n_clusters         = 2;
  std::uint64_t seed     = 0;
  int threads            = 0;  // 0: SLINK_NUM_THREADS, else the runtime default
  int batch_m            = 0;  // 0: library default
  int batch_n            = 0;
};

slink_metric parse_metric(const std::string& name);

/** Context with thread count (flag over environment) and tile sizes applied. */
context_ptr make_context(const common_options& opts);

/** Creates the output directory and returns the joined path. */
std::filesystem::path output_path(const common_options& opts, const std::string& name);

/** Builds and writes manifest.json next to the outputs. */
struct manifest {
  nlohmann::ordered_json doc;
  manifest(const std::string& subcommand, const common_options& opts, int threads);
  void timing(const std::string& stage, double ms);
  void output(const std::filesystem::path& p);
  void write(const common_options& opts);
};

int cmd_verify(const common_options& opts, int n_cases);

struct bench_options {
  std::vector<int> sizes{2000, 8000};
  std::vector<int> dims{8, 16};
  std::vector<int> ks{15};
  std::vector<int> threads{1};
  int repeats = 1;
};
int cmd_bench(const common_options& opts, const bench_options& bench);

}  // namespace slink_cli
