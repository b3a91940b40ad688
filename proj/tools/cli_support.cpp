/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cli_support.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>

namespace slink_cli {

int exit_code_for(slink_status s)
{
  switch (s) {
    case SLINK_OK: return exit_ok;
    case SLINK_ERR_INVALID_ARGUMENT:
    case SLINK_ERR_PARSE:
    case SLINK_ERR_IO: return exit_usage;
    default: return exit_internal;
  }
}

void check(slink_context* ctx, slink_status s)
{
  if (s == SLINK_OK) return;
  std::string msg = slink_status_string(s);
  if (ctx != nullptr && *slink_context_last_error(ctx) != '\0') msg += std::string(": ") + slink_context_last_error(ctx);
  throw failure(exit_code_for(s), msg);
}

slink_metric parse_metric(const std::string& name)
{
  if (name == "sqeuclidean") return SLINK_METRIC_SQEUCLIDEAN;
  if (name == "euclidean") return SLINK_METRIC_EUCLIDEAN;
  throw failure(exit_usage, "unknown metric '" + name + "' (expected euclidean or sqeuclidean)");
}

namespace {

int env_threads()
{
  const char* raw = std::getenv("SLINK_NUM_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  int value      = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec]  = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 1) {
    throw failure(exit_usage, std::string("SLINK_NUM_THREADS must be a positive integer, got '") + raw + "'");
  }
  return value;
}

}  // namespace

context_ptr make_context(const common_options& opts)
{
  slink_context* raw = nullptr;
  check(nullptr, slink_context_create(&raw));
  context_ptr ctx(raw);
  if (opts.threads < 0) throw failure(exit_usage, "--threads must be positive");
  const int threads = opts.threads > 0 ? opts.threads : env_threads();
  if (threads > 0) check(ctx.get(), slink_context_set_threads(ctx.get(), threads));
  if (opts.batch_m > 0 || opts.batch_n > 0) {
    check(ctx.get(), slink_context_set_tile(ctx.get(), opts.batch_m > 0 ? opts.batch_m : 64,
                                            opts.batch_n > 0 ? opts.batch_n : 256));
  }
  return ctx;
}

std::filesystem::path output_path(const common_options& opts, const std::string& name)
{
  std::error_code ec;
  std::filesystem::create_directories(opts.output_dir, ec);
  if (ec) throw failure(exit_usage, "cannot create output directory '" + opts.output_dir + "': " + ec.message());
  return std::filesystem::path(opts.output_dir) / name;
}

manifest::manifest(const std::string& subcommand, const common_options& opts, int threads)
{
  doc["input"]      = opts.input;
  doc["subcommand"] = subcommand;
  doc["parameters"] = {{"k", opts.k},
                       {"n_clusters", opts.n_clusters},
                       {"metric", opts.metric},
                       {"seed", opts.seed},
                       {"threads", threads}};
  doc["timings_ms"] = nlohmann::ordered_json::object();
  doc["outputs"]    = nlohmann::ordered_json::array();
}

void manifest::timing(const std::string& stage, double ms) { doc["timings_ms"][stage] = ms < 0 ? 0.0 : ms; }

void manifest::output(const std::filesystem::path& p) { doc["outputs"].push_back(p.string()); }

void manifest::write(const common_options& opts)
{
  auto path = output_path(opts, "manifest.json");
  output(path);
  std::ofstream out(path);
  out << doc.dump(2) << '\n';
  if (!out) throw failure(exit_usage, "cannot write " + path.string());
}

}  // namespace slink_cli
