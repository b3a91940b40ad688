/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "cli_support.hpp"

#include <slink_oracle/generators.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace slink_cli {

int cmd_bench(const common_options& opts, const bench_options& bench)
{
  std::ostringstream csv;
  csv << "n,d,k,threads,repeat,knn_ms,mst_ms,connect_ms,dendrogram_ms,extract_ms,total_ms,connect_iterations\n";
  std::cout << csv.str() << std::flush;

  const slink_stage stages[] = {SLINK_STAGE_KNN, SLINK_STAGE_MST, SLINK_STAGE_CONNECT, SLINK_STAGE_DENDROGRAM,
                                SLINK_STAGE_EXTRACT};
  for (int n : bench.sizes) {
    for (int d : bench.dims) {
      auto data = slink_oracle::gaussian_blobs(static_cast<std::size_t>(n), static_cast<std::size_t>(d),
                                               static_cast<std::size_t>(opts.n_clusters) * 4, 20.0, 1.0, opts.seed);
      for (int k : bench.ks) {
        for (int t : bench.threads) {
          common_options run = opts;
          run.threads        = t;
          auto ctx           = make_context(run);
          slink_matrix* xraw = nullptr;
          check(ctx.get(), slink_matrix_create(ctx.get(), static_cast<std::uint32_t>(n),
                                               static_cast<std::uint32_t>(d), data.data(), &xraw));
          matrix_ptr x(xraw);
          slink_linkage_params params;
          slink_linkage_params_init(&params);
          params.n_clusters = opts.n_clusters;
          params.k          = k;
          params.metric     = parse_metric(opts.metric);
          params.seed       = opts.seed;
          for (int r = 0; r < bench.repeats; ++r) {
            slink_linkage_result* raw = nullptr;
            check(ctx.get(), slink_single_linkage(ctx.get(), x.get(), &params, &raw));
            linkage_ptr result(raw);
            std::ostringstream line;
            line << n << ',' << d << ',' << k << ',' << slink_context_threads(ctx.get()) << ',' << r;
            double total = 0.0;
            for (auto s : stages) {
              const double ms = slink_linkage_stage_ms(raw, s);
              total += ms;
              line << ',' << ms;
            }
            line << ',' << total << ',' << slink_linkage_connect_iterations(raw) << '\n';
            std::cout << line.str() << std::flush;
            csv << line.str();
          }
        }
      }
    }
  }

  if (!opts.output_dir.empty()) {
    auto path = output_path(opts, "bench.csv");
    std::ofstream out(path);
    out << csv.str();
    if (!out) throw failure(exit_usage, "cannot write " + path.string());
    manifest log("bench", opts, opts.threads);
    log.output(path);
    log.write(opts);
  }
  return exit_ok;
}

}  // namespace slink_cli
