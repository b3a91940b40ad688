/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "tile_kernel.hpp"

#include <slink/error.hpp>
#include <slink/neighbors.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <string>

namespace slink {

namespace {

/** Shared per-row selection state. */
struct topk_store {
  std::size_t k;
  std::vector<neighbor_pair> best;  // n_rows x k, sorted prefix of length count[row]
  std::vector<std::size_t> count;
  std::vector<double> threshold;    // current k-th distance, +inf until the row is full

  topk_store(std::size_t n_rows, std::size_t k_)
    : k(k_), best(n_rows * k_), count(n_rows, 0),
      threshold(n_rows, std::numeric_limits<double>::infinity())
  {
  }

  double load_threshold(std::size_t row)
  {
    return std::atomic_ref<double>(threshold[row]).load(std::memory_order_relaxed);
  }

  /** Merge a sorted tile-local list into the row. Caller holds the row block's mutex. */
  void merge(std::size_t row, const std::vector<neighbor_pair>& local, std::vector<neighbor_pair>& scratch)
  {
    auto* cur = best.data() + row * k;
    scratch.clear();
    std::merge(cur, cur + count[row], local.begin(), local.end(), std::back_inserter(scratch));
    std::size_t n = std::min(k, scratch.size());
    std::copy_n(scratch.begin(), n, cur);
    count[row] = n;
    if (n == k) {
      std::atomic_ref<double>(threshold[row]).store(cur[k - 1].distance, std::memory_order_relaxed);
    }
  }
};

void select_local_topk(std::vector<neighbor_pair>& cand, std::size_t k)
{
  if (cand.size() > k) {
    std::nth_element(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());
    cand.resize(k);
  }
  std::sort(cand.begin(), cand.end());
}

}  // namespace

knn_graph fused_knn(const resources& res, const point_matrix& x, std::size_t k, tile_spec tile, distance_metric metric)
{
  tile.validate();
  const std::size_t n = x.rows();
  SLINK_EXPECTS(n >= 2, invalid_argument, "fused_knn: need at least 2 points");
  SLINK_EXPECTS(k >= 1 && k <= n - 1,
                invalid_argument,
                "fused_knn: k=" + std::to_string(k) + " outside [1, " + std::to_string(n - 1) + "]");

  const auto view  = x.view();
  const auto norms = detail::row_norms(view);
  const std::size_t bm = std::min(tile.batch_m, n);
  const std::size_t bn = std::min(tile.batch_n, n);
  const std::size_t n_qblocks = (n + bm - 1) / bm;
  const std::size_t n_iblocks = (n + bn - 1) / bn;
  const auto n_tiles = static_cast<std::int64_t>(n_qblocks * n_iblocks);

  topk_store store(n, k);
  std::vector<std::mutex> block_locks(n_qblocks);

#pragma omp parallel num_threads(res.threads())
  {
    std::vector<double> packed;
    std::vector<double> dist(bm * bn);
    std::vector<std::vector<neighbor_pair>> local(bm);
    std::vector<neighbor_pair> scratch;

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < n_tiles; ++t) {
      const std::size_t qb = static_cast<std::size_t>(t) / n_iblocks;
      const std::size_t ib = static_cast<std::size_t>(t) % n_iblocks;
      const std::size_t q0 = qb * bm, i0 = ib * bn;
      const std::size_t qm = std::min(bm, n - q0), in = std::min(bn, n - i0);

      const auto queries = view.slice(q0, qm);
      const auto index   = view.slice(i0, in);
      detail::pack_transposed(index, packed);
      detail::sq_l2_tile(queries,
                         std::span<const double>(norms).subspan(q0, qm),
                         packed,
                         std::span<const double>(norms).subspan(i0, in),
                         dist.data());

      // Compact the candidates that can still enter each row's top-k.
      bool any = false;
      for (std::size_t q = 0; q < qm; ++q) {
        auto& cand = local[q];
        cand.clear();
        const std::size_t row = q0 + q;
        const double thr = store.load_threshold(row);
        const double* drow = dist.data() + q * in;
        for (std::size_t r = 0; r < in; ++r) {
          if (drow[r] <= thr && i0 + r != row) {
            cand.push_back({static_cast<vertex_id>(i0 + r), drow[r]});
          }
        }
        if (!cand.empty()) {
          select_local_topk(cand, k);
          any = true;
        }
      }
      if (!any) continue;

      std::lock_guard<std::mutex> guard(block_locks[qb]);
      for (std::size_t q = 0; q < qm; ++q) {
        if (!local[q].empty()) store.merge(q0 + q, local[q], scratch);
      }
    }
  }

  knn_graph out;
  out.n_rows = n;
  out.k = k;
  out.indices.resize(n * k);
  out.distances.resize(n * k);
  for (std::size_t i = 0; i < n * k; ++i) {
    out.indices[i]   = store.best[i].index;
    out.distances[i] = metric == distance_metric::euclidean ? std::sqrt(store.best[i].distance)
                                                            : store.best[i].distance;
  }
  return out;
}

}  // namespace slink
