/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "tile_kernel.hpp"

#include <slink/error.hpp>
#include <slink/neighbors.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace slink {

namespace {

template <typename Mask>
std::vector<neighbor_pair> min_reduce(const resources& res,
                                      const matrix_view& queries,
                                      const matrix_view& index,
                                      Mask admissible,
                                      tile_spec tile,
                                      distance_metric metric)
{
  tile.validate();
  SLINK_EXPECTS(queries.cols == index.cols,
                invalid_argument,
                "fused_1nn: dimension mismatch (" + std::to_string(queries.cols) + " vs " +
                  std::to_string(index.cols) + ")");
  SLINK_EXPECTS(index.rows >= 1, invalid_argument, "fused_1nn: empty index");

  const std::size_t m = queries.rows, n = index.rows;
  const auto qnorms = detail::row_norms(queries);
  const auto inorms = detail::row_norms(index);
  const std::size_t bm = std::max<std::size_t>(1, std::min(tile.batch_m, m));
  const std::size_t bn = std::min(tile.batch_n, n);
  const auto n_qblocks = static_cast<std::int64_t>((m + bm - 1) / bm);

  const neighbor_pair init{std::numeric_limits<vertex_id>::max(), std::numeric_limits<double>::infinity()};
  std::vector<neighbor_pair> out(m, init);
  std::vector<char> found(m, 0);

  // One query block per task: the row's running min stays private to the
  // thread across all index tiles, so no synchronization is needed.
#pragma omp parallel num_threads(res.threads())
  {
    std::vector<double> packed;
    std::vector<double> dist(bm * bn);

#pragma omp for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < n_qblocks; ++b) {
      const std::size_t q0 = static_cast<std::size_t>(b) * bm;
      const std::size_t qm = std::min(bm, m - q0);
      const auto qblock = queries.slice(q0, qm);
      for (std::size_t i0 = 0; i0 < n; i0 += bn) {
        const std::size_t in = std::min(bn, n - i0);
        detail::pack_transposed(index.slice(i0, in), packed);
        detail::sq_l2_tile(qblock,
                           std::span<const double>(qnorms).subspan(q0, qm),
                           packed,
                           std::span<const double>(inorms).subspan(i0, in),
                           dist.data());
        for (std::size_t q = 0; q < qm; ++q) {
          const std::size_t row = q0 + q;
          neighbor_pair best = out[row];
          const double* drow = dist.data() + q * in;
          for (std::size_t r = 0; r < in; ++r) {
            if (drow[r] > best.distance) continue;
            neighbor_pair c{static_cast<vertex_id>(i0 + r), drow[r]};
            if (c < best && admissible(row, i0 + r)) {
              best = c;
              found[row] = 1;
            }
          }
          out[row] = best;
        }
      }
    }
  }

  for (std::size_t q = 0; q < m; ++q) {
    SLINK_EXPECTS(found[q], invalid_argument, "fused_1nn: query row " + std::to_string(q) + " has no admissible candidate");
    if (metric == distance_metric::euclidean) out[q].distance = std::sqrt(out[q].distance);
  }
  return out;
}

}  // namespace

std::vector<neighbor_pair> fused_1nn(const resources& res,
                                     const matrix_view& queries,
                                     const matrix_view& index,
                                     const admissibility_mask& mask,
                                     tile_spec tile,
                                     distance_metric metric)
{
  if (!mask) {
    return min_reduce(res, queries, index, [](std::size_t, std::size_t) { return true; }, tile, metric);
  }
  return min_reduce(res, queries, index, mask, tile, metric);
}

edge_list cross_color_1nn(const resources& res,
                          const point_matrix& x,
                          const color_array& colors,
                          tile_spec tile,
                          distance_metric metric)
{
  SLINK_EXPECTS(colors.size() == x.rows(),
                invalid_argument,
                "cross_color_1nn: " + std::to_string(colors.size()) + " colors for " + std::to_string(x.rows()) +
                  " points");
  SLINK_EXPECTS(count_colors(colors) >= 2, invalid_argument, "cross_color_1nn: graph is already connected (single color)");

  auto nearest = min_reduce(
    res, x.view(), x.view(), [&colors](std::size_t q, std::size_t c) { return colors[q] != colors[c]; }, tile, metric);

  edge_list out;
  out.n_vertices = static_cast<vertex_id>(x.rows());
  out.edges.reserve(x.rows());
  for (std::size_t i = 0; i < nearest.size(); ++i) {
    out.edges.push_back({static_cast<vertex_id>(i), nearest[i].index, nearest[i].distance});
  }
  return out;
}

std::vector<neighbor_pair> cross_color_1nn_rows(const resources& res,
                                                const point_matrix& x,
                                                const color_array& colors,
                                                std::span<const std::size_t> rows,
                                                tile_spec tile)
{
  SLINK_EXPECTS(colors.size() == x.rows(),
                invalid_argument,
                "cross_color_1nn_rows: " + std::to_string(colors.size()) + " colors for " + std::to_string(x.rows()) +
                  " points");
  std::vector<float> gathered;
  gathered.reserve(rows.size() * x.cols());
  for (auto v : rows) {
    SLINK_EXPECTS(v < x.rows(), invalid_argument, "cross_color_1nn_rows: row " + std::to_string(v) + " out of range");
    gathered.insert(gathered.end(), x.row(v).begin(), x.row(v).end());
  }
  const point_matrix queries(rows.size(), x.cols(), std::move(gathered));
  return min_reduce(
    res,
    queries.view(),
    x.view(),
    [&](std::size_t q, std::size_t c) { return colors[rows[q]] != colors[c]; },
    tile,
    distance_metric::sqeuclidean);
}

}  // namespace slink
