/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "tile_kernel.hpp"

#include <slink/error.hpp>
#include <slink/neighbors.hpp>

#include <cmath>
#include <string>

namespace slink {

void tile_spec::validate() const
{
  SLINK_EXPECTS(batch_m >= 1 && batch_n >= 1, invalid_argument, "tile sizes must be >= 1");
}

std::vector<double> knn_graph::completeness_radius() const
{
  std::vector<double> out(n_rows);
  for (std::size_t r = 0; r < n_rows; ++r) out[r] = distances[r * k + k - 1];
  return out;
}

edge_list knn_graph::to_edge_list() const
{
  edge_list out;
  out.n_vertices = static_cast<vertex_id>(n_rows);
  out.edges.reserve(n_rows * k);
  for (std::size_t i = 0; i < n_rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      out.edges.push_back({static_cast<vertex_id>(i), indices[i * k + j], distances[i * k + j]});
    }
  }
  return out;
}

std::vector<double> pairwise_l2_tile(const matrix_view& queries, const matrix_view& index, bool squared)
{
  SLINK_EXPECTS(queries.cols == index.cols,
                invalid_argument,
                "pairwise_l2_tile: dimension mismatch (" + std::to_string(queries.cols) + " vs " +
                  std::to_string(index.cols) + ")");
  auto qn = detail::row_norms(queries);
  auto in = detail::row_norms(index);
  std::vector<double> packed;
  detail::pack_transposed(index, packed);
  std::vector<double> out(queries.rows * index.rows);
  detail::sq_l2_tile(queries, qn, packed, in, out.data());
  if (!squared) {
    for (auto& v : out) v = std::sqrt(v);
  }
  return out;
}

}  // namespace slink
