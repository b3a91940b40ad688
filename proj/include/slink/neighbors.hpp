/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink/resources.hpp>
#include <slink/types.hpp>

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace slink {

enum class distance_metric { sqeuclidean, euclidean };

/** Rows of the query and index tiles visited per unit of parallel work. */
struct tile_spec {
  std::size_t batch_m = 64;
  std::size_t batch_n = 256;

  void validate() const;
};

/** Exact k nearest neighbors of every point, self excluded. */
struct knn_graph {
  std::size_t n_rows = 0;
  std::size_t k = 0;
  std::vector<vertex_id> indices;  // n_rows x k, row-major
  std::vector<double> distances;   // n_rows x k, each row ascending

  [[nodiscard]] neighbor_pair at(std::size_t row, std::size_t j) const
  {
    return {indices[row * k + j], distances[row * k + j]};
  }
  /** Directed edges (i, neighbor, distance). */
  [[nodiscard]] edge_list to_edge_list() const;
  /** Per row, the k-th neighbor distance: every closer point is in the row. */
  [[nodiscard]] std::vector<double> completeness_radius() const;
};

/** Admissibility of a (query row, candidate row) pair. */
using admissibility_mask = std::function<bool(std::size_t, std::size_t)>;

/**
 * Dense L2 distance block between two sets of rows, computed in expanded form
 * |x|^2 + |y|^2 - 2<x,y> with negative rounding clamped to zero. Row-major,
 * queries.rows x index.rows.
 */
std::vector<double> pairwise_l2_tile(const matrix_view& queries,
                                     const matrix_view& index,
                                     bool squared = true);

/**
 * Exact k-NN of every row of x against x itself.
 *
 * Work is split into (query block, index block) tiles. Each tile discards
 * candidates that cannot beat the row's current k-th distance, selects its
 * local top-k from the survivors, and merges them into the shared per-row
 * result while holding the mutex of its query block. Distances of a given
 * pair are computed identically in every tile, and selection uses the strict
 * (distance, id) order, so the output does not depend on tile sizes or on
 * the thread count.
 */
knn_graph fused_knn(const resources& res,
                    const point_matrix& x,
                    std::size_t k,
                    tile_spec tile = {},
                    distance_metric metric = distance_metric::sqeuclidean);

/**
 * Nearest admissible index row of every query, computed in a single pass
 * without materializing the distance matrix. Ties go to the smaller id.
 * Throws invalid_argument naming the first query with no admissible candidate.
 */
std::vector<neighbor_pair> fused_1nn(const resources& res,
                                     const matrix_view& queries,
                                     const matrix_view& index,
                                     const admissibility_mask& mask = {},
                                     tile_spec tile = {},
                                     distance_metric metric = distance_metric::sqeuclidean);

/**
 * For every point, an edge to its nearest point of a different color.
 * Requires at least two colors.
 */
edge_list cross_color_1nn(const resources& res,
                          const point_matrix& x,
                          const color_array& colors,
                          tile_spec tile = {},
                          distance_metric metric = distance_metric::sqeuclidean);

/**
 * Nearest point of a different color for each listed row of x, in squared
 * distance, ties to the smaller id. Requires at least two colors.
 */
std::vector<neighbor_pair> cross_color_1nn_rows(const resources& res,
                                                const point_matrix& x,
                                                const color_array& colors,
                                                std::span<const std::size_t> rows,
                                                tile_spec tile = {});

}  // namespace slink
