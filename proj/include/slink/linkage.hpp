/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink/mst.hpp>
#include <slink/neighbors.hpp>
#include <slink/resources.hpp>
#include <slink/types.hpp>

#include <cstdint>
#include <vector>

namespace slink {

struct linkage_config {
  vertex_id n_clusters = 2;
  std::size_t k = 15;
  distance_metric metric = distance_metric::sqeuclidean;
  std::uint64_t seed = 0;
  /** 0 selects ceil(log2 N) + 8. */
  int max_connect_iters = 0;
  /** Permit k > 64. */
  bool allow_large_k = false;
  tile_spec tile = {};

  void validate(std::size_t n_points) const;
  [[nodiscard]] int connect_iteration_cap(std::size_t n_points) const;
};

struct stage_timings {
  double knn_ms = 0;
  double mst_ms = 0;
  double connect_ms = 0;
  double dendrogram_ms = 0;
  double extract_ms = 0;
};

struct linkage_result {
  dendrogram tree;
  std::vector<vertex_id> labels;
  stage_timings timings;
  vertex_id initial_components = 0;
  int connect_iterations = 0;
};

/**
 * Single-linkage clustering of x: k-NN graph, spanning forest, reconnection
 * of the forest, dendrogram, flat labels. Dendrogram distances are true
 * metric distances (square-rooted for euclidean).
 */
linkage_result single_linkage(const resources& res, const point_matrix& x, const linkage_config& cfg);

struct connect_result {
  mst_result mst;
  int iterations = 0;
};

/**
 * Join the components of a spanning forest over x. Each round finds every
 * point's nearest point of another color, keeps the lightest such edge per
 * color and merges colors along the kept edges, until one color remains.
 * When the forest is part of the full-graph minimum spanning tree, so is the
 * result. knn, when given, answers the nearest-other-color query for points
 * whose neighbor list already leaves their color; the rest run a masked
 * 1-NN search. Throws not_converged once cfg's iteration cap is exceeded.
 */
connect_result connect_graph(const resources& res,
                             const point_matrix& x,
                             mst_result forest,
                             const linkage_config& cfg,
                             const knn_graph* knn = nullptr);

/**
 * Linkage matrix of a spanning tree. Edges are merged in ascending
 * (weight, canonical key) order through a union-find with union by rank and
 * path compression. Throws invalid_argument on a wrong edge count or a cycle.
 */
dendrogram build_dendrogram(const edge_list& mst_edges, vertex_id n_points);

/** Number of merges kept below the cut that yields n_clusters clusters. */
vertex_id compute_cut_level(vertex_id n_points, vertex_id n_clusters);

/**
 * Flat labels for n_clusters clusters. Roots are taken from the children of
 * the last n_clusters - 1 merges, numbered by ascending node id, and every
 * point inherits the label of its nearest labeled ancestor.
 */
std::vector<vertex_id> extract_clusters(const resources& res, const dendrogram& d, vertex_id n_clusters);

}  // namespace slink
