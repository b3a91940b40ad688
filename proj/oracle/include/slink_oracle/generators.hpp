/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink_oracle/oracle.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace slink_oracle {

/** n points drawn around n_centers centers uniform in [-box, box]^d. */
std::vector<float> gaussian_blobs(std::size_t n,
                                  std::size_t d,
                                  std::size_t n_centers,
                                  double box,
                                  double stddev,
                                  std::uint64_t seed);

std::vector<float> uniform_points(std::size_t n, std::size_t d, std::uint64_t seed);

enum class weight_mode {
  continuous,  // uniform in (0.5, 100)
  heavy_ties,  // a handful of integer levels
  all_equal,   // every weight 1.0
};

/** Connected graph: a random spanning tree plus random extra distinct edges, E total. */
std::vector<edge> random_connected_graph(int n_vertices, std::size_t n_edges, weight_mode mode, std::uint64_t seed);

/**
 * Graph with exactly n_components connected components over n_vertices
 * (vertex ids shuffled across components).
 */
std::vector<edge> random_forest_graph(int n_vertices,
                                      int n_components,
                                      std::size_t extra_edges_per_component,
                                      weight_mode mode,
                                      std::uint64_t seed);

/**
 * Tight clusters placed far apart at irregular spacings, each with at least
 * three points, so a k=2 neighbor graph keeps them disconnected.
 */
std::vector<float> separated_clusters(std::size_t n_clusters,
                                      std::size_t per_cluster,
                                      std::size_t d,
                                      std::uint64_t seed);

}  // namespace slink_oracle
