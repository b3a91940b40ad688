/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink/resources.hpp>
#include <slink/types.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace slink {

/**
 * A CSR graph whose weights have been perturbed so that no two undirected
 * edges compare equal while the order of distinct original weights is kept.
 *
 * `rank` materializes the solver's strict total order: entry e's undirected
 * edge is the rank[e]-th smallest under (altered weight, original weight,
 * canonical key). Both directions of an edge share weight and rank.
 */
struct altered_graph {
  csr_graph graph;                      // altered weights
  std::vector<double> original_weights; // parallel to graph.weights
  std::vector<std::uint64_t> rank;      // parallel to graph.weights
  double theta = 0.0;
  std::uint64_t seed = 0;
};

/**
 * Perturb every undirected edge by epsilon in [0, theta), theta being the
 * smallest positive gap between distinct weights. Epsilon is a seeded hash of
 * the canonical edge key, so both directions receive the same value.
 * Zero weights are rejected unless allow_zero_weights is set.
 */
altered_graph weight_alteration(const csr_graph& g, std::uint64_t seed, bool allow_zero_weights = false);

/** Strict order of two entries of an altered graph (equivalent to comparing rank). */
bool altered_less(const altered_graph& g, edge_offset a, edge_offset b);

inline constexpr edge_offset no_edge = -1;
inline constexpr std::uint64_t no_rank = ~std::uint64_t{0};

/** Result of the per-vertex scan. */
struct vertex_candidates {
  /** Entry of v's lightest edge leaving its color, or no_edge. */
  std::vector<edge_offset> edge;
  /** Rank of each color's lightest outgoing edge, indexed by color value; no_rank if none. */
  std::vector<std::uint64_t> color_min_rank;
};

/**
 * For each vertex, the incident edge of minimum altered weight whose other
 * endpoint has a different color. Also records the per-color minimum.
 */
vertex_candidates min_edge_per_vertex(const resources& res,
                                      const altered_graph& g,
                                      const color_array& colors);

/**
 * Accept, for every color, the candidate equal to that color's minimum. An
 * edge chosen by both of its endpoint colors is emitted once. Edges are
 * (selecting vertex, neighbor, original weight), in ascending vertex order.
 */
edge_list min_edge_per_supervertex(const resources& res,
                                   const altered_graph& g,
                                   const vertex_candidates& candidates,
                                   const color_array& colors);

/**
 * Merge colors joined by new_edges. Rounds of pairwise min exchange and
 * recoloring run until nothing changes; the result gives every vertex the
 * minimum color reachable through new_edges.
 */
color_array label_propagation(const resources& res,
                              const edge_list& new_edges,
                              color_array colors);

struct mst_options {
  bool maximize = false;
  std::uint64_t seed = 0;
  bool allow_zero_weights = false;
  /**
   * Optional, minimize only. When set, the graph is a subgraph of a larger
   * one that holds no edge at vertex v lighter than vertex_radius[v] other
   * than those present. A color then accepts its lightest edge only when
   * that edge is lighter than every member's radius, so the forest stays a
   * subset of the larger graph's minimum spanning tree.
   */
  std::span<const double> vertex_radius{};
};

struct mst_result {
  edge_list edges;  // original weights
  color_array colors;
  vertex_id n_components = 0;
  int iterations = 0;

  [[nodiscard]] double total_weight() const;
};

/**
 * Minimum (or maximum) spanning forest. Weights are altered once, then
 * per-vertex and per-color minimum edges are selected and colors merged until
 * a round adds no edge. Output is bit-identical for a fixed (graph, options)
 * regardless of the thread count.
 */
mst_result solve_mst(const resources& res, const csr_graph& g, const mst_options& opts = {});

}  // namespace slink
