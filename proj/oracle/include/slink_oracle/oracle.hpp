/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

// Straightforward reference computations used to check the library. Nothing
// here shares code with libslink: distances are direct sums, k-NN is a full
// sort, spanning trees come from Kruskal, and dendrograms from an O(N^2)
// relabeling union.

#include <cstddef>
#include <functional>
#include <vector>

namespace slink_oracle {

struct edge {
  int u = 0;
  int v = 0;
  double w = 0.0;
};

/** sum_t (a_t - b_t)^2 in double. */
double direct_sq_distance(const float* a, const float* b, std::size_t d);

/** Full n x n squared distance matrix of row-major data. */
std::vector<double> distance_matrix(const std::vector<float>& data, std::size_t n, std::size_t d);

struct knn_answer {
  std::vector<int> indices;       // n x k
  std::vector<double> distances;  // n x k, squared
};

/** Exact k-NN by sorting every row of the full distance matrix; ties by smaller id. */
knn_answer sorted_knn(const std::vector<float>& data, std::size_t n, std::size_t d, std::size_t k);

struct nearest {
  int index = -1;
  double distance = 0.0;
};

/**
 * Argmin over a materialized query x index distance matrix, restricted to
 * admissible pairs; ties by smaller id. index = -1 when nothing is admissible.
 */
std::vector<nearest> masked_argmin(const std::vector<float>& queries,
                                   std::size_t m,
                                   const std::vector<float>& index,
                                   std::size_t n,
                                   std::size_t d,
                                   const std::function<bool(std::size_t, std::size_t)>& admissible);

struct kruskal_result {
  std::vector<edge> edges;
  double total = 0.0;
  int n_components = 0;
};

/** Minimum spanning forest; edges processed by (w, min id, max id). */
kruskal_result kruskal(int n, std::vector<edge> edges);

/** True when no edge joins two already-connected vertices. */
bool is_acyclic(int n, const std::vector<edge>& edges);

/** Component label per vertex, labeled by the smallest vertex id in it. */
std::vector<int> components(int n, const std::vector<edge>& edges);

/** Minimum spanning tree weight by enumerating every (n-1)-subset of edges. Small inputs only. */
double enumerate_min_spanning_weight(int n, const std::vector<edge>& edges);

struct linkage_row {
  int a = 0;
  int b = 0;
  double distance = 0.0;
  int size = 0;
};

/**
 * Linkage matrix of a spanning tree: edges by (w, min id, max id); each merge
 * relabels every member of the absorbed cluster.
 */
std::vector<linkage_row> reference_linkage(int n, std::vector<edge> tree);

/** Labels after undoing the last n_clusters - 1 merges, numbered by first appearance. */
std::vector<int> truncated_components(int n, const std::vector<linkage_row>& rows, int n_clusters);

/** Complete-graph spanning tree over squared distances. */
kruskal_result full_graph_mst(const std::vector<float>& data, std::size_t n, std::size_t d);

/**
 * Naive single-linkage labels: complete graph, Kruskal, drop the n_clusters - 1
 * heaviest tree edges, label components.
 */
std::vector<int> naive_single_linkage(const std::vector<float>& data, std::size_t n, std::size_t d, int n_clusters);

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace slink_oracle
