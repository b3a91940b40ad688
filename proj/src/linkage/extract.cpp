/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/linkage.hpp>

#include <algorithm>
#include <string>

namespace slink {

std::vector<vertex_id> extract_clusters(const resources& res, const dendrogram& d, vertex_id n_clusters)
{
  const vertex_id n = d.n_points;
  SLINK_EXPECTS(d.merges.size() == static_cast<std::size_t>(std::max(n - 1, 0)),
                invalid_argument,
                "extract_clusters: dendrogram must have n_points - 1 merges");
  const vertex_id cut_level = compute_cut_level(n, n_clusters);

  const vertex_id n_nodes = 2 * n - 1;
  std::vector<vertex_id> parent(n_nodes, -1);
  for (vertex_id i = 0; i < n - 1; ++i) {
    const auto& m = d.merges[i];
    SLINK_EXPECTS(m.child_a >= 0 && m.child_a < n + i && m.child_b >= 0 && m.child_b < n + i,
                  invalid_argument,
                  "extract_clusters: merge " + std::to_string(i) + " references a node that does not exist yet");
    parent[m.child_a] = n + i;
    parent[m.child_b] = n + i;
  }

  // Label roots: children of the merges above the cut. Internal nodes created
  // above the cut all have ids >= n + cut_level, so the n_clusters smallest
  // candidates are exactly the roots of the kept subtrees.
  std::vector<vertex_id> roots;
  if (n_clusters == 1) {
    roots.push_back(n_nodes - 1);
  } else {
    roots.reserve(2 * static_cast<std::size_t>(n_clusters - 1));
    for (vertex_id i = cut_level; i < n - 1; ++i) {
      roots.push_back(d.merges[i].child_a);
      roots.push_back(d.merges[i].child_b);
    }
    std::sort(roots.begin(), roots.end());
    roots.resize(n_clusters);
  }
  SLINK_EXPECTS(roots.back() < n + cut_level || n_clusters == 1, internal_error, "extract_clusters: inconsistent roots");

  std::vector<vertex_id> node_label(n_nodes, -1);
  for (vertex_id j = 0; j < n_clusters; ++j) node_label[roots[j]] = j;

  // Every point walks up to its nearest labeled ancestor; walks are independent.
  std::vector<vertex_id> labels(n);
#pragma omp parallel for schedule(dynamic, 512) num_threads(res.threads())
  for (vertex_id p = 0; p < n; ++p) {
    vertex_id node = p;
    while (node_label[node] < 0) node = parent[node];
    labels[p] = node_label[node];
  }
  return labels;
}

}  // namespace slink
