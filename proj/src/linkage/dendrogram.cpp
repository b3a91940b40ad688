/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/linkage.hpp>

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace slink {

namespace {

class union_find {
 public:
  explicit union_find(vertex_id n) : parent_(n), rank_(n, 0)
  {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  vertex_id find(vertex_id v)
  {
    vertex_id root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
      vertex_id next = parent_[v];
      parent_[v]     = root;
      v              = next;
    }
    return root;
  }

  /** Link two distinct roots; returns the surviving root. */
  vertex_id unite(vertex_id a, vertex_id b)
  {
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return a;
  }

 private:
  std::vector<vertex_id> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace

dendrogram build_dendrogram(const edge_list& mst_edges, vertex_id n_points)
{
  SLINK_EXPECTS(n_points >= 1, invalid_argument, "build_dendrogram: need at least one point");
  SLINK_EXPECTS(mst_edges.edges.size() == static_cast<std::size_t>(n_points - 1),
                invalid_argument,
                "build_dendrogram: expected " + std::to_string(n_points - 1) + " edges, got " +
                  std::to_string(mst_edges.edges.size()));
  edge_list bounded = mst_edges;
  bounded.n_vertices = n_points;
  bounded.validate();

  std::vector<std::size_t> order(mst_edges.edges.size());
  std::iota(order.begin(), order.end(), 0);
  auto sort_key = [&](std::size_t i) {
    const auto& e = mst_edges.edges[i];
    return std::make_tuple(e.weight, std::min(e.src, e.dst), std::max(e.src, e.dst));
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sort_key(a) < sort_key(b); });

  union_find uf(n_points);
  std::vector<vertex_id> node_of_root(n_points);
  std::vector<vertex_id> size_of_root(n_points, 1);
  std::iota(node_of_root.begin(), node_of_root.end(), 0);

  dendrogram out;
  out.n_points = n_points;
  out.merges.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& e = mst_edges.edges[order[i]];
    const vertex_id ra = uf.find(e.src), rb = uf.find(e.dst);
    SLINK_EXPECTS(ra != rb,
                  invalid_argument,
                  "build_dendrogram: edge (" + std::to_string(e.src) + ", " + std::to_string(e.dst) + ") closes a cycle");
    const vertex_id a = node_of_root[ra], b = node_of_root[rb];
    const vertex_id size = size_of_root[ra] + size_of_root[rb];
    out.merges.push_back({std::min(a, b), std::max(a, b), e.weight, size});
    const vertex_id r = uf.unite(ra, rb);
    node_of_root[r] = n_points + static_cast<vertex_id>(i);
    size_of_root[r] = size;
  }
  return out;
}

vertex_id compute_cut_level(vertex_id n_points, vertex_id n_clusters)
{
  SLINK_EXPECTS(n_clusters >= 1 && n_clusters <= n_points,
                invalid_argument,
                "n_clusters=" + std::to_string(n_clusters) + " outside [1, " + std::to_string(n_points) + "]");
  return (n_points - 1) - (n_clusters - 1);
}

}  // namespace slink
