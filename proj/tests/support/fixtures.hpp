/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink/linkage.hpp>
#include <slink/mst.hpp>
#include <slink/neighbors.hpp>
#include <slink/types.hpp>

#include <slink_oracle/generators.hpp>
#include <slink_oracle/oracle.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace slink_test {

inline slink::edge_list to_edge_list(int n, const std::vector<slink_oracle::edge>& edges)
{
  slink::edge_list out{n, {}};
  for (const auto& e : edges) out.edges.push_back({e.u, e.v, e.w});
  return out;
}

inline slink::csr_graph to_csr(int n, const std::vector<slink_oracle::edge>& edges)
{
  return slink::edge_list_to_csr(to_edge_list(n, edges));
}

inline std::vector<slink_oracle::edge> to_oracle(const slink::edge_list& g)
{
  std::vector<slink_oracle::edge> out;
  for (const auto& e : g.edges) out.push_back({e.src, e.dst, e.weight});
  return out;
}

inline slink::point_matrix to_points(const std::vector<float>& data, std::size_t d)
{
  return slink::point_matrix(data.size() / d, d, data);
}

inline bool close_rel(double got, double want, double rel)
{
  return std::abs(got - want) <= rel * std::max(std::abs(want), 1e-12);
}

/** Canonical (lo, hi) pairs of an edge list, sorted. */
inline std::vector<std::pair<int, int>> edge_keys(const slink::edge_list& g)
{
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges) out.emplace_back(std::min(e.src, e.dst), std::max(e.src, e.dst));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace slink_test
