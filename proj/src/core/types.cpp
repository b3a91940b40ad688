/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/resources.hpp>
#include <slink/types.hpp>

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

namespace slink {

int default_thread_count() { return omp_get_max_threads(); }

int resources::threads() const { return n_threads > 0 ? n_threads : default_thread_count(); }

point_matrix::point_matrix(std::size_t n_rows, std::size_t n_cols, std::vector<float> data)
  : n_rows_(n_rows), n_cols_(n_cols), data_(std::move(data))
{
  SLINK_EXPECTS(data_.size() == n_rows_ * n_cols_,
                ingestion_error,
                "point matrix: data length " + std::to_string(data_.size()) + " != " +
                  std::to_string(n_rows_) + " x " + std::to_string(n_cols_));
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw ingestion_error("point matrix: non-finite value at row " + std::to_string(i / n_cols_) +
                            ", column " + std::to_string(i % n_cols_));
    }
  }
}

void edge_list::validate() const
{
  SLINK_EXPECTS(n_vertices >= 0, ingestion_error, "edge list: negative vertex count");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.src < 0 || e.src >= n_vertices || e.dst < 0 || e.dst >= n_vertices) {
      throw ingestion_error("edge " + std::to_string(i) + ": vertex id out of range [0, " +
                            std::to_string(n_vertices) + ")");
    }
    if (e.src == e.dst) {
      throw ingestion_error("edge " + std::to_string(i) + ": self-loop on vertex " + std::to_string(e.src));
    }
    if (!std::isfinite(e.weight)) {
      throw ingestion_error("edge " + std::to_string(i) + ": non-finite weight");
    }
  }
}

std::size_t count_colors(const color_array& colors)
{
  color_array sorted(colors);
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::pair<vertex_id, vertex_id> canonical_edge_key(vertex_id src, vertex_id dst)
{
  SLINK_EXPECTS(src != dst, invalid_argument, "canonical_edge_key: self-loop on vertex " + std::to_string(src));
  return {std::min(src, dst), std::max(src, dst)};
}

csr_graph edge_list_to_csr(const edge_list& g)
{
  g.validate();

  struct keyed {
    vertex_id lo, hi;
    double w;
  };
  std::vector<keyed> pairs;
  pairs.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    auto [lo, hi] = canonical_edge_key(e.src, e.dst);
    pairs.push_back({lo, hi, e.weight});
  }
  std::sort(pairs.begin(), pairs.end(), [](const keyed& a, const keyed& b) {
    return std::tie(a.lo, a.hi, a.w) < std::tie(b.lo, b.hi, b.w);
  });
  // First of each (lo, hi) run carries the minimum weight.
  pairs.erase(std::unique(pairs.begin(), pairs.end(),
                          [](const keyed& a, const keyed& b) { return a.lo == b.lo && a.hi == b.hi; }),
              pairs.end());

  csr_graph out;
  out.n_vertices = g.n_vertices;
  out.row_offsets.assign(static_cast<std::size_t>(g.n_vertices) + 1, 0);
  for (const auto& p : pairs) {
    ++out.row_offsets[p.lo + 1];
    ++out.row_offsets[p.hi + 1];
  }
  for (std::size_t v = 0; v < static_cast<std::size_t>(g.n_vertices); ++v) {
    out.row_offsets[v + 1] += out.row_offsets[v];
  }
  out.col_indices.resize(2 * pairs.size());
  out.weights.resize(2 * pairs.size());

  // Pairs are sorted by (lo, hi): row v first receives its smaller neighbors
  // (as hi) and then its larger ones (as lo), so rows come out sorted.
  std::vector<edge_offset> cursor(out.row_offsets.begin(), out.row_offsets.end() - 1);
  for (const auto& p : pairs) {
    auto a = cursor[p.lo]++;
    out.col_indices[a] = p.hi;
    out.weights[a]     = p.w;
    auto b = cursor[p.hi]++;
    out.col_indices[b] = p.lo;
    out.weights[b]     = p.w;
  }
  return out;
}

edge_offset csr_graph::find(vertex_id row, vertex_id col) const
{
  auto first = col_indices.begin() + row_offsets[row];
  auto last  = col_indices.begin() + row_offsets[row + 1];
  auto it    = std::lower_bound(first, last, col);
  if (it == last || *it != col) return -1;
  return it - col_indices.begin();
}

bool csr_graph::is_symmetric() const
{
  if (row_offsets.size() != static_cast<std::size_t>(n_vertices) + 1) return false;
  if (row_offsets.front() != 0 || row_offsets.back() != n_entries()) return false;
  if (weights.size() != col_indices.size()) return false;
  for (vertex_id v = 0; v < n_vertices; ++v) {
    if (row_offsets[v] > row_offsets[v + 1]) return false;
    for (auto e = row_offsets[v]; e < row_offsets[v + 1]; ++e) {
      auto u = col_indices[e];
      if (u < 0 || u >= n_vertices) return false;
      auto m = find(u, v);
      if (m < 0 || weights[m] != weights[e]) return false;
    }
  }
  return true;
}

edge_list csr_graph::to_edge_list() const
{
  edge_list out;
  out.n_vertices = n_vertices;
  for (vertex_id v = 0; v < n_vertices; ++v) {
    for (auto e = row_offsets[v]; e < row_offsets[v + 1]; ++e) {
      if (col_indices[e] > v) out.edges.push_back({v, col_indices[e], weights[e]});
    }
  }
  return out;
}

}  // namespace slink
