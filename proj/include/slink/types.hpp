/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace slink {

using vertex_id   = std::int32_t;
using edge_offset = std::int64_t;

/** Non-owning row-major view over a block of points. */
struct matrix_view {
  std::span<const float> data;
  std::size_t rows = 0;
  std::size_t cols = 0;

  [[nodiscard]] std::span<const float> row(std::size_t i) const
  {
    return data.subspan(i * cols, cols);
  }

  /** Rows [begin, begin + count) as a view of the same width. */
  [[nodiscard]] matrix_view slice(std::size_t begin, std::size_t count) const
  {
    return {data.subspan(begin * cols, count * cols), count, cols};
  }
};

/**
 * Dense row-major N x d feature matrix. Values are validated finite on
 * construction and immutable afterwards.
 */
class point_matrix {
 public:
  point_matrix() = default;
  point_matrix(std::size_t n_rows, std::size_t n_cols, std::vector<float> data);

  [[nodiscard]] std::size_t rows() const { return n_rows_; }
  [[nodiscard]] std::size_t cols() const { return n_cols_; }
  [[nodiscard]] std::span<const float> data() const { return data_; }
  [[nodiscard]] std::span<const float> row(std::size_t i) const
  {
    return std::span<const float>(data_).subspan(i * n_cols_, n_cols_);
  }
  [[nodiscard]] matrix_view view() const { return {data_, n_rows_, n_cols_}; }

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<float> data_;
};

/** (index, distance) pair, the unit of every nearest-neighbor reduction. */
struct neighbor_pair {
  vertex_id index = -1;
  double distance = 0.0;

  /** Strict order: smaller distance first, ties go to the smaller id. */
  friend bool operator<(const neighbor_pair& a, const neighbor_pair& b)
  {
    return a.distance < b.distance || (a.distance == b.distance && a.index < b.index);
  }
  friend bool operator==(const neighbor_pair&, const neighbor_pair&) = default;
};

struct edge {
  vertex_id src = 0;
  vertex_id dst = 0;
  double weight = 0.0;

  friend bool operator==(const edge&, const edge&) = default;
};

/** Weighted graph in coordinate form. */
struct edge_list {
  vertex_id n_vertices = 0;
  std::vector<edge> edges;

  /** Throws ingestion_error on out-of-range ids, self-loops or non-finite weights. */
  void validate() const;
};

/**
 * Symmetric weighted graph in compressed sparse row form. Each row's column
 * indices are sorted ascending.
 */
struct csr_graph {
  vertex_id n_vertices = 0;
  std::vector<edge_offset> row_offsets;
  std::vector<vertex_id> col_indices;
  std::vector<double> weights;

  [[nodiscard]] edge_offset n_entries() const { return static_cast<edge_offset>(col_indices.size()); }
  [[nodiscard]] bool is_symmetric() const;
  /** Position of (row, col) in the entry arrays, or -1. */
  [[nodiscard]] edge_offset find(vertex_id row, vertex_id col) const;
  /** Undirected edges (src < dst) in row-major order. */
  [[nodiscard]] edge_list to_edge_list() const;
};

/** Per-vertex component label; canonical when every label is its component's minimum vertex id. */
using color_array = std::vector<vertex_id>;

/** Number of distinct labels. */
std::size_t count_colors(const color_array& colors);

/** One row of a linkage matrix. */
struct merge_row {
  vertex_id child_a = 0;
  vertex_id child_b = 0;
  double distance = 0.0;
  vertex_id size = 0;

  friend bool operator==(const merge_row&, const merge_row&) = default;
};

/**
 * Binary merge tree over n_points leaves in linkage-matrix layout: merge i
 * creates node i + n_points.
 */
struct dendrogram {
  vertex_id n_points = 0;
  std::vector<merge_row> merges;
};

/** (min, max) of an undirected edge's endpoints. Throws on self-loops. */
std::pair<vertex_id, vertex_id> canonical_edge_key(vertex_id src, vertex_id dst);

/**
 * Build a symmetric CSR graph. Both directions of every edge are present and
 * duplicate (src, dst) pairs in either direction collapse to the minimum weight.
 */
csr_graph edge_list_to_csr(const edge_list& g);

}  // namespace slink
