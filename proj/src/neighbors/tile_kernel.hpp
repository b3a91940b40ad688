/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink/types.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace slink::detail {

/** Squared L2 norm of every row, accumulated in double in column order. */
inline std::vector<double> row_norms(const matrix_view& m)
{
  std::vector<double> norms(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double acc = 0.0;
    for (float v : m.row(i)) {
      double dv = v;
      acc += dv * dv;
    }
    norms[i] = acc;
  }
  return norms;
}

/** Copy the index block into a column-major (cols x rows) double buffer. */
inline void pack_transposed(const matrix_view& index, std::vector<double>& packed)
{
  packed.resize(index.rows * index.cols);
  for (std::size_t r = 0; r < index.rows; ++r) {
    auto row = index.row(r);
    for (std::size_t t = 0; t < index.cols; ++t) {
      packed[t * index.rows + r] = row[t];
    }
  }
}

/**
 * Squared distances of a query block against a packed index block.
 *
 * The dot product of every pair is accumulated over columns in increasing
 * order, whichever lane or tile the pair falls into, so a given pair always
 * yields the same bits. out is queries.rows x n_index, row-major.
 */
inline void sq_l2_tile(const matrix_view& queries,
                       std::span<const double> query_norms,
                       const std::vector<double>& packed,
                       std::span<const double> index_norms,
                       double* out)
{
  const std::size_t n = index_norms.size();
  const std::size_t d = queries.cols;
  for (std::size_t q = 0; q < queries.rows; ++q) {
    double* acc = out + q * n;
    std::fill(acc, acc + n, 0.0);
    auto xq = queries.row(q);
    for (std::size_t t = 0; t < d; ++t) {
      const double xv = xq[t];
      const double* p = packed.data() + t * n;
      for (std::size_t r = 0; r < n; ++r) {
        acc[r] += xv * p[r];
      }
    }
    const double qn = query_norms[q];
    for (std::size_t r = 0; r < n; ++r) {
      acc[r] = std::max(0.0, (qn + index_norms[r]) - 2.0 * acc[r]);
    }
  }
}

}  // namespace slink::detail
