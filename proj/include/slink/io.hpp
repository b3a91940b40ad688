/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <slink/neighbors.hpp>
#include <slink/types.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace slink::io {

inline constexpr char binary_magic[4] = {'S', 'L', 'N', 'K'};
inline constexpr std::uint32_t binary_version = 1;

/** Header-free numeric CSV, one point per line. */
point_matrix read_matrix_csv(const std::string& path);
void write_matrix_csv(const std::string& path, const point_matrix& m);

/** "SLNK", u32 version, u32 rows, u32 cols, then rows*cols little-endian f32. */
point_matrix read_matrix_binary(const std::string& path);
void write_matrix_binary(const std::string& path, const point_matrix& m);

/** Dispatch on the leading magic bytes. */
point_matrix read_matrix(const std::string& path);

/**
 * Matrix Market coordinate file (real, integer or pattern; general or
 * symmetric). Pattern entries get weight 1. The returned list is not yet
 * symmetrized; edge_list_to_csr applies the min-weight rule.
 */
edge_list read_matrix_market(const std::string& path);

void write_labels_csv(const std::string& path, const std::vector<vertex_id>& labels);
void write_dendrogram_csv(const std::string& path, const dendrogram& d);
void write_edges_csv(const std::string& path, const edge_list& edges);
void write_knn_csv(const std::string& indices_path, const std::string& distances_path, const knn_graph& g);

/** Shortest decimal text that parses back to exactly v. */
std::string format_double(double v);

}  // namespace slink::io
