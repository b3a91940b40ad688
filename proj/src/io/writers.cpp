/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/io.hpp>

#include <fstream>

namespace slink::io {

namespace {

std::ofstream open_text(const std::string& path)
{
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path)
{
  out.flush();
  if (!out) throw io_error("short write to '" + path + "'");
}

}  // namespace

void write_labels_csv(const std::string& path, const std::vector<vertex_id>& labels)
{
  auto out = open_text(path);
  for (auto l : labels) out << l << '\n';
  finish(out, path);
}

void write_dendrogram_csv(const std::string& path, const dendrogram& d)
{
  auto out = open_text(path);
  for (const auto& m : d.merges) {
    out << m.child_a << ',' << m.child_b << ',' << format_double(m.distance) << ',' << m.size << '\n';
  }
  finish(out, path);
}

void write_edges_csv(const std::string& path, const edge_list& edges)
{
  auto out = open_text(path);
  for (const auto& e : edges.edges) out << e.src << ',' << e.dst << ',' << format_double(e.weight) << '\n';
  finish(out, path);
}

void write_knn_csv(const std::string& indices_path, const std::string& distances_path, const knn_graph& g)
{
  auto idx  = open_text(indices_path);
  auto dist = open_text(distances_path);
  for (std::size_t i = 0; i < g.n_rows; ++i) {
    for (std::size_t j = 0; j < g.k; ++j) {
      if (j) {
        idx << ',';
        dist << ',';
      }
      idx << g.indices[i * g.k + j];
      dist << format_double(g.distances[i * g.k + j]);
    }
    idx << '\n';
    dist << '\n';
  }
  finish(idx, indices_path);
  finish(dist, distances_path);
}

}  // namespace slink::io
