/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/io.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace slink::io {

namespace {

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

edge_list read_matrix_market(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "' for reading");

  auto fail = [&](std::size_t line_no, const std::string& what) {
    throw ingestion_error(path + ":" + std::to_string(line_no) + ": " + what);
  };

  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) fail(1, "empty file");
  ++line_no;

  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket") fail(line_no, "missing %%MatrixMarket banner");
  object = lower(object), format = lower(format), field = lower(field), symmetry = lower(symmetry);
  if (object != "matrix" || format != "coordinate") fail(line_no, "only 'matrix coordinate' files are supported");
  const bool pattern = field == "pattern";
  if (!pattern && field != "real" && field != "integer") fail(line_no, "unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric") fail(line_no, "unsupported symmetry '" + symmetry + "'");

  // Skip comments to the size line.
  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream size_line(line);
    if (!(size_line >> rows >> cols >> nnz)) fail(line_no, "malformed size line");
    break;
  }
  if (nnz < 0) fail(line_no, "missing size line");
  if (rows != cols) fail(line_no, "adjacency matrix must be square (" + std::to_string(rows) + " x " + std::to_string(cols) + ")");
  if (rows > std::numeric_limits<vertex_id>::max()) fail(line_no, "too many vertices");

  edge_list out;
  out.n_vertices = static_cast<vertex_id>(rows);
  out.edges.reserve(static_cast<std::size_t>(nnz));
  while (static_cast<long long>(out.edges.size()) < nnz && std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    double w = 1.0;
    if (!(entry >> i >> j)) fail(line_no, "malformed entry");
    if (!pattern && !(entry >> w)) fail(line_no, "missing weight");
    if (i < 1 || i > rows || j < 1 || j > rows) fail(line_no, "index out of range [1, " + std::to_string(rows) + "]");
    if (i == j) fail(line_no, "self-loop on vertex " + std::to_string(i));
    if (!std::isfinite(w)) fail(line_no, "non-finite weight");
    out.edges.push_back({static_cast<vertex_id>(i - 1), static_cast<vertex_id>(j - 1), w});
  }
  if (static_cast<long long>(out.edges.size()) != nnz) {
    fail(line_no, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(out.edges.size()));
  }
  return out;
}

}  // namespace slink::io
