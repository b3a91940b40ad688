/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink_oracle/oracle.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace slink_oracle {

namespace {

struct disjoint_sets {
  std::vector<int> parent;
  explicit disjoint_sets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v)
  {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool join(int a, int b)
  {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

bool edge_less(const edge& a, const edge& b)
{
  return std::make_tuple(a.w, std::min(a.u, a.v), std::max(a.u, a.v)) <
         std::make_tuple(b.w, std::min(b.u, b.v), std::max(b.u, b.v));
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double direct_sq_distance(const float* a, const float* b, std::size_t d)
{
  double s = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    double diff = static_cast<double>(a[t]) - static_cast<double>(b[t]);
    s += diff * diff;
  }
  return s;
}

std::vector<double> distance_matrix(const std::vector<float>& data, std::size_t n, std::size_t d)
{
  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = direct_sq_distance(&data[i * d], &data[j * d], d);
  }
  return out;
}

knn_answer sorted_knn(const std::vector<float>& data, std::size_t n, std::size_t d, std::size_t k)
{
  knn_answer out;
  out.indices.reserve(n * k);
  out.distances.reserve(n * k);
  std::vector<std::pair<double, int>> row;
  for (std::size_t i = 0; i < n; ++i) {
    row.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) row.emplace_back(direct_sq_distance(&data[i * d], &data[j * d], d), static_cast<int>(j));
    }
    std::sort(row.begin(), row.end());
    for (std::size_t j = 0; j < k; ++j) {
      out.indices.push_back(row[j].second);
      out.distances.push_back(row[j].first);
    }
  }
  return out;
}

std::vector<nearest> masked_argmin(const std::vector<float>& queries,
                                   std::size_t m,
                                   const std::vector<float>& index,
                                   std::size_t n,
                                   std::size_t d,
                                   const std::function<bool(std::size_t, std::size_t)>& admissible)
{
  std::vector<double> dist(m * n);
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t r = 0; r < n; ++r) dist[q * n + r] = direct_sq_distance(&queries[q * d], &index[r * d], d);
  }
  std::vector<nearest> out(m);
  for (std::size_t q = 0; q < m; ++q) {
    for (std::size_t r = 0; r < n; ++r) {
      if (admissible && !admissible(q, r)) continue;
      if (out[q].index < 0 || dist[q * n + r] < out[q].distance) out[q] = {static_cast<int>(r), dist[q * n + r]};
    }
  }
  return out;
}

kruskal_result kruskal(int n, std::vector<edge> edges)
{
  std::sort(edges.begin(), edges.end(), edge_less);
  disjoint_sets sets(n);
  kruskal_result out;
  for (const auto& e : edges) {
    if (sets.join(e.u, e.v)) {
      out.edges.push_back(e);
      out.total += e.w;
    }
  }
  out.n_components = n - static_cast<int>(out.edges.size());
  return out;
}

bool is_acyclic(int n, const std::vector<edge>& edges)
{
  disjoint_sets sets(n);
  for (const auto& e : edges) {
    if (!sets.join(e.u, e.v)) return false;
  }
  return true;
}

std::vector<int> components(int n, const std::vector<edge>& edges)
{
  disjoint_sets sets(n);
  for (const auto& e : edges) sets.join(e.u, e.v);
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) out[v] = sets.find(v);
  return out;
}

double enumerate_min_spanning_weight(int n, const std::vector<edge>& edges)
{
  const int need = n - 1;
  const int m    = static_cast<int>(edges.size());
  if (need < 0 || m < need || m > 24) throw std::invalid_argument("enumerate_min_spanning_weight: size out of range");
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != need) continue;
    std::vector<edge> pick;
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) {
        pick.push_back(edges[i]);
        sum += edges[i].w;
      }
    }
    if (is_acyclic(n, pick)) best = std::min(best, sum);
  }
  return best;
}

std::vector<linkage_row> reference_linkage(int n, std::vector<edge> tree)
{
  std::sort(tree.begin(), tree.end(), edge_less);
  std::vector<int> cluster(n);
  std::iota(cluster.begin(), cluster.end(), 0);
  std::map<int, int> size;
  for (int v = 0; v < n; ++v) size[v] = 1;

  std::vector<linkage_row> rows;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const int ca = cluster[tree[i].u], cb = cluster[tree[i].v];
    if (ca == cb) throw std::invalid_argument("reference_linkage: cycle");
    const int id = n + static_cast<int>(i);
    for (auto& c : cluster) {
      if (c == ca || c == cb) c = id;
    }
    size[id] = size[ca] + size[cb];
    rows.push_back({std::min(ca, cb), std::max(ca, cb), tree[i].w, size[id]});
  }
  return rows;
}

std::vector<int> truncated_components(int n, const std::vector<linkage_row>& rows, int n_clusters)
{
  disjoint_sets sets(2 * n);
  const int keep = n - n_clusters;
  for (int i = 0; i < keep; ++i) {
    sets.join(rows[i].a, n + i);
    sets.join(rows[i].b, n + i);
  }
  std::map<int, int> numbering;
  std::vector<int> out(n);
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = numbering.emplace(sets.find(v), static_cast<int>(numbering.size()));
    out[v] = it->second;
  }
  return out;
}

kruskal_result full_graph_mst(const std::vector<float>& data, std::size_t n, std::size_t d)
{
  std::vector<edge> all;
  all.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      all.push_back({static_cast<int>(i), static_cast<int>(j), direct_sq_distance(&data[i * d], &data[j * d], d)});
    }
  }
  return kruskal(static_cast<int>(n), std::move(all));
}

std::vector<int> naive_single_linkage(const std::vector<float>& data, std::size_t n, std::size_t d, int n_clusters)
{
  auto tree = full_graph_mst(data, n, d);
  // Kruskal accepts edges in ascending order; the heaviest n_clusters - 1 come last.
  tree.edges.resize(tree.edges.size() - static_cast<std::size_t>(n_clusters - 1));
  return components(static_cast<int>(n), tree.edges);
}

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b)
{
  if (a.size() != b.size()) throw std::invalid_argument("adjusted_rand_index: size mismatch");
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> rows, cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1;
    rows[a[i]] += 1;
    cols[b[i]] += 1;
  }
  double index = 0, sum_rows = 0, sum_cols = 0;
  for (const auto& [key, c] : joint) index += choose2(c);
  for (const auto& [key, c] : rows) sum_rows += choose2(c);
  for (const auto& [key, c] : cols) sum_cols += choose2(c);
  const double total    = choose2(static_cast<double>(a.size()));
  const double expected = total > 0 ? sum_rows * sum_cols / total : 0.0;
  const double maximum  = 0.5 * (sum_rows + sum_cols);
  if (maximum == expected) return joint.size() == rows.size() && joint.size() == cols.size() ? 1.0 : 0.0;
  return (index - expected) / (maximum - expected);
}

}  // namespace slink_oracle
