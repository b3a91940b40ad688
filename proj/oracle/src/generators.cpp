/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink_oracle/generators.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace slink_oracle {

namespace {

double draw_weight(weight_mode mode, std::mt19937_64& rng)
{
  switch (mode) {
    case weight_mode::continuous: return std::uniform_real_distribution<double>(0.5, 100.0)(rng);
    case weight_mode::heavy_ties: return static_cast<double>(std::uniform_int_distribution<int>(1, 5)(rng));
    case weight_mode::all_equal: return 1.0;
  }
  return 1.0;
}

/** Spanning tree plus extras over the given vertex ids. */
void connect_group(const std::vector<int>& ids,
                   std::size_t extra,
                   weight_mode mode,
                   std::mt19937_64& rng,
                   std::vector<edge>& out)
{
  const std::size_t n = ids.size();
  std::set<std::pair<int, int>> present;
  auto add = [&](int a, int b) {
    auto key = std::minmax(a, b);
    if (a == b || !present.insert(key).second) return false;
    out.push_back({a, b, draw_weight(mode, rng)});
    return true;
  };
  for (std::size_t i = 1; i < n; ++i) {
    add(ids[i], ids[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)]);
  }
  const std::size_t max_pairs = n * (n - 1) / 2;
  extra = std::min(extra, max_pairs - (n - 1 > 0 ? n - 1 : 0));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t added = 0; added < extra;) {
    if (add(ids[pick(rng)], ids[pick(rng)])) ++added;
  }
}

}  // namespace

std::vector<float> gaussian_blobs(std::size_t n,
                                  std::size_t d,
                                  std::size_t n_centers,
                                  double box,
                                  double stddev,
                                  std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> center_dist(-box, box);
  std::normal_distribution<double> noise(0.0, stddev);
  std::vector<double> centers(n_centers * d);
  for (auto& c : centers) c = center_dist(rng);
  std::uniform_int_distribution<std::size_t> which(0, n_centers - 1);
  std::vector<float> out(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = which(rng);
    for (std::size_t t = 0; t < d; ++t) out[i * d + t] = static_cast<float>(centers[c * d + t] + noise(rng));
  }
  return out;
}

std::vector<float> uniform_points(std::size_t n, std::size_t d, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> out(n * d);
  for (auto& v : out) v = u(rng);
  return out;
}

std::vector<edge> random_connected_graph(int n_vertices, std::size_t n_edges, weight_mode mode, std::uint64_t seed)
{
  const auto n = static_cast<std::size_t>(n_vertices);
  if (n < 1 || n_edges + 1 < n || n_edges > n * (n - 1) / 2) {
    throw std::invalid_argument("random_connected_graph: edge count incompatible with vertex count");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<edge> out;
  connect_group(ids, n_edges - (n - 1), mode, rng, out);
  return out;
}

std::vector<edge> random_forest_graph(int n_vertices,
                                      int n_components,
                                      std::size_t extra_edges_per_component,
                                      weight_mode mode,
                                      std::uint64_t seed)
{
  if (n_components < 1 || n_components > n_vertices) throw std::invalid_argument("random_forest_graph: bad component count");
  std::mt19937_64 rng(seed);
  std::vector<int> ids(n_vertices);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<edge> out;
  std::size_t begin = 0;
  for (int c = 0; c < n_components; ++c) {
    const std::size_t size = static_cast<std::size_t>(n_vertices / n_components + (c < n_vertices % n_components ? 1 : 0));
    std::vector<int> group(ids.begin() + static_cast<std::ptrdiff_t>(begin),
                           ids.begin() + static_cast<std::ptrdiff_t>(begin + size));
    connect_group(group, extra_edges_per_component, mode, rng, out);
    begin += size;
  }
  return out;
}

std::vector<float> separated_clusters(std::size_t n_clusters, std::size_t per_cluster, std::size_t d, std::uint64_t seed)
{
  if (per_cluster < 3) throw std::invalid_argument("separated_clusters: need at least 3 points per cluster");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(0.0, 40.0);
  std::uniform_real_distribution<double> lateral(-20.0, 20.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<float> out;
  out.reserve(n_clusters * per_cluster * d);
  double x = 0.0;
  for (std::size_t c = 0; c < n_clusters; ++c) {
    x += 100.0 + jitter(rng);
    std::vector<double> center(d);
    center[0] = x;
    for (std::size_t t = 1; t < d; ++t) center[t] = lateral(rng);
    for (std::size_t i = 0; i < per_cluster; ++i) {
      for (std::size_t t = 0; t < d; ++t) out.push_back(static_cast<float>(center[t] + noise(rng)));
    }
  }
  return out;
}

}  // namespace slink_oracle
