/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/linkage.hpp>

#include <chrono>
#include <cmath>
#include <string>
#include <tuple>

namespace slink {

namespace {

class stopwatch {
 public:
  double lap_ms()
  {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

void linkage_config::validate(std::size_t n_points) const
{
  SLINK_EXPECTS(n_points >= 2, invalid_argument, "single_linkage: need at least 2 points");
  SLINK_EXPECTS(n_clusters >= 1 && static_cast<std::size_t>(n_clusters) <= n_points,
                invalid_argument,
                "n_clusters=" + std::to_string(n_clusters) + " outside [1, " + std::to_string(n_points) + "]");
  SLINK_EXPECTS(k >= 1 && k <= n_points - 1,
                invalid_argument,
                "k=" + std::to_string(k) + " outside [1, " + std::to_string(n_points - 1) + "]");
  SLINK_EXPECTS(allow_large_k || k <= 64, invalid_argument, "k=" + std::to_string(k) + " exceeds 64 (allow_large_k not set)");
  SLINK_EXPECTS(max_connect_iters >= 0, invalid_argument, "max_connect_iters must be >= 0");
  tile.validate();
}

int linkage_config::connect_iteration_cap(std::size_t n_points) const
{
  if (max_connect_iters > 0) return max_connect_iters;
  return static_cast<int>(std::ceil(std::log2(static_cast<double>(std::max<std::size_t>(n_points, 2))))) + 8;
}

namespace {

/** Every point's nearest point of another color, ties to the smaller id. */
std::vector<neighbor_pair> nearest_other_color(const resources& res,
                                               const point_matrix& x,
                                               const color_array& colors,
                                               const knn_graph* knn,
                                               tile_spec tile)
{
  const std::size_t n = x.rows();
  std::vector<neighbor_pair> out(n);
  std::vector<char> open(n, 1);

  if (knn != nullptr) {
    // A row is sorted by (distance, id) and holds every point ahead of its
    // last entry, so its first entry of another color is the answer.
#pragma omp parallel for schedule(static) num_threads(res.threads())
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t j = 0; j < knn->k; ++j) {
        const auto p = knn->at(v, j);
        if (colors[p.index] != colors[v]) {
          out[v]  = p;
          open[v] = 0;
          break;
        }
      }
    }
  }

  std::vector<std::size_t> pending;
  for (std::size_t v = 0; v < n; ++v) {
    if (open[v]) pending.push_back(v);
  }
  if (pending.empty()) return out;

  auto found = cross_color_1nn_rows(res, x, colors, pending, tile);
  for (std::size_t q = 0; q < pending.size(); ++q) out[pending[q]] = found[q];
  return out;
}

}  // namespace

connect_result connect_graph(const resources& res,
                             const point_matrix& x,
                             mst_result forest,
                             const linkage_config& cfg,
                             const knn_graph* knn)
{
  const auto n = static_cast<vertex_id>(x.rows());
  SLINK_EXPECTS(forest.colors.size() == x.rows(), invalid_argument, "connect_graph: colors do not match the point count");
  SLINK_EXPECTS(knn == nullptr || knn->n_rows == x.rows(), invalid_argument, "connect_graph: knn rows do not match the point count");
  const int cap = cfg.connect_iteration_cap(x.rows());

  connect_result out;
  std::size_t n_colors = count_colors(forest.colors);
  while (n_colors != 1) {
    if (out.iterations >= cap) {
      throw not_converged("connect_graph: " + std::to_string(n_colors) + " components remain after " +
                          std::to_string(out.iterations) + " reconnection rounds (cap " + std::to_string(cap) + ")");
    }
    const auto& colors = forest.colors;
    auto nearest       = nearest_other_color(res, x, colors, knn, cfg.tile);

    // Lightest bridge per color under (distance, lo, hi).
    auto key = [&](vertex_id v) {
      const vertex_id w = nearest[v].index;
      return std::make_tuple(nearest[v].distance, std::min(v, w), std::max(v, w));
    };
    std::vector<vertex_id> best(n, -1);
    for (vertex_id v = 0; v < n; ++v) {
      auto& b = best[colors[v]];
      if (b < 0 || key(v) < key(b)) b = v;
    }

    edge_list bridges{n, {}};
    for (vertex_id c = 0; c < n; ++c) {
      const vertex_id v = best[c];
      if (v < 0) continue;
      const vertex_id w = nearest[v].index;
      // Both colors chose the same edge: the smaller color emits it.
      const vertex_id other = best[colors[w]];
      if (colors[w] < c && key(other) == key(v)) continue;
      bridges.edges.push_back({v, w, nearest[v].distance});
    }

    for (const auto& e : bridges.edges) {
      auto [lo, hi] = canonical_edge_key(e.src, e.dst);
      forest.edges.edges.push_back({lo, hi, e.weight});
    }
    forest.colors = label_propagation(res, bridges, std::move(forest.colors));
    n_colors      = count_colors(forest.colors);
    ++out.iterations;
  }
  forest.n_components = 1;
  out.mst             = std::move(forest);
  return out;
}

linkage_result single_linkage(const resources& res, const point_matrix& x, const linkage_config& cfg)
{
  cfg.validate(x.rows());
  const auto n = static_cast<vertex_id>(x.rows());

  linkage_result out;
  stopwatch clock;

  // All stages run on squared distances; sqrt is monotone, so the tree is the same.
  auto knn = fused_knn(res, x, cfg.k, cfg.tile, distance_metric::sqeuclidean);
  out.timings.knn_ms = clock.lap_ms();

  // Duplicate points legitimately produce zero distances. The radii keep the
  // forest inside the full-graph tree; whatever they hold back is joined below.
  const auto radius = knn.completeness_radius();
  auto forest = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), mst_options{false, cfg.seed, true, radius});
  out.initial_components = forest.n_components;
  out.timings.mst_ms = clock.lap_ms();

  if (forest.n_components > 1) {
    auto connected = connect_graph(res, x, std::move(forest), cfg, &knn);
    forest = std::move(connected.mst);
    out.connect_iterations = connected.iterations;
  }
  out.timings.connect_ms = clock.lap_ms();

  out.tree = build_dendrogram(forest.edges, n);
  if (cfg.metric == distance_metric::euclidean) {
    for (auto& m : out.tree.merges) m.distance = std::sqrt(m.distance);
  }
  out.timings.dendrogram_ms = clock.lap_ms();

  out.labels = extract_clusters(res, out.tree, cfg.n_clusters);
  out.timings.extract_ms = clock.lap_ms();
  return out;
}

}  // namespace slink
