/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/mst.hpp>

#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace slink {

namespace {

template <typename T>
void atomic_min(T& slot, T value)
{
  std::atomic_ref<T> ref(slot);
  T cur = ref.load(std::memory_order_relaxed);
  while (value < cur && !ref.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

/**
 * Withdraw the choice of every color whose lightest edge is not lighter than
 * the smallest completeness radius among its members: some edge missing from
 * the graph could be lighter.
 */
void withdraw_unproven(const resources& res,
                       const altered_graph& g,
                       vertex_candidates& candidates,
                       const color_array& colors,
                       std::span<const double> radius)
{
  const auto n = g.graph.n_vertices;
  std::vector<double> color_radius(n, std::numeric_limits<double>::infinity());
  std::vector<char> withdraw(n, 0);

#pragma omp parallel for schedule(static) num_threads(res.threads())
  for (vertex_id v = 0; v < n; ++v) atomic_min(color_radius[colors[v]], radius[v]);

#pragma omp parallel for schedule(static) num_threads(res.threads())
  for (vertex_id v = 0; v < n; ++v) {
    const auto e  = candidates.edge[v];
    const auto cv = colors[v];
    // Only the member holding the color's lightest edge gets past this test.
    if (e == no_edge || g.rank[e] != candidates.color_min_rank[cv]) continue;
    if (!(g.original_weights[e] < color_radius[cv])) withdraw[cv] = 1;
  }

#pragma omp parallel for schedule(static) num_threads(res.threads())
  for (vertex_id c = 0; c < n; ++c) {
    if (withdraw[c]) candidates.color_min_rank[c] = no_rank;
  }
}

}  // namespace

double mst_result::total_weight() const
{
  double sum = 0.0;
  for (const auto& e : edges.edges) sum += e.weight;
  return sum;
}

vertex_candidates min_edge_per_vertex(const resources& res, const altered_graph& g, const color_array& colors)
{
  const auto n = g.graph.n_vertices;
  SLINK_EXPECTS(colors.size() == static_cast<std::size_t>(n), invalid_argument, "min_edge_per_vertex: color count mismatch");

  vertex_candidates out;
  out.edge.assign(n, no_edge);
  out.color_min_rank.assign(n, no_rank);

  const auto& offsets = g.graph.row_offsets;
  const auto& cols    = g.graph.col_indices;

#pragma omp parallel for schedule(dynamic, 256) num_threads(res.threads())
  for (vertex_id v = 0; v < n; ++v) {
    const vertex_id cv = colors[v];
    edge_offset best   = no_edge;
    std::uint64_t best_rank = no_rank;
    for (auto e = offsets[v]; e < offsets[v + 1]; ++e) {
      if (colors[cols[e]] != cv && g.rank[e] < best_rank) {
        best      = e;
        best_rank = g.rank[e];
      }
    }
    out.edge[v] = best;
    if (best != no_edge) atomic_min(out.color_min_rank[cv], best_rank);
  }
  return out;
}

edge_list min_edge_per_supervertex(const resources& res,
                                   const altered_graph& g,
                                   const vertex_candidates& candidates,
                                   const color_array& colors)
{
  const auto n = g.graph.n_vertices;
  std::vector<char> accept(n, 0);

#pragma omp parallel for schedule(static) num_threads(res.threads())
  for (vertex_id v = 0; v < n; ++v) {
    const auto e = candidates.edge[v];
    if (e == no_edge) continue;
    const auto r = g.rank[e];
    if (r != candidates.color_min_rank[colors[v]]) continue;
    // When the neighbor's color picked the same edge, the smaller color emits it.
    const vertex_id cu = colors[g.graph.col_indices[e]];
    if (candidates.color_min_rank[cu] == r && cu < colors[v]) continue;
    accept[v] = 1;
  }

  edge_list out;
  out.n_vertices = n;
  for (vertex_id v = 0; v < n; ++v) {
    if (!accept[v]) continue;
    const auto e = candidates.edge[v];
    out.edges.push_back({v, g.graph.col_indices[e], g.original_weights[e]});
  }
  return out;
}

color_array label_propagation(const resources& res, const edge_list& new_edges, color_array colors)
{
  const auto n = static_cast<vertex_id>(colors.size());
  std::vector<vertex_id> next_color(n);
  std::iota(next_color.begin(), next_color.end(), 0);
  const auto n_new = static_cast<std::int64_t>(new_edges.edges.size());
  const int threads = res.threads();

  bool done = false;
  while (!done) {
    // min_pair_colors: each new edge pulls both endpoint colors toward the smaller one.
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < n_new; ++i) {
      const auto& e = new_edges.edges[i];
      const vertex_id cu = colors[e.src], cw = colors[e.dst];
      atomic_min(next_color[cu], cw);
      atomic_min(next_color[cw], cu);
    }

    // Shortcut chains of next_color so long paths of new edges resolve in
    // logarithmically many rounds. Values only decrease and always name a
    // color reachable through new edges.
    bool jumped = true;
    while (jumped) {
      jumped = false;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(|| : jumped)
      for (vertex_id c = 0; c < n; ++c) {
        std::atomic_ref<vertex_id> slot(next_color[c]);
        const vertex_id hop  = slot.load(std::memory_order_relaxed);
        const vertex_id hop2 = std::atomic_ref<vertex_id>(next_color[hop]).load(std::memory_order_relaxed);
        if (hop2 < hop) {
          atomic_min(next_color[c], hop2);
          jumped = true;
        }
      }
    }

    // update_colors
    done = true;
#pragma omp parallel for schedule(static) num_threads(threads) reduction(&& : done)
    for (vertex_id v = 0; v < n; ++v) {
      const vertex_id nc = next_color[colors[v]];
      if (colors[v] > nc) {
        colors[v] = nc;
        done      = false;
      }
    }
  }
  return colors;
}

mst_result solve_mst(const resources& res, const csr_graph& g, const mst_options& opts)
{
  SLINK_EXPECTS(g.n_vertices > 0, invalid_argument, "solve_mst: empty graph");
  for (std::size_t e = 0; e < g.weights.size(); ++e) {
    SLINK_EXPECTS(std::isfinite(g.weights[e]), invalid_argument, "solve_mst: non-finite weight at entry " + std::to_string(e));
  }
  SLINK_EXPECTS(g.is_symmetric(), invalid_argument, "solve_mst: graph is not symmetric");
  const bool bounded = !opts.vertex_radius.empty();
  SLINK_EXPECTS(!bounded || opts.vertex_radius.size() == static_cast<std::size_t>(g.n_vertices),
                invalid_argument,
                "solve_mst: vertex_radius needs one entry per vertex");
  SLINK_EXPECTS(!bounded || !opts.maximize, invalid_argument, "solve_mst: vertex_radius applies to minimization only");

  const altered_graph altered = [&] {
    if (!opts.maximize) return weight_alteration(g, opts.seed, opts.allow_zero_weights);
    csr_graph negated = g;
    for (auto& w : negated.weights) w = -w;
    return weight_alteration(negated, opts.seed, opts.allow_zero_weights);
  }();

  mst_result out;
  out.edges.n_vertices = g.n_vertices;
  out.colors.resize(g.n_vertices);
  std::iota(out.colors.begin(), out.colors.end(), 0);

  while (true) {
    auto candidates = min_edge_per_vertex(res, altered, out.colors);
    if (bounded) withdraw_unproven(res, altered, candidates, out.colors, opts.vertex_radius);
    auto new_edges  = min_edge_per_supervertex(res, altered, candidates, out.colors);
    // Steady state: no color has an edge to another color (or none it may accept).
    if (new_edges.edges.empty()) break;
    ++out.iterations;
    for (const auto& e : new_edges.edges) {
      auto [lo, hi] = canonical_edge_key(e.src, e.dst);
      out.edges.edges.push_back({lo, hi, opts.maximize ? -e.weight : e.weight});
    }
    out.colors = label_propagation(res, new_edges, std::move(out.colors));
  }

  out.n_components = static_cast<vertex_id>(count_colors(out.colors));
  SLINK_EXPECTS(out.edges.edges.size() == static_cast<std::size_t>(g.n_vertices - out.n_components),
                internal_error,
                "solve_mst: forest law violated");
  return out;
}

}  // namespace slink
