/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/mst.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <tuple>

namespace slink {

namespace {

constexpr double two_pow_m20 = 1.0 / 1048576.0;

std::uint64_t splitmix64(std::uint64_t z)
{
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/** Uniform in [0, 1), a pure function of (lo, hi, seed). */
double unit_hash(vertex_id lo, vertex_id hi, std::uint64_t seed)
{
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(lo)) << 32) |
                      static_cast<std::uint32_t>(hi);
  return static_cast<double>(splitmix64(splitmix64(seed) ^ key) >> 11) * 0x1.0p-53;
}

/** Smallest positive gap between distinct weights; a scale-relative fallback when there is none. */
double min_weight_gap(std::vector<double> w)
{
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  if (w.size() < 2) {
    double base = w.empty() ? 1.0 : std::max(std::abs(w.front()), 1.0);
    return base * two_pow_m20;
  }
  double gap = w[1] - w[0];
  for (std::size_t i = 2; i < w.size(); ++i) gap = std::min(gap, w[i] - w[i - 1]);
  return gap;
}

}  // namespace

bool altered_less(const altered_graph& g, edge_offset a, edge_offset b)
{
  auto key = [&](edge_offset e) {
    // Row of entry e: last offset <= e.
    auto it = std::upper_bound(g.graph.row_offsets.begin(), g.graph.row_offsets.end(), e);
    auto row = static_cast<vertex_id>(it - g.graph.row_offsets.begin() - 1);
    auto [lo, hi] = canonical_edge_key(row, g.graph.col_indices[e]);
    return std::make_tuple(g.graph.weights[e], g.original_weights[e], lo, hi);
  };
  return key(a) < key(b);
}

altered_graph weight_alteration(const csr_graph& g, std::uint64_t seed, bool allow_zero_weights)
{
  SLINK_EXPECTS(g.is_symmetric(), invalid_argument, "weight_alteration: graph is malformed or not symmetric");
  const auto n_entries = g.n_entries();

  std::vector<edge_offset> upper;
  std::vector<double> upper_weights;
  for (vertex_id v = 0; v < g.n_vertices; ++v) {
    for (auto e = g.row_offsets[v]; e < g.row_offsets[v + 1]; ++e) {
      const double w = g.weights[e];
      SLINK_EXPECTS(std::isfinite(w), invalid_argument, "weight_alteration: non-finite weight at entry " + std::to_string(e));
      SLINK_EXPECTS(allow_zero_weights || w != 0.0,
                    invalid_argument,
                    "weight_alteration: zero-weight edge (" + std::to_string(v) + ", " +
                      std::to_string(g.col_indices[e]) + ") is not supported");
      if (g.col_indices[e] > v) {
        upper.push_back(e);
        upper_weights.push_back(w);
      }
    }
  }

  altered_graph out;
  out.graph            = g;
  out.original_weights = g.weights;
  out.seed             = seed;
  out.theta            = min_weight_gap(std::move(upper_weights));
  out.rank.assign(static_cast<std::size_t>(n_entries), no_rank);

  // epsilon in [0, theta * (1 - 2^-20)). Both directions hash the same
  // canonical key, which replicates the upper triangle into the lower one.
  const double scale = out.theta * (1.0 - two_pow_m20);
  std::vector<std::pair<vertex_id, vertex_id>> keys(static_cast<std::size_t>(n_entries));
  for (vertex_id v = 0; v < g.n_vertices; ++v) {
    for (auto e = g.row_offsets[v]; e < g.row_offsets[v + 1]; ++e) {
      keys[e] = canonical_edge_key(v, g.col_indices[e]);
      out.graph.weights[e] = g.weights[e] + unit_hash(keys[e].first, keys[e].second, seed) * scale;
    }
  }

  // Original order is kept even when two altered values round together,
  // and the canonical key separates equal originals whose epsilons collide.
  std::sort(upper.begin(), upper.end(), [&](edge_offset a, edge_offset b) {
    return std::tie(out.graph.weights[a], out.original_weights[a], keys[a]) <
           std::tie(out.graph.weights[b], out.original_weights[b], keys[b]);
  });
  for (std::size_t r = 0; r < upper.size(); ++r) out.rank[upper[r]] = r;
  for (vertex_id v = 0; v < g.n_vertices; ++v) {
    for (auto e = g.row_offsets[v]; e < g.row_offsets[v + 1]; ++e) {
      const vertex_id u = g.col_indices[e];
      if (u < v) {
        auto mirror = g.find(u, v);
        SLINK_EXPECTS(mirror >= 0, invalid_argument, "weight_alteration: graph is not symmetric");
        out.rank[e] = out.rank[mirror];
      }
    }
  }
  return out;
}

}  // namespace slink
