/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "fixtures.hpp"

#include <slink/error.hpp>
#include <slink/resources.hpp>

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace slink;
using slink_test::edge_keys;
using slink_test::to_edge_list;
using slink_test::to_points;

namespace {

const resources res{};

std::vector<slink_oracle::edge> random_tree(int n, std::mt19937_64& rng, bool ties)
{
  std::vector<slink_oracle::edge> out;
  std::uniform_real_distribution<double> w(0.1, 10.0);
  std::uniform_int_distribution<int> small(1, 3);
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    out.push_back({v, parent, ties ? static_cast<double>(small(rng)) : w(rng)});
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

void expect_rows_equal(const dendrogram& got, const std::vector<slink_oracle::linkage_row>& want)
{
  ASSERT_EQ(got.merges.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    const auto& m = got.merges[i];
    EXPECT_EQ(std::min(m.child_a, m.child_b), want[i].a) << "row " << i;
    EXPECT_EQ(std::max(m.child_a, m.child_b), want[i].b) << "row " << i;
    EXPECT_EQ(m.distance, want[i].distance) << "row " << i;
    EXPECT_EQ(m.size, want[i].size) << "row " << i;
  }
}

/** Tight triples at 0, 1, 11, 12, 22, 23: the 2-NN graph has six components. */
std::vector<float> paired_triples()
{
  std::vector<float> out;
  for (float base : {0.f, 1.f, 11.f, 12.f, 22.f, 23.f}) {
    for (float off : {0.f, 0.01f, 0.02f}) out.push_back(base + off);
  }
  return out;
}

}  // namespace

TEST(BuildDendrogram, SingleMerge)
{
  auto d = build_dendrogram({2, {{0, 1, 0.5}}}, 2);
  ASSERT_EQ(d.merges.size(), 1u);
  EXPECT_EQ(d.merges[0], (merge_row{0, 1, 0.5, 2}));
}

TEST(BuildDendrogram, ParentIdsFollowMergeIndex)
{
  auto d = build_dendrogram({5, {{0, 1, 1.0}, {1, 2, 2.0}, {3, 4, 3.0}, {2, 3, 4.0}}}, 5);
  EXPECT_EQ(d.merges[0], (merge_row{0, 1, 1.0, 2}));
  EXPECT_EQ(d.merges[1], (merge_row{2, 5, 2.0, 3}));
  EXPECT_EQ(d.merges[2], (merge_row{3, 4, 3.0, 2}));
  EXPECT_EQ(d.merges[3], (merge_row{6, 7, 4.0, 5}));
}

TEST(BuildDendrogram, MatchesReferenceConstruction)
{
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 499);
    auto tree   = random_tree(n, rng, trial % 2 == 1);
    auto d      = build_dendrogram(slink_test::to_edge_list(n, tree), n);
    expect_rows_equal(d, slink_oracle::reference_linkage(n, tree));
    for (std::size_t i = 1; i < d.merges.size(); ++i) EXPECT_LE(d.merges[i - 1].distance, d.merges[i].distance);
    EXPECT_EQ(d.merges.back().size, n);
  }
}

TEST(BuildDendrogram, RejectsBadTrees)
{
  EXPECT_THROW(build_dendrogram({3, {{0, 1, 1.0}}}, 3), invalid_argument);
  EXPECT_THROW(build_dendrogram({3, {{0, 1, 1.0}, {1, 0, 2.0}}}, 3), invalid_argument);
}

TEST(CutLevel, Formula)
{
  EXPECT_EQ(compute_cut_level(6, 3), 3);
  EXPECT_EQ(compute_cut_level(10, 1), 9);
  EXPECT_EQ(compute_cut_level(10, 10), 0);
  EXPECT_THROW(compute_cut_level(10, 0), invalid_argument);
  EXPECT_THROW(compute_cut_level(10, 11), invalid_argument);
}

TEST(ExtractClusters, SingleRoot)
{
  auto d      = build_dendrogram({4, {{0, 1, 1.0}, {2, 3, 1.0}, {1, 2, 5.0}}}, 4);
  auto labels = extract_clusters(res, d, 1);
  EXPECT_EQ(labels, (std::vector<vertex_id>{0, 0, 0, 0}));
}

TEST(ExtractClusters, TwoPairs)
{
  auto d      = build_dendrogram({4, {{0, 1, 1.0}, {2, 3, 1.0}, {1, 2, 5.0}}}, 4);
  auto labels = extract_clusters(res, d, 2);
  EXPECT_EQ(labels[0], labels[1]);
  EXPECT_EQ(labels[2], labels[3]);
  EXPECT_NE(labels[0], labels[2]);
}

TEST(ExtractClusters, EveryPointItsOwnCluster)
{
  auto d      = build_dendrogram({4, {{0, 1, 1.0}, {2, 3, 1.0}, {1, 2, 5.0}}}, 4);
  auto labels = extract_clusters(res, d, 4);
  EXPECT_EQ(std::set<vertex_id>(labels.begin(), labels.end()).size(), 4u);
}

TEST(ExtractClusters, MatchesTruncatedMergeComponents)
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 300);
    auto tree   = random_tree(n, rng, trial % 3 == 0);
    auto d      = build_dendrogram(slink_test::to_edge_list(n, tree), n);
    auto rows   = slink_oracle::reference_linkage(n, tree);
    for (int c : {1, 2, 3, n / 2 + 1, n}) {
      if (c > n) continue;
      auto got  = extract_clusters(resources{1 + trial % 3}, d, c);
      auto want = slink_oracle::truncated_components(n, rows, c);
      EXPECT_EQ(slink_oracle::adjusted_rand_index(std::vector<int>(got.begin(), got.end()), want), 1.0);
      EXPECT_EQ(std::set<vertex_id>(got.begin(), got.end()).size(), static_cast<std::size_t>(c));
      EXPECT_EQ(*std::max_element(got.begin(), got.end()), c - 1);
    }
  }
}

TEST(SingleLinkage, TwoPairsOnALine)
{
  point_matrix x(4, 1, {0.0f, 0.1f, 10.0f, 10.1f});
  linkage_config cfg;
  cfg.k      = 1;
  auto r     = single_linkage(res, x, cfg);
  EXPECT_EQ(r.labels[0], r.labels[1]);
  EXPECT_EQ(r.labels[2], r.labels[3]);
  EXPECT_NE(r.labels[0], r.labels[2]);
  EXPECT_EQ(r.tree.merges.size(), 3u);
}

TEST(SingleLinkage, ClusterPerPointKeepsTree)
{
  auto data = slink_oracle::gaussian_blobs(30, 2, 3, 5.0, 1.0, 2);
  linkage_config cfg;
  cfg.k      = 5;
  cfg.n_clusters = 3;
  auto three = single_linkage(res, to_points(data, 2), cfg);
  cfg.n_clusters = 30;
  auto all   = single_linkage(res, to_points(data, 2), cfg);
  EXPECT_EQ(all.tree.merges, three.tree.merges);
  EXPECT_EQ(std::set<vertex_id>(all.labels.begin(), all.labels.end()).size(), 30u);
}

TEST(SingleLinkage, MatchesNaiveOracle)
{
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 100 + seed * 97 % 900, d = std::size_t{2} << (seed % 4);
    const int clusters  = 2 + static_cast<int>(seed % 6);
    auto data = slink_oracle::gaussian_blobs(n, d, static_cast<std::size_t>(clusters) + 2, 10.0, 1.0, seed);
    linkage_config cfg;
    cfg.n_clusters = clusters;
    cfg.k          = 5 + seed % 20;
    cfg.seed       = seed;
    auto r         = single_linkage(res, to_points(data, d), cfg);
    auto want      = slink_oracle::naive_single_linkage(data, n, d, clusters);
    EXPECT_EQ(slink_oracle::adjusted_rand_index(std::vector<int>(r.labels.begin(), r.labels.end()), want), 1.0)
      << "seed " << seed;
  }
}

TEST(SingleLinkage, EuclideanOnlyChangesDistances)
{
  auto data = slink_oracle::gaussian_blobs(200, 3, 4, 6.0, 1.0, 8);
  linkage_config cfg;
  cfg.n_clusters = 4;
  auto sq        = single_linkage(res, to_points(data, 3), cfg);
  cfg.metric     = distance_metric::euclidean;
  auto eu        = single_linkage(res, to_points(data, 3), cfg);
  EXPECT_EQ(sq.labels, eu.labels);
  ASSERT_EQ(sq.tree.merges.size(), eu.tree.merges.size());
  for (std::size_t i = 0; i < sq.tree.merges.size(); ++i) {
    EXPECT_EQ(sq.tree.merges[i].child_a, eu.tree.merges[i].child_a);
    EXPECT_EQ(sq.tree.merges[i].child_b, eu.tree.merges[i].child_b);
    EXPECT_DOUBLE_EQ(std::sqrt(sq.tree.merges[i].distance), eu.tree.merges[i].distance);
  }
}

TEST(SingleLinkage, DuplicatePoints)
{
  point_matrix x(6, 1, {1, 1, 1, 5, 5, 5});
  linkage_config cfg;
  cfg.k  = 2;
  auto r = single_linkage(res, x, cfg);
  EXPECT_EQ(r.labels, (std::vector<vertex_id>{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(r.tree.merges[0].distance, 0.0);
}

TEST(SingleLinkage, ConfigErrors)
{
  point_matrix x(4, 1, {0, 1, 2, 3});
  linkage_config cfg;
  cfg.k = 4;
  EXPECT_THROW(single_linkage(res, x, cfg), invalid_argument);
  cfg.k          = 2;
  cfg.n_clusters = 5;
  EXPECT_THROW(single_linkage(res, x, cfg), invalid_argument);
  cfg.n_clusters = 0;
  EXPECT_THROW(single_linkage(res, x, cfg), invalid_argument);
  EXPECT_THROW(single_linkage(res, point_matrix(1, 1, {0}), linkage_config{}), invalid_argument);
  auto big = slink_oracle::uniform_points(100, 2, 1);
  cfg      = {};
  cfg.k    = 65;
  EXPECT_THROW(single_linkage(res, to_points(big, 2), cfg), invalid_argument);
  cfg.allow_large_k = true;
  EXPECT_NO_THROW(single_linkage(res, to_points(big, 2), cfg));
}

TEST(ConnectGraph, AlreadyConnectedIsUnchanged)
{
  auto data   = slink_oracle::gaussian_blobs(50, 2, 1, 1.0, 1.0, 4);
  auto x      = to_points(data, 2);
  auto knn    = fused_knn(res, x, 10);
  auto forest = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), {false, 0, true, knn.completeness_radius()});
  ASSERT_EQ(forest.n_components, 1);
  auto r = connect_graph(res, x, forest, linkage_config{}, &knn);
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.mst.edges.edges, forest.edges.edges);
}

TEST(ConnectGraph, TwoClustersWithOneNeighbor)
{
  auto data = slink_oracle::separated_clusters(2, 10, 3, 5);
  auto x    = to_points(data, 3);
  auto knn  = fused_knn(res, x, 1);
  auto forest = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), {false, 0, true, knn.completeness_radius()});
  ASSERT_GE(forest.n_components, 2);
  auto r = connect_graph(res, x, forest, linkage_config{}, &knn);
  EXPECT_EQ(r.mst.n_components, 1);
  EXPECT_EQ(r.mst.edges.edges.size(), 19u);
  EXPECT_EQ(count_colors(r.mst.colors), 1u);
  auto want = slink_oracle::full_graph_mst(data, 20, 3);
  EXPECT_NEAR(r.mst.total_weight(), want.total, 1e-9 * want.total);
}

TEST(ConnectGraph, FourComponentsMatchFullGraphTree)
{
  auto data = slink_oracle::separated_clusters(4, 6, 2, 9);
  auto x    = to_points(data, 2);
  auto knn    = fused_knn(res, x, 2);
  auto forest = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), {false, 0, true, knn.completeness_radius()});
  ASSERT_GE(forest.n_components, 4);
  auto r    = connect_graph(res, x, forest, linkage_config{}, &knn);
  auto want = slink_oracle::full_graph_mst(data, 24, 2);
  EXPECT_EQ(r.mst.edges.edges.size(), 23u);
  EXPECT_NEAR(r.mst.total_weight(), want.total, 1e-9 * want.total);
}

TEST(ConnectGraph, WithoutNeighborCacheMatchesCached)
{
  auto data   = slink_oracle::gaussian_blobs(400, 3, 6, 10.0, 1.0, 21);
  auto x      = to_points(data, 3);
  auto knn    = fused_knn(res, x, 4);
  auto forest = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), {false, 0, true, knn.completeness_radius()});
  ASSERT_GE(forest.n_components, 2);
  auto cached = connect_graph(res, x, forest, linkage_config{}, &knn);
  auto plain  = connect_graph(res, x, forest, linkage_config{});
  EXPECT_EQ(edge_keys(cached.mst.edges), edge_keys(plain.mst.edges));
  EXPECT_EQ(cached.iterations, plain.iterations);
}

TEST(SingleLinkage, NeighborGraphForestAloneIsNotEnough)
{
  // Seeded blobs where the lightest-spanning forest of the 10-NN graph holds
  // an edge the full-graph tree does not, so the radius bound is required.
  auto data = slink_oracle::gaussian_blobs(585, 4, 9, 10.0, 1.0, 5);
  auto x    = to_points(data, 4);
  auto knn  = fused_knn(res, x, 10);
  auto full = slink_oracle::full_graph_mst(data, 585, 4);
  const auto keys      = edge_keys(to_edge_list(585, full.edges));
  const std::set<std::pair<int, int>> full_keys(keys.begin(), keys.end());

  auto plain = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), {false, 5, true});
  std::size_t outside = 0;
  for (const auto& k : edge_keys(plain.edges)) outside += full_keys.count(k) == 0 ? 1 : 0;
  EXPECT_GT(outside, 0u);

  auto bounded = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), {false, 5, true, knn.completeness_radius()});
  for (const auto& k : edge_keys(bounded.edges)) EXPECT_EQ(full_keys.count(k), 1u);
  auto joined = connect_graph(res, x, bounded, linkage_config{}, &knn);
  EXPECT_NEAR(joined.mst.total_weight(), full.total, 1e-9 * full.total);
}

TEST(ConnectGraph, IterationCapRaisesNotConverged)
{
  auto data   = paired_triples();
  auto x      = to_points(data, 1);
  auto knn    = fused_knn(res, x, 2);
  auto forest = solve_mst(res, edge_list_to_csr(knn.to_edge_list()), {false, 0, true, knn.completeness_radius()});
  ASSERT_EQ(forest.n_components, 6);
  linkage_config cfg;
  cfg.max_connect_iters = 1;
  EXPECT_THROW(connect_graph(res, x, forest, cfg, &knn), not_converged);
  cfg.max_connect_iters = 2;
  auto r = connect_graph(res, x, forest, cfg, &knn);
  EXPECT_EQ(r.iterations, 2);
  EXPECT_EQ(r.mst.n_components, 1);
}

TEST(ConnectGraph, DefaultCapGrowsWithN)
{
  linkage_config cfg;
  EXPECT_EQ(cfg.connect_iteration_cap(2), 9);
  EXPECT_EQ(cfg.connect_iteration_cap(1024), 18);
  EXPECT_EQ(cfg.connect_iteration_cap(1025), 19);
  cfg.max_connect_iters = 3;
  EXPECT_EQ(cfg.connect_iteration_cap(1 << 20), 3);
}

TEST(SingleLinkage, DeterministicAcrossThreadsAndTiles)
{
  auto data = slink_oracle::gaussian_blobs(400, 5, 6, 8.0, 1.0, 21);
  auto x    = to_points(data, 5);
  linkage_config cfg;
  cfg.n_clusters = 6;
  cfg.k          = 7;
  cfg.seed       = 99;
  auto base      = single_linkage(resources{1}, x, cfg);
  for (int t : {2, 8}) {
    for (tile_spec tile : {tile_spec{7, 7}, tile_spec{256, 256}}) {
      cfg.tile = tile;
      auto r   = single_linkage(resources{t}, x, cfg);
      EXPECT_EQ(r.tree.merges, base.tree.merges);
      EXPECT_EQ(r.labels, base.labels);
    }
  }
}
