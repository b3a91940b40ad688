/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/slink.h>

#include <slink_oracle/generators.hpp>
#include <slink_oracle/oracle.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

namespace {

class CApi : public ::testing::Test {
 protected:
  void SetUp() override { ASSERT_EQ(slink_context_create(&ctx_), SLINK_OK); }
  void TearDown() override { slink_context_destroy(ctx_); }
  slink_context* ctx_ = nullptr;
};

}  // namespace

TEST(CApiBasics, VersionAndStatusStrings)
{
  EXPECT_STREQ(slink_version(), "1.0.0");
  EXPECT_STRNE(slink_status_string(SLINK_ERR_PARSE), slink_status_string(SLINK_OK));
  EXPECT_EQ(slink_context_create(nullptr), SLINK_ERR_INVALID_ARGUMENT);
}

TEST_F(CApi, ThreadsAndTiles)
{
  EXPECT_EQ(slink_context_set_threads(ctx_, 3), SLINK_OK);
  EXPECT_EQ(slink_context_threads(ctx_), 3);
  EXPECT_EQ(slink_context_set_threads(ctx_, -1), SLINK_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(slink_context_set_tile(ctx_, 0, 4), SLINK_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(slink_context_last_error(ctx_), "");
  EXPECT_EQ(slink_context_set_tile(ctx_, 7, 7), SLINK_OK);
}

TEST_F(CApi, SingleLinkageMatchesOracle)
{
  auto data = slink_oracle::gaussian_blobs(300, 4, 4, 10.0, 1.0, 5);
  slink_matrix* x = nullptr;
  ASSERT_EQ(slink_matrix_create(ctx_, 300, 4, data.data(), &x), SLINK_OK);
  slink_linkage_params p;
  slink_linkage_params_init(&p);
  EXPECT_EQ(p.k, 15);
  p.n_clusters = 4;
  slink_linkage_result* r = nullptr;
  ASSERT_EQ(slink_single_linkage(ctx_, x, &p, &r), SLINK_OK);
  EXPECT_EQ(slink_linkage_points(r), 300u);
  std::vector<int> labels(slink_linkage_labels(r), slink_linkage_labels(r) + 300);
  EXPECT_EQ(slink_oracle::adjusted_rand_index(labels, slink_oracle::naive_single_linkage(data, 300, 4, 4)), 1.0);
  const int32_t* children = slink_linkage_children(r);
  for (int i = 0; i < 299; ++i) {
    EXPECT_LT(children[2 * i], 300 + i);
    EXPECT_LT(children[2 * i + 1], 300 + i);
  }
  EXPECT_EQ(slink_linkage_sizes(r)[298], 300);
  EXPECT_GE(slink_linkage_stage_ms(r, SLINK_STAGE_KNN), 0.0);
  slink_linkage_destroy(r);
  slink_matrix_destroy(x);
}

TEST_F(CApi, ErrorsMapToStatusCodes)
{
  float pts[] = {0, 1, 2};
  slink_matrix* x = nullptr;
  ASSERT_EQ(slink_matrix_create(ctx_, 3, 1, pts, &x), SLINK_OK);
  slink_linkage_params p;
  slink_linkage_params_init(&p);
  slink_linkage_result* r = nullptr;
  EXPECT_EQ(slink_single_linkage(ctx_, x, &p, &r), SLINK_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(r, nullptr);
  EXPECT_NE(std::string(slink_context_last_error(ctx_)).find("k"), std::string::npos);
  EXPECT_EQ(slink_single_linkage(ctx_, nullptr, &p, &r), SLINK_ERR_INVALID_ARGUMENT);
  slink_matrix_destroy(x);

  float bad[] = {0, NAN};
  EXPECT_EQ(slink_matrix_create(ctx_, 2, 1, bad, &x), SLINK_ERR_PARSE);
  EXPECT_EQ(slink_matrix_read(ctx_, "/nonexistent/points.csv", &x), SLINK_ERR_IO);
}

TEST_F(CApi, MstTriangleAndZeroWeight)
{
  int32_t src[] = {0, 1, 0}, dst[] = {1, 2, 2};
  double w[]    = {1, 2, 3};
  slink_graph* g = nullptr;
  ASSERT_EQ(slink_graph_create(ctx_, 3, 3, src, dst, w, &g), SLINK_OK);
  slink_mst_result* r = nullptr;
  ASSERT_EQ(slink_mst(ctx_, g, 0, 0, &r), SLINK_OK);
  EXPECT_EQ(slink_mst_edges(r), 2u);
  EXPECT_EQ(slink_mst_total_weight(r), 3.0);
  EXPECT_EQ(slink_mst_components(r), 1);
  slink_mst_destroy(r);
  ASSERT_EQ(slink_mst(ctx_, g, 1, 0, &r), SLINK_OK);
  EXPECT_EQ(slink_mst_total_weight(r), 5.0);
  slink_mst_destroy(r);
  slink_graph_destroy(g);

  double zero[] = {1, 0, 3};
  ASSERT_EQ(slink_graph_create(ctx_, 3, 3, src, dst, zero, &g), SLINK_OK);
  EXPECT_EQ(slink_mst(ctx_, g, 0, 0, &r), SLINK_ERR_INVALID_ARGUMENT);
  slink_graph_destroy(g);

  int32_t loop[] = {1};
  EXPECT_EQ(slink_graph_create(ctx_, 3, 1, loop, loop, w, &g), SLINK_ERR_PARSE);
}

TEST_F(CApi, KnnAndCrossColor)
{
  float pts[] = {0, 1, 3};
  slink_matrix* x = nullptr;
  ASSERT_EQ(slink_matrix_create(ctx_, 3, 1, pts, &x), SLINK_OK);
  slink_knn_result* k = nullptr;
  ASSERT_EQ(slink_knn(ctx_, x, 1, SLINK_METRIC_EUCLIDEAN, &k), SLINK_OK);
  EXPECT_EQ(slink_knn_k(k), 1);
  EXPECT_EQ(slink_knn_indices(k)[2], 1);
  EXPECT_EQ(slink_knn_distances(k)[2], 2.0);
  slink_knn_destroy(k);
  EXPECT_EQ(slink_knn(ctx_, x, 3, SLINK_METRIC_EUCLIDEAN, &k), SLINK_ERR_INVALID_ARGUMENT);

  int32_t colors[] = {0, 0, 2};
  slink_graph* g   = nullptr;
  ASSERT_EQ(slink_cross_color_1nn(ctx_, x, colors, SLINK_METRIC_SQEUCLIDEAN, &g), SLINK_OK);
  EXPECT_EQ(slink_graph_edges(g), 3u);
  EXPECT_EQ(slink_graph_dst(g)[2], 1);
  EXPECT_EQ(slink_graph_weights(g)[2], 4.0);
  slink_graph_destroy(g);
  int32_t one[] = {0, 0, 0};
  EXPECT_EQ(slink_cross_color_1nn(ctx_, x, one, SLINK_METRIC_SQEUCLIDEAN, &g), SLINK_ERR_INVALID_ARGUMENT);
  slink_matrix_destroy(x);
}

TEST_F(CApi, MatrixFilesRoundTrip)
{
  auto dir = std::filesystem::temp_directory_path() / "slink_capi";
  std::filesystem::create_directories(dir);
  float pts[] = {0.25f, 1, 3, -4};
  slink_matrix* x = nullptr;
  ASSERT_EQ(slink_matrix_create(ctx_, 2, 2, pts, &x), SLINK_OK);
  auto bin = (dir / "m.bin").string(), csv = (dir / "m.csv").string();
  ASSERT_EQ(slink_matrix_write_binary(ctx_, x, bin.c_str()), SLINK_OK);
  ASSERT_EQ(slink_matrix_write_csv(ctx_, x, csv.c_str()), SLINK_OK);
  for (const auto& p : {bin, csv}) {
    slink_matrix* y = nullptr;
    ASSERT_EQ(slink_matrix_read(ctx_, p.c_str(), &y), SLINK_OK);
    EXPECT_EQ(slink_matrix_rows(y), 2u);
    EXPECT_EQ(std::memcmp(slink_matrix_data(y), pts, sizeof pts), 0);
    slink_matrix_destroy(y);
  }
  slink_matrix_destroy(x);
  std::filesystem::remove_all(dir);
}

TEST(CApiBasics, DestroyAcceptsNull)
{
  slink_context_destroy(nullptr);
  slink_matrix_destroy(nullptr);
  slink_graph_destroy(nullptr);
  slink_knn_destroy(nullptr);
  slink_mst_destroy(nullptr);
  slink_linkage_destroy(nullptr);
}
