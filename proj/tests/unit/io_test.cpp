/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "fixtures.hpp"

#include <slink/error.hpp>
#include <slink/io.hpp>
#include <slink/resources.hpp>

#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace slink;
namespace fs = std::filesystem;

namespace {

class IoTest : public ::testing::Test {
 protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("slink_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content)
  {
    auto p = (dir_ / name).string();
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p)
  {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

std::string expect_ingestion_error(const std::function<void()>& f)
{
  try {
    f();
  } catch (const ingestion_error& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected ingestion_error";
  return {};
}

}  // namespace

TEST_F(IoTest, CsvRoundTrip)
{
  auto data = slink_oracle::uniform_points(20, 3, 4);
  point_matrix m(20, 3, data);
  io::write_matrix_csv(path("m.csv"), m);
  auto back = io::read_matrix_csv(path("m.csv"));
  EXPECT_EQ(back.rows(), 20u);
  EXPECT_EQ(back.cols(), 3u);
  EXPECT_TRUE(std::equal(back.data().begin(), back.data().end(), data.begin()));
}

TEST_F(IoTest, CsvAcceptsWhitespaceAndCrlf)
{
  auto m = io::read_matrix_csv(write("a.csv", "1, 2.5\r\n-3e2,4\n\n"));
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.row(1)[0], -300.0f);
}

TEST_F(IoTest, CsvErrorsCarryPosition)
{
  auto msg = expect_ingestion_error([&] { io::read_matrix_csv(write("bad.csv", "1,2\n3,abc\n")); });
  EXPECT_NE(msg.find("bad.csv:2:3"), std::string::npos) << msg;
  msg = expect_ingestion_error([&] { io::read_matrix_csv(write("ragged.csv", "1,2\n3\n")); });
  EXPECT_NE(msg.find(":2"), std::string::npos) << msg;
  msg = expect_ingestion_error([&] { io::read_matrix_csv(write("nan.csv", "1,nan\n")); });
  EXPECT_NE(msg.find("nan.csv:1"), std::string::npos) << msg;
  expect_ingestion_error([&] { io::read_matrix_csv(write("empty.csv", "")); });
  EXPECT_THROW(io::read_matrix_csv(path("missing.csv")), io_error);
}

TEST_F(IoTest, BinaryRoundTripIsLossless)
{
  std::vector<float> data{1.0f / 3.0f, -0.0f, 1e-38f, 3.4e38f, 7.125f, -2.5f};
  io::write_matrix_binary(path("m.bin"), point_matrix(3, 2, data));
  auto back = io::read_matrix_binary(path("m.bin"));
  ASSERT_EQ(back.rows(), 3u);
  EXPECT_EQ(std::memcmp(back.data().data(), data.data(), data.size() * sizeof(float)), 0);
  auto raw = slurp(path("m.bin"));
  EXPECT_EQ(raw.substr(0, 4), "SLNK");
  EXPECT_EQ(raw.size(), 16 + data.size() * 4);
}

TEST_F(IoTest, BinaryRejectsCorruption)
{
  io::write_matrix_binary(path("m.bin"), point_matrix(2, 2, {1, 2, 3, 4}));
  auto raw = slurp(path("m.bin"));
  auto msg = expect_ingestion_error([&] { io::read_matrix_binary(write("magic.bin", "XLNK" + raw.substr(4))); });
  EXPECT_NE(msg.find("offset 0"), std::string::npos);
  expect_ingestion_error([&] { io::read_matrix_binary(write("short.bin", raw.substr(0, raw.size() - 1))); });
  expect_ingestion_error([&] { io::read_matrix_binary(write("header.bin", raw.substr(0, 10))); });
  auto version = raw;
  version[4]   = 2;
  expect_ingestion_error([&] { io::read_matrix_binary(write("version.bin", version)); });
}

TEST_F(IoTest, ReadMatrixDispatchesOnMagic)
{
  point_matrix m(2, 2, {1, 2, 3, 4});
  io::write_matrix_binary(path("m.bin"), m);
  io::write_matrix_csv(path("m.csv"), m);
  auto a = io::read_matrix(path("m.bin")), b = io::read_matrix(path("m.csv"));
  EXPECT_TRUE(std::equal(a.data().begin(), a.data().end(), b.data().begin()));
}

TEST_F(IoTest, CsvAndBinaryGiveIdenticalPipelineOutput)
{
  auto data = slink_oracle::gaussian_blobs(300, 4, 5, 10.0, 1.0, 6);
  point_matrix m(300, 4, data);
  io::write_matrix_csv(path("m.csv"), m);
  io::write_matrix_binary(path("m.bin"), m);
  linkage_config cfg;
  cfg.n_clusters = 5;
  auto a = single_linkage(resources{}, io::read_matrix(path("m.csv")), cfg);
  auto b = single_linkage(resources{}, io::read_matrix(path("m.bin")), cfg);
  io::write_dendrogram_csv(path("a.csv"), a.tree);
  io::write_dendrogram_csv(path("b.csv"), b.tree);
  io::write_labels_csv(path("la.csv"), a.labels);
  io::write_labels_csv(path("lb.csv"), b.labels);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  EXPECT_EQ(slurp(path("la.csv")), slurp(path("lb.csv")));
}

TEST_F(IoTest, MatrixMarketSymmetric)
{
  auto g = io::read_matrix_market(write("t.mtx",
                                        "%%MatrixMarket matrix coordinate real symmetric\n"
                                        "% comment\n"
                                        "3 3 3\n2 1 1.5\n3 1 3\n3 2 2\n"));
  EXPECT_EQ(g.n_vertices, 3);
  EXPECT_EQ(g.edges, (std::vector<edge>{{1, 0, 1.5}, {2, 0, 3.0}, {2, 1, 2.0}}));
}

TEST_F(IoTest, MatrixMarketGeneralIntegerAndPattern)
{
  auto g = io::read_matrix_market(write("g.mtx", "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 2 4\n2 1 3\n"));
  auto csr = edge_list_to_csr(g);
  EXPECT_EQ(csr.weights[csr.find(0, 1)], 3.0);
  auto p = io::read_matrix_market(write("p.mtx", "%%MatrixMarket matrix coordinate pattern symmetric\n3 3 1\n3 1\n"));
  EXPECT_EQ(p.edges, (std::vector<edge>{{2, 0, 1.0}}));
}

TEST_F(IoTest, MatrixMarketErrors)
{
  const std::string head = "%%MatrixMarket matrix coordinate real general\n";
  auto msg = expect_ingestion_error([&] { io::read_matrix_market(write("loop.mtx", head + "2 2 1\n1 1 2\n")); });
  EXPECT_NE(msg.find("loop.mtx:3"), std::string::npos) << msg;
  expect_ingestion_error([&] { io::read_matrix_market(write("range.mtx", head + "2 2 1\n1 3 2\n")); });
  expect_ingestion_error([&] { io::read_matrix_market(write("count.mtx", head + "2 2 2\n1 2 2\n")); });
  expect_ingestion_error([&] { io::read_matrix_market(write("banner.mtx", "2 2 1\n1 2 2\n")); });
  expect_ingestion_error([&] { io::read_matrix_market(write("rect.mtx", head + "2 3 1\n1 2 2\n")); });
  expect_ingestion_error(
    [&] { io::read_matrix_market(write("array.mtx", "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n")); });
  expect_ingestion_error([&] { io::read_matrix_market(write("weight.mtx", head + "2 2 1\n1 2\n")); });
}

TEST_F(IoTest, WritersUseShortestRoundTrip)
{
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(io::format_double(2.0), "2");
  EXPECT_EQ(std::stod(io::format_double(1.0 / 3.0)), 1.0 / 3.0);
  dendrogram d{3, {{0, 1, 0.5, 2}, {2, 3, 1.25, 3}}};
  io::write_dendrogram_csv(path("d.csv"), d);
  EXPECT_EQ(slurp(path("d.csv")), "0,1,0.5,2\n2,3,1.25,3\n");
  io::write_labels_csv(path("l.csv"), {1, 0, 1});
  EXPECT_EQ(slurp(path("l.csv")), "1\n0\n1\n");
  io::write_edges_csv(path("e.csv"), {3, {{0, 1, 1.0}, {1, 2, 2.5}}});
  EXPECT_EQ(slurp(path("e.csv")), "0,1,1\n1,2,2.5\n");
  knn_graph k{2, 1, {1, 0}, {4.0, 4.0}};
  io::write_knn_csv(path("i.csv"), path("v.csv"), k);
  EXPECT_EQ(slurp(path("i.csv")), "1\n0\n");
  EXPECT_EQ(slurp(path("v.csv")), "4\n4\n");
}
