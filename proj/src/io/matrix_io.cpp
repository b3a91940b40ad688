/*
 * SPDX-FileCopyrightText: Copyright (c) 2026, The slink authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include <slink/error.hpp>
#include <slink/io.hpp>

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

namespace slink::io {

namespace {

std::string slurp(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::ofstream open_for_write(const std::string& path, bool binary = false)
{
  std::ofstream out(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
  if (!out) throw io_error("cannot open '" + path + "' for writing");
  return out;
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::uint32_t load_u32_le(const unsigned char* p)
{
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void store_u32_le(std::uint32_t v, char* p)
{
  for (int i = 0; i < 4; ++i) p[i] = static_cast<char>((v >> (8 * i)) & 0xffu);
}

}  // namespace

std::string format_double(double v)
{
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

point_matrix read_matrix_csv(const std::string& path)
{
  const std::string text = slurp(path);
  std::vector<float> data;
  std::size_t cols = 0, rows = 0, line_no = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line_no;
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;

    std::size_t first = 0;
    while (first < line.size() && is_blank(line[first])) ++first;
    if (first == line.size()) continue;

    std::size_t fields = 0, i = 0;
    while (true) {
      while (i < line.size() && is_blank(line[i])) ++i;
      const std::size_t col_start = i;
      float value = 0.0f;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
      const auto where = path + ":" + std::to_string(line_no) + ":" + std::to_string(col_start + 1);
      if (ec == std::errc::result_out_of_range) throw ingestion_error(where + ": value out of float range");
      if (ec != std::errc()) throw ingestion_error(where + ": expected a number");
      if (!std::isfinite(value)) throw ingestion_error(where + ": non-finite value");
      data.push_back(value);
      ++fields;
      i = static_cast<std::size_t>(ptr - line.data());
      while (i < line.size() && is_blank(line[i])) ++i;
      if (i == line.size()) break;
      if (line[i] != ',') {
        throw ingestion_error(path + ":" + std::to_string(line_no) + ":" + std::to_string(i + 1) +
                              ": expected ',' or end of line");
      }
      ++i;
    }
    if (rows == 0) cols = fields;
    if (fields != cols) {
      throw ingestion_error(path + ":" + std::to_string(line_no) + ": expected " + std::to_string(cols) +
                            " values, found " + std::to_string(fields));
    }
    ++rows;
  }
  if (rows == 0) throw ingestion_error(path + ": no data rows");
  return point_matrix(rows, cols, std::move(data));
}

void write_matrix_csv(const std::string& path, const point_matrix& m)
{
  auto out = open_for_write(path);
  std::array<char, 32> buf{};
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = m.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), row[j]);
      out.write(buf.data(), end - buf.data());
    }
    out << '\n';
  }
  if (!out) throw io_error("short write to '" + path + "'");
}

point_matrix read_matrix_binary(const std::string& path)
{
  const std::string bytes = slurp(path);
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  constexpr std::size_t header = 16;
  if (bytes.size() < header) {
    throw ingestion_error(path + ": truncated header (" + std::to_string(bytes.size()) + " of 16 bytes)");
  }
  if (std::memcmp(bytes.data(), binary_magic, 4) != 0) throw ingestion_error(path + ": offset 0: bad magic, expected SLNK");
  const auto version = load_u32_le(p + 4);
  if (version != binary_version) {
    throw ingestion_error(path + ": offset 4: unsupported version " + std::to_string(version));
  }
  const std::size_t rows = load_u32_le(p + 8), cols = load_u32_le(p + 12);
  const std::size_t expected = header + rows * cols * 4;
  if (bytes.size() != expected) {
    throw ingestion_error(path + ": offset " + std::to_string(bytes.size()) + ": payload size mismatch, expected " +
                          std::to_string(expected) + " bytes for " + std::to_string(rows) + " x " +
                          std::to_string(cols));
  }
  std::vector<float> data(rows * cols);
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = std::bit_cast<float>(load_u32_le(p + header + 4 * i));
    if (!std::isfinite(data[i])) {
      throw ingestion_error(path + ": offset " + std::to_string(header + 4 * i) + ": non-finite value");
    }
  }
  return point_matrix(rows, cols, std::move(data));
}

void write_matrix_binary(const std::string& path, const point_matrix& m)
{
  auto out = open_for_write(path, true);
  std::string buf(16 + m.data().size() * 4, '\0');
  std::memcpy(buf.data(), binary_magic, 4);
  store_u32_le(binary_version, buf.data() + 4);
  store_u32_le(static_cast<std::uint32_t>(m.rows()), buf.data() + 8);
  store_u32_le(static_cast<std::uint32_t>(m.cols()), buf.data() + 12);
  for (std::size_t i = 0; i < m.data().size(); ++i) {
    store_u32_le(std::bit_cast<std::uint32_t>(m.data()[i]), buf.data() + 16 + 4 * i);
  }
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw io_error("short write to '" + path + "'");
}

point_matrix read_matrix(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  char magic[4] = {};
  in.read(magic, 4);
  if (in.gcount() == 4 && std::memcmp(magic, binary_magic, 4) == 0) return read_matrix_binary(path);
  return read_matrix_csv(path);
}

}  // namespace slink::io
