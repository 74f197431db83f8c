// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/image_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

namespace vardecomp {

namespace {

std::vector<unsigned char> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
  return bytes;
}

void spill(const std::filesystem::path& path, const std::vector<unsigned char>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

std::uint32_t load_u32_le(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void store_u32_le(std::uint32_t v, unsigned char* p) {
  for (int b = 0; b < 4; ++b) p[b] = static_cast<unsigned char>((v >> (8 * b)) & 0xffu);
}

double load_f64_le(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int b = 7; b >= 0; --b) bits = (bits << 8) | p[b];
  return std::bit_cast<double>(bits);
}

void store_f64_le(double v, unsigned char* p) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b) p[b] = static_cast<unsigned char>((bits >> (8 * b)) & 0xffu);
}

bool has_raw_magic(const std::vector<unsigned char>& bytes) {
  return bytes.size() >= 8 && std::memcmp(bytes.data(), kRawFloatMagic, 8) == 0;
}

Image decode_raw(const std::vector<unsigned char>& bytes, const std::string& name) {
  if (!has_raw_magic(bytes) || bytes.size() < 16) {
    throw IoError("'" + name + "': not a raw-float file (bad magic)");
  }
  const std::uint32_t w = load_u32_le(bytes.data() + 8);
  const std::uint32_t h = load_u32_le(bytes.data() + 12);
  const std::size_t count = static_cast<std::size_t>(w) * h;
  if (bytes.size() != 16 + 8 * count) {
    throw IoError("'" + name + "': raw-float payload length does not match " +
                  std::to_string(w) + "x" + std::to_string(h));
  }
  std::vector<double> data(count);
  for (std::size_t k = 0; k < count; ++k) data[k] = load_f64_le(bytes.data() + 16 + 8 * k);
  return Image(w, h, std::move(data));
}

// Cursor over a PGM header: whitespace and '#' comments separate tokens.
struct PgmHeaderReader {
  const std::vector<unsigned char>& bytes;
  std::size_t pos = 0;
  std::string name;

  void skip_space_and_comments() {
    while (pos < bytes.size()) {
      if (bytes[pos] == '#') {
        while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
      } else if (std::isspace(bytes[pos])) {
        ++pos;
      } else {
        break;
      }
    }
  }

  unsigned long next_uint() {
    skip_space_and_comments();
    if (pos >= bytes.size() || !std::isdigit(bytes[pos])) {
      throw IoError("'" + name + "': malformed PGM header");
    }
    unsigned long v = 0;
    while (pos < bytes.size() && std::isdigit(bytes[pos])) {
      v = v * 10 + static_cast<unsigned long>(bytes[pos] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw IoError("'" + name + "': PGM header value out of range");
      }
      ++pos;
    }
    return v;
  }
};

Image decode_pgm(const std::vector<unsigned char>& bytes, const std::string& name) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw IoError("'" + name + "': not a binary PGM (expected P5)");
  }
  PgmHeaderReader rd{bytes, 2, name};
  const auto w = rd.next_uint();
  const auto h = rd.next_uint();
  const auto maxval = rd.next_uint();
  if (w == 0 || h == 0) throw IoError("'" + name + "': PGM has zero size");
  if (maxval == 0 || maxval > 255) {
    throw IoError("'" + name + "': only 8-bit PGM (maxval 1..255) is supported");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (rd.pos >= bytes.size() || !std::isspace(bytes[rd.pos])) {
    throw IoError("'" + name + "': malformed PGM header");
  }
  ++rd.pos;
  const std::size_t count = static_cast<std::size_t>(w) * h;
  if (bytes.size() - rd.pos < count) throw IoError("'" + name + "': truncated PGM raster");
  std::vector<double> data(count);
  for (std::size_t k = 0; k < count; ++k) {
    data[k] = std::min<double>(bytes[rd.pos + k], static_cast<double>(maxval));
  }
  return Image(w, h, std::move(data));
}

}  // namespace

Image read_raw_float(const std::filesystem::path& path) { return decode_raw(slurp(path), path.string()); }

void write_raw_float(const Image& img, const std::filesystem::path& path) {
  if (img.width() > std::numeric_limits<std::uint32_t>::max() ||
      img.height() > std::numeric_limits<std::uint32_t>::max()) {
    throw IoError("raw-float: image too large");
  }
  std::vector<unsigned char> bytes(16 + 8 * img.size());
  std::memcpy(bytes.data(), kRawFloatMagic, 8);
  store_u32_le(static_cast<std::uint32_t>(img.width()), bytes.data() + 8);
  store_u32_le(static_cast<std::uint32_t>(img.height()), bytes.data() + 12);
  for (std::size_t k = 0; k < img.size(); ++k) store_f64_le(img[k], bytes.data() + 16 + 8 * k);
  spill(path, bytes);
}

Image read_pgm(const std::filesystem::path& path) { return decode_pgm(slurp(path), path.string()); }

void write_pgm(const Image& img, const std::filesystem::path& path, double offset) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<unsigned char> bytes(header.begin(), header.end());
  bytes.reserve(header.size() + img.size());
  for (double v : img.pixels()) {
    const double shifted = std::isfinite(v) ? std::round(v + offset) : 0.0;
    bytes.push_back(static_cast<unsigned char>(std::clamp(shifted, 0.0, 255.0)));
  }
  spill(path, bytes);
}

Image read_image(const std::filesystem::path& path) {
  const auto bytes = slurp(path);
  if (has_raw_magic(bytes)) return decode_raw(bytes, path.string());
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') return decode_pgm(bytes, path.string());
  throw IoError("'" + path.string() + "': unrecognized image format");
}

void write_image(const Image& img, const std::filesystem::path& path) {
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
  if (ext == ".pgm") {
    write_pgm(img, path);
  } else {
    write_raw_float(img, path);
  }
}

}  // namespace vardecomp
