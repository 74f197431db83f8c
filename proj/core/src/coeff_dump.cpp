// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/coeff_dump.hpp"

#include <string>
#include <system_error>

#include "vardecomp/image_io.hpp"

namespace vardecomp {

namespace {

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

}  // namespace

std::vector<std::filesystem::path> dump_coefficients(const WaveletPyramid& pyr, const std::filesystem::path& dir) {
  ensure_dir(dir);
  static constexpr const char* kNames[3] = {"LH", "HL", "HH"};
  std::vector<std::filesystem::path> out{dir / "wt_approx.raw"};
  write_raw_float(pyr.approx, out.back());
  for (std::size_t j = 0; j < pyr.details.size(); ++j) {
    for (std::size_t o = 0; o < 3; ++o) {
      out.push_back(dir / ("wt_j" + std::to_string(j) + "_" + kNames[o] + ".raw"));
      write_raw_float(pyr.details[j][o], out.back());
    }
  }
  return out;
}

std::vector<std::filesystem::path> dump_coefficients(const ContourletCoeffs& c, const std::filesystem::path& dir) {
  ensure_dir(dir);
  std::vector<std::filesystem::path> out{dir / "ct_approx.raw"};
  write_raw_float(c.approx, out.back());
  for (std::size_t j = 0; j < c.subbands.size(); ++j) {
    for (std::size_t k = 0; k < c.subbands[j].size(); ++k) {
      out.push_back(dir / ("ct_j" + std::to_string(j) + "_k" + std::to_string(k) + ".raw"));
      write_raw_float(c.subbands[j][k], out.back());
    }
  }
  return out;
}

}  // namespace vardecomp
