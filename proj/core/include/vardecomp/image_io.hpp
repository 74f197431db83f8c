// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "vardecomp/image.hpp"

namespace vardecomp {

/// Lossless raw-float container. Layout (all little-endian):
///
///   offset 0   8 bytes  magic "VDRAWF64"
///   offset 8   uint32   width
///   offset 12  uint32   height
///   offset 16  width*height IEEE-754 binary64, row-major
inline constexpr char kRawFloatMagic[8] = {'V', 'D', 'R', 'A', 'W', 'F', '6', '4'};

Image read_raw_float(const std::filesystem::path& path);
void write_raw_float(const Image& img, const std::filesystem::path& path);

/// Binary PGM (P5) with maxval <= 255. Pixel values are returned unscaled.
Image read_pgm(const std::filesystem::path& path);

/// Writes P5, maxval 255. Each pixel is (value + offset), rounded to nearest
/// and clamped to [0, 255]. Use offset 128 for signed components.
void write_pgm(const Image& img, const std::filesystem::path& path, double offset = 0.0);

/// Dispatches on the file's magic bytes (raw-float or P5).
Image read_image(const std::filesystem::path& path);

/// Dispatches on the extension: ".pgm" writes PGM, anything else raw-float.
void write_image(const Image& img, const std::filesystem::path& path);

}  // namespace vardecomp
