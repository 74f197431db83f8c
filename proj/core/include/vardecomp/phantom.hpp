// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <variant>
#include <vector>

#include "vardecomp/image.hpp"
#include "vardecomp/noise.hpp"

namespace vardecomp {

/// Axis-aligned box [row0, row0 + rows) x [col0, col0 + cols).
struct Rectangle {
  std::size_t row0 = 0;
  std::size_t col0 = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  double value = 0.0;
};

/// Pixels with (i - row)^2 + (j - col)^2 <= radius^2.
struct Disc {
  double row = 0.0;
  double col = 0.0;
  double radius = 0.0;
  double value = 0.0;
};

/// Closed polygon, vertices as (row, col); even-odd fill of pixel centres.
struct Polygon {
  std::vector<std::array<double, 2>> vertices;
  double value = 0.0;
};

using Shape = std::variant<Rectangle, Disc, Polygon>;

/// amplitude * sin(omega * (x cos(theta) + y sin(theta)) + phase) on a
/// rectangular domain, x = column and y = row, zero elsewhere.
struct SinePatch {
  Rectangle domain;  // `value` is ignored
  double amplitude = 40.0;
  double omega = 0.6;      // rad / pixel
  double theta_deg = 0.0;  // orientation of the wave vector
  double phase = 0.0;
};

struct PhantomSpec {
  std::size_t width = 256;
  std::size_t height = 256;
  double background = 128.0;
  std::vector<Shape> shapes;  // painted in order, later shapes on top
  std::vector<SinePatch> patches;
  NoiseSpec noise{20.0, 0};
};

inline constexpr std::uint64_t kStandardPhantomSeed = 20090616;

/// 256 x 256 on background 128: rectangle (64), disc (192), triangle (230),
/// sine patches with omega 0.6 at 0 deg and 1.1 at 45 deg, amplitude 40, and
/// sigma = 20 noise with seed kStandardPhantomSeed.
PhantomSpec standard_phantom_spec();

struct Phantom {
  Image u0;
  Image v0;
  Image w0;
  Image f0;
  PhantomSpec spec;
};

/// Deterministic in `spec`. Throws ValidationError when a shape or patch
/// leaves the image or two patches overlap.
Phantom synth_phantom(const PhantomSpec& spec);

}  // namespace vardecomp
