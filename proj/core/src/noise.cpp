// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/noise.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace vardecomp {

namespace {

// Uniform in (0, 1]: never zero, so log() below is finite.
double unit_open_closed(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

Image gaussian_noise(const NoiseSpec& spec, std::size_t width, std::size_t height) {
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
    throw ValidationError("gaussian_noise: sigma must be finite and >= 0");
  }
  Image out(width, height);
  if (spec.sigma == 0.0) return out;

  std::mt19937_64 rng(spec.seed);
  const std::size_t n = out.size();
  for (std::size_t k = 0; k < n; k += 2) {
    const double u1 = unit_open_closed(rng);
    const double u2 = unit_open_closed(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    out[k] = spec.sigma * r * std::cos(theta);
    if (k + 1 < n) out[k + 1] = spec.sigma * r * std::sin(theta);
  }
  return out;
}

}  // namespace vardecomp
