// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "vardecomp/image.hpp"

namespace vardecomp {

struct NoiseSpec {
  double sigma = 20.0;
  std::uint64_t seed = 0;
};

/// Zero-mean i.i.d. normal samples of standard deviation `spec.sigma`.
///
/// Generator: std::mt19937_64 seeded with `spec.seed` (its output sequence is
/// fixed by the C++ standard). Each pair of 64-bit draws is turned into a
/// uniform in (0, 1] from the top 53 bits, then into two normals with the
/// Box-Muller transform; samples fill the image row-major. The result is a
/// pure function of (spec, width, height).
Image gaussian_noise(const NoiseSpec& spec, std::size_t width, std::size_t height);

}  // namespace vardecomp
