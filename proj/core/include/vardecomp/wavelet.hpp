// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <vector>

#include "vardecomp/filters.hpp"
#include "vardecomp/image.hpp"

namespace vardecomp {

enum class Orientation { LH = 0, HL = 1, HH = 2 };

/// Separable periodic 2-D wavelet decomposition.
///
/// details[j] holds the three orientation bands of scale j, with j = 0 the
/// coarsest detail scale and j = levels-1 the finest; this matches the
/// scale index of the Besov norm. Inputs whose sides are not multiples of
/// 2^levels are symmetrically padded first; `width`/`height` record the
/// original support so the inverse crops back to it.
struct WaveletPyramid {
  int levels = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  Image approx;
  std::vector<std::array<Image, 3>> details;

  Image& band(int j, Orientation o) { return details[static_cast<std::size_t>(j)][static_cast<std::size_t>(o)]; }
  const Image& band(int j, Orientation o) const {
    return details[static_cast<std::size_t>(j)][static_cast<std::size_t>(o)];
  }

  /// Sum of squares of every coefficient.
  double energy() const;
};

WaveletPyramid dwt2_forward(const Image& f, int levels, const WaveletFilter& filter = daubechies4());
Image dwt2_inverse(const WaveletPyramid& pyr, const WaveletFilter& filter = daubechies4());

/// One analysis step along each axis; returns {LL, LH, HL, HH}. Sides must be even.
std::array<Image, 4> dwt2_step(const Image& x, const WaveletFilter& filter);
Image idwt2_step(const std::array<Image, 4>& bands, const WaveletFilter& filter);

}  // namespace vardecomp
