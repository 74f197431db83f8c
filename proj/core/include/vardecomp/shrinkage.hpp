// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "vardecomp/contourlet.hpp"
#include "vardecomp/filters.hpp"
#include "vardecomp/image.hpp"
#include "vardecomp/wavelet.hpp"

namespace vardecomp {

inline constexpr int kDefaultWaveletLevels = 4;

/// sign(c) max(|c| - t, 0): the minimiser of |c - d|^2 + 2 t |d| over d.
inline double soft_threshold(double c, double t) noexcept {
  if (c > t) return c - t;
  if (c < -t) return c + t;
  return 0.0;
}

void soft_threshold_inplace(Image& img, double t) noexcept;

/// Wavelet soft thresholding: forward transform, shrink every detail
/// coefficient by `threshold` (approximation untouched), inverse.
Image wst(const Image& f, double threshold, int levels = kDefaultWaveletLevels,
          const WaveletFilter& filter = daubechies4());

/// Projection onto the wavelet ball E_mu: f - wst(f, 2 mu).
Image project_E(const Image& f, double mu, int levels = kDefaultWaveletLevels,
                const WaveletFilter& filter = daubechies4());

/// Contourlet soft thresholding of the directional coefficients; the coarse
/// band is left untouched.
Image cst(const Image& f, double threshold, const ContourletTransform& transform);
Image cst(const Image& f, double threshold, const DirectionSchedule& directions = kDefaultDirections,
          const FilterSpec& filters = {});

/// Per-subband thresholds: subband (j, k) is shrunk by threshold * gains[j][k].
Image cst(const Image& f, double threshold, const ContourletTransform& transform,
          const std::vector<std::vector<double>>& gains);

}  // namespace vardecomp
