// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "vardecomp/contourlet.hpp"
#include "vardecomp/shrinkage.hpp"
#include "vardecomp/wavelet.hpp"

namespace vardecomp {

/// Smoothness index s and exponents p, q in (0, inf]; use
/// std::numeric_limits<double>::infinity() for a supremum.
struct NormIndex {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;
  /// Drop the approximation term.
  bool homogeneous = false;
};

/// Besov norm from wavelet coefficients in dimension two:
///   (sum |alpha|^p)^(1/p)
///   + (sum_j 2^{j (1 - 1/p + s) q} [sum_n 2^{j p/2} |beta_jn|^p]^{q/p})^(1/q)
/// with j = 0 the coarsest detail scale. The sum stops at the available
/// depth, so the value depends on `levels`.
double besov_norm(const WaveletPyramid& pyr, const NormIndex& index);
double besov_norm(const Image& f, const NormIndex& index, int levels = kDefaultWaveletLevels,
                  const WaveletFilter& filter = daubechies4());

/// Same construction over contourlet coefficients, with the inner sum
/// running over all directional subbands of scale j.
double contourlet_norm(const ContourletCoeffs& c, const NormIndex& index);
double contourlet_norm(const Image& f, const NormIndex& index, const DirectionSchedule& directions = kDefaultDirections,
                       const FilterSpec& filters = {});

}  // namespace vardecomp
