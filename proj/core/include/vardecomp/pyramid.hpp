// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "vardecomp/filters.hpp"
#include "vardecomp/image.hpp"

namespace vardecomp {

/// Laplacian pyramid: bandpass residuals plus a coarse lowpass band.
///
/// bands[j] is ordered coarse to fine (j = 0 is the coarsest bandpass,
/// bands.back() has the size of the padded input). `coarse` is the final
/// lowpass residual at 1/2^levels resolution.
struct LaplacianPyramid {
  int levels = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Image> bands;
  Image coarse;

  double energy() const;
};

LaplacianPyramid lp_decompose(const Image& f, int levels, const PyramidFilter& filter = cdf97());
Image lp_reconstruct(const LaplacianPyramid& lp, const PyramidFilter& filter = cdf97());

/// Lowpass + downsample by two on each axis (periodic). Sides must be even.
Image lp_reduce(const Image& x, const PyramidFilter& filter);
/// Upsample by two on each axis + interpolation filter (periodic).
Image lp_expand(const Image& c, const PyramidFilter& filter);

}  // namespace vardecomp
