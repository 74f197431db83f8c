// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "vardecomp/image.hpp"

namespace vardecomp {

/// Circular autocorrelation gamma(k, l) = sum_{i,j} a(i, j) a(i + k, j + l),
/// indices modulo the image size, computed through the FFT. The sum is not
/// normalised: gamma(0, 0) = sum a^2. Lag (k, l) is stored at pixel (k, l).
Image autocorrelation(const Image& a);

}  // namespace vardecomp
