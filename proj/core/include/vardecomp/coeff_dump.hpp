// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <vector>

#include "vardecomp/contourlet.hpp"
#include "vardecomp/wavelet.hpp"

namespace vardecomp {

/// Writes every band as a raw-float file: wt_approx.raw and
/// wt_j<j>_<LH|HL|HH>.raw. Returns the written paths.
std::vector<std::filesystem::path> dump_coefficients(const WaveletPyramid& pyr, const std::filesystem::path& dir);

/// ct_approx.raw and ct_j<j>_k<k>.raw.
std::vector<std::filesystem::path> dump_coefficients(const ContourletCoeffs& c, const std::filesystem::path& dir);

}  // namespace vardecomp
