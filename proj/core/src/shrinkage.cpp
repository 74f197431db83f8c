// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/shrinkage.hpp"

#include <cmath>
#include <string>

namespace vardecomp {

namespace {

void check_threshold(double t, const char* what) {
  if (!(t >= 0.0) || std::isnan(t)) throw ValidationError(std::string(what) + ": threshold must be >= 0");
}

}  // namespace

void soft_threshold_inplace(Image& img, double t) noexcept {
  for (double& c : img.pixels()) c = soft_threshold(c, t);
}

Image wst(const Image& f, double threshold, int levels, const WaveletFilter& filter) {
  check_threshold(threshold, "wst");
  if (!f.all_finite()) throw NumericalError("wst: non-finite input");
  WaveletPyramid pyr = dwt2_forward(f, levels, filter);
  for (auto& level : pyr.details) {
    for (Image& band : level) soft_threshold_inplace(band, threshold);
  }
  return dwt2_inverse(pyr, filter);
}

Image project_E(const Image& f, double mu, int levels, const WaveletFilter& filter) {
  check_threshold(mu, "project_E");
  return f - wst(f, 2.0 * mu, levels, filter);
}

Image cst(const Image& f, double threshold, const ContourletTransform& transform) {
  check_threshold(threshold, "cst");
  if (!f.all_finite()) throw NumericalError("cst: non-finite input");
  ContourletCoeffs c = transform.forward(f);
  for (auto& level : c.subbands) {
    for (Image& band : level) soft_threshold_inplace(band, threshold);
  }
  return transform.inverse(c);
}

Image cst(const Image& f, double threshold, const DirectionSchedule& directions, const FilterSpec& filters) {
  return cst(f, threshold, ContourletTransform(f.width(), f.height(), directions, filters));
}

Image cst(const Image& f, double threshold, const ContourletTransform& transform,
          const std::vector<std::vector<double>>& gains) {
  check_threshold(threshold, "cst");
  if (!f.all_finite()) throw NumericalError("cst: non-finite input");
  ContourletCoeffs c = transform.forward(f);
  if (gains.size() != c.subbands.size()) throw ValidationError("cst: gain table does not match the schedule");
  for (std::size_t j = 0; j < c.subbands.size(); ++j) {
    if (gains[j].size() != c.subbands[j].size()) throw ValidationError("cst: gain table does not match the schedule");
    for (std::size_t k = 0; k < c.subbands[j].size(); ++k) {
      check_threshold(gains[j][k], "cst gain");
      soft_threshold_inplace(c.subbands[j][k], threshold * gains[j][k]);
    }
  }
  return transform.inverse(c);
}

}  // namespace vardecomp
