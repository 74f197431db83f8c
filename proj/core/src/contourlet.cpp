// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/contourlet.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace vardecomp {

int direction_depth(int count) {
  if (count < 1 || !std::has_single_bit(static_cast<unsigned>(count))) {
    throw ValidationError("contourlet: direction count " + std::to_string(count) + " is not a power of two");
  }
  return std::countr_zero(static_cast<unsigned>(count));
}

double ContourletCoeffs::energy() const {
  double e = inner(approx, approx);
  for (const auto& level : subbands) {
    for (const Image& b : level) e += inner(b, b);
  }
  return e;
}

ContourletTransform::ContourletTransform(std::size_t width, std::size_t height, DirectionSchedule directions,
                                         const FilterSpec& filters)
    : width_(width), height_(height), directions_(std::move(directions)), filters_(filters) {
  if (directions_.empty()) throw ValidationError("contourlet: direction schedule is empty");
  if (width == 0 || height == 0) throw ValidationError("contourlet: empty image");
  const int levels = static_cast<int>(directions_.size());
  if (levels > 16) throw ValidationError("contourlet: too many levels");
  // Band j (coarse to fine) is the padded size divided by 2^(levels-1-j).
  std::size_t block = std::size_t{1} << levels;
  for (int j = 0; j < levels; ++j) {
    const int l = direction_depth(directions_[static_cast<std::size_t>(j)]);
    block = std::max(block, (std::size_t{1} << (levels - 1 - j)) * DirectionalFilterBank::required_multiple(l));
  }
  if (block > width || block > height) {
    throw ValidationError("contourlet: a " + std::to_string(width) + "x" + std::to_string(height) +
                          " image is too small for this schedule (needs sides >= " + std::to_string(block) + ")");
  }
  padded_width_ = round_up(width, block);
  padded_height_ = round_up(height, block);
  for (int j = 0; j < levels; ++j) {
    const std::size_t shrink = std::size_t{1} << (levels - 1 - j);
    banks_.push_back(std::make_shared<const DirectionalFilterBank>(
        padded_width_ / shrink, padded_height_ / shrink, direction_depth(directions_[static_cast<std::size_t>(j)]),
        filters_.dfb));
  }
}

ContourletCoeffs ContourletTransform::forward(const Image& f) const {
  if (f.width() != width_ || f.height() != height_) throw ValidationError("contourlet: image size does not match the plan");
  const Image padded = pad_symmetric(f, padded_height_, padded_width_);
  LaplacianPyramid lp = lp_decompose(padded, levels(), filters_.pyramid);
  ContourletCoeffs c;
  c.levels = levels();
  c.width = width_;
  c.height = height_;
  c.directions = directions_;
  c.approx = std::move(lp.coarse);
  for (std::size_t j = 0; j < banks_.size(); ++j) c.subbands.push_back(banks_[j]->decompose(lp.bands[j]));
  return c;
}

Image ContourletTransform::inverse(const ContourletCoeffs& c) const {
  if (c.levels != levels() || c.subbands.size() != banks_.size() || c.directions != directions_) {
    throw ValidationError("contourlet: coefficients do not match the plan's schedule");
  }
  LaplacianPyramid lp;
  lp.levels = levels();
  lp.width = padded_width_;
  lp.height = padded_height_;
  lp.coarse = c.approx;
  for (std::size_t j = 0; j < banks_.size(); ++j) lp.bands.push_back(banks_[j]->reconstruct(c.subbands[j]));
  Image out = lp_reconstruct(lp, filters_.pyramid);
  if (out.width() == width_ && out.height() == height_) return out;
  return crop(out, 0, 0, height_, width_);
}

std::vector<std::vector<double>> ContourletTransform::subband_gains() const {
  ContourletCoeffs zero = forward(Image(width_, height_));
  std::vector<std::vector<double>> gains(zero.subbands.size());
  for (std::size_t j = 0; j < zero.subbands.size(); ++j) {
    for (std::size_t k = 0; k < zero.subbands[j].size(); ++k) {
      Image& band = zero.subbands[j][k];
      band(band.height() / 2, band.width() / 2) = 1.0;
      // Measure on the padded grid so border cropping does not bias the norm.
      LaplacianPyramid lp;
      lp.levels = levels();
      lp.width = padded_width_;
      lp.height = padded_height_;
      lp.coarse = zero.approx;
      for (std::size_t jj = 0; jj < banks_.size(); ++jj) lp.bands.push_back(banks_[jj]->reconstruct(zero.subbands[jj]));
      gains[j].push_back(l2_norm(lp_reconstruct(lp, filters_.pyramid)));
      band(band.height() / 2, band.width() / 2) = 0.0;
    }
  }
  return gains;
}

ContourletCoeffs contourlet_forward(const Image& f, const DirectionSchedule& directions, const FilterSpec& filters) {
  return ContourletTransform(f.width(), f.height(), directions, filters).forward(f);
}

ContourletCoeffs contourlet_forward(const Image& f, int levels, const DirectionSchedule& directions,
                                    const FilterSpec& filters) {
  if (levels != static_cast<int>(directions.size())) {
    throw ValidationError("contourlet: " + std::to_string(levels) + " levels but " +
                          std::to_string(directions.size()) + " direction counts");
  }
  return contourlet_forward(f, directions, filters);
}

Image contourlet_inverse(const ContourletCoeffs& c, const FilterSpec& filters) {
  return ContourletTransform(c.width, c.height, c.directions, filters).inverse(c);
}

}  // namespace vardecomp
