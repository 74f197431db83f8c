// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "vardecomp/dfb.hpp"
#include "vardecomp/filters.hpp"
#include "vardecomp/image.hpp"
#include "vardecomp/pyramid.hpp"

namespace vardecomp {

/// Direction counts per pyramid level, coarse to fine; each a power of two.
using DirectionSchedule = std::vector<int>;

inline const DirectionSchedule kDefaultDirections{8, 8, 4};

/// Contourlet coefficients: LP coarse band plus, per scale j (coarse to
/// fine), the directional subbands of that scale's bandpass image.
struct ContourletCoeffs {
  int levels = 0;
  std::size_t width = 0;   // original support
  std::size_t height = 0;
  DirectionSchedule directions;
  Image approx;
  std::vector<std::vector<Image>> subbands;

  double energy() const;
};

/// Contourlet transform plan for one image size and direction schedule.
/// Inputs are symmetrically padded to the smallest size every stage accepts.
class ContourletTransform {
 public:
  ContourletTransform(std::size_t width, std::size_t height, DirectionSchedule directions = kDefaultDirections,
                      const FilterSpec& filters = {});

  int levels() const noexcept { return static_cast<int>(directions_.size()); }
  const DirectionSchedule& directions() const noexcept { return directions_; }
  std::size_t padded_width() const noexcept { return padded_width_; }
  std::size_t padded_height() const noexcept { return padded_height_; }

  ContourletCoeffs forward(const Image& f) const;
  Image inverse(const ContourletCoeffs& c) const;

  /// L2 norm of the synthesis atom of each directional subband, measured by
  /// reconstructing a unit coefficient placed mid-subband; [j][k].
  std::vector<std::vector<double>> subband_gains() const;

 private:
  std::size_t width_;
  std::size_t height_;
  DirectionSchedule directions_;
  FilterSpec filters_;
  std::size_t padded_width_ = 0;
  std::size_t padded_height_ = 0;
  std::vector<std::shared_ptr<const DirectionalFilterBank>> banks_;
};

ContourletCoeffs contourlet_forward(const Image& f, const DirectionSchedule& directions = kDefaultDirections,
                                    const FilterSpec& filters = {});
/// Same, with an explicit level count that must equal the schedule length.
ContourletCoeffs contourlet_forward(const Image& f, int levels, const DirectionSchedule& directions,
                                    const FilterSpec& filters = {});
Image contourlet_inverse(const ContourletCoeffs& c, const FilterSpec& filters = {});

/// log2 of a direction count; throws ValidationError unless it is a power of two.
int direction_depth(int count);

}  // namespace vardecomp
