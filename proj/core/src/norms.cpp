// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace vardecomp {

namespace {

constexpr double kDim = 2.0;

void check_index(const NormIndex& idx) {
  if (!(idx.p > 0.0) || !(idx.q > 0.0)) throw ValidationError("norm: p and q must be > 0");
  if (!std::isfinite(idx.s)) throw ValidationError("norm: s must be finite");
}

// (sum |x|^p)^(1/p), or max |x| for p = inf, accumulated over several bands.
class PowerSum {
 public:
  explicit PowerSum(double p) : p_(p) {}
  void add(const Image& band) {
    for (const double x : band.pixels()) {
      const double a = std::abs(x);
      if (std::isinf(p_)) {
        acc_ = std::max(acc_, a);
      } else {
        acc_ += std::pow(a, p_);
      }
    }
  }
  double value() const { return std::isinf(p_) ? acc_ : std::pow(acc_, 1.0 / p_); }

 private:
  double p_;
  double acc_ = 0.0;
};

// Combines per-scale l^p sums into the l^q sequence norm.
double scale_sum(const std::vector<double>& lp_per_scale, const NormIndex& idx) {
  const double inv_p = std::isinf(idx.p) ? 0.0 : 1.0 / idx.p;
  double acc = 0.0;
  for (std::size_t j = 0; j < lp_per_scale.size(); ++j) {
    const double jj = static_cast<double>(j);
    // 2^{j p/2} inside the p-th power is 2^{j/2} outside it.
    const double term = std::exp2(jj * (kDim / 2.0 - inv_p + idx.s) + jj / 2.0) * lp_per_scale[j];
    if (std::isinf(idx.q)) {
      acc = std::max(acc, term);
    } else {
      acc += std::pow(term, idx.q);
    }
  }
  return std::isinf(idx.q) ? acc : std::pow(acc, 1.0 / idx.q);
}

}  // namespace

double besov_norm(const WaveletPyramid& pyr, const NormIndex& index) {
  check_index(index);
  std::vector<double> per_scale;
  for (const auto& level : pyr.details) {
    PowerSum s(index.p);
    for (const Image& b : level) s.add(b);
    per_scale.push_back(s.value());
  }
  double out = scale_sum(per_scale, index);
  if (!index.homogeneous) {
    PowerSum a(index.p);
    a.add(pyr.approx);
    out += a.value();
  }
  return out;
}

double besov_norm(const Image& f, const NormIndex& index, int levels, const WaveletFilter& filter) {
  return besov_norm(dwt2_forward(f, levels, filter), index);
}

double contourlet_norm(const ContourletCoeffs& c, const NormIndex& index) {
  check_index(index);
  std::vector<double> per_scale;
  for (const auto& level : c.subbands) {
    PowerSum s(index.p);
    for (const Image& b : level) s.add(b);
    per_scale.push_back(s.value());
  }
  double out = scale_sum(per_scale, index);
  if (!index.homogeneous) {
    PowerSum a(index.p);
    a.add(c.approx);
    out += a.value();
  }
  return out;
}

double contourlet_norm(const Image& f, const NormIndex& index, const DirectionSchedule& directions,
                       const FilterSpec& filters) {
  return contourlet_norm(contourlet_forward(f, directions, filters), index);
}

}  // namespace vardecomp
