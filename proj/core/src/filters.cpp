// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/filters.hpp"

#include <cmath>
#include <numbers>

#include "vardecomp/dfb.hpp"
#include "vardecomp/pyramid.hpp"
#include "vardecomp/wavelet.hpp"

namespace vardecomp {

namespace {

std::vector<double> scaled(std::vector<double> taps, double c) {
  for (double& t : taps) t *= c;
  return taps;
}

std::vector<double> mirrored(const std::vector<double>& half) {
  std::vector<double> full(half);
  for (auto it = half.rbegin() + 1; it != half.rend(); ++it) full.push_back(*it);
  return full;
}

Image impulse(std::size_t n) {
  Image x(n, n);
  x(n / 2 - 1, n / 3) = 1.0;
  return x;
}

}  // namespace

std::vector<double> WaveletFilter::highpass() const {
  const std::size_t n = lowpass.size();
  std::vector<double> g(n);
  for (std::size_t k = 0; k < n; ++k) g[k] = ((k % 2 == 0) ? 1.0 : -1.0) * lowpass[n - 1 - k];
  return g;
}

WaveletFilter daubechies4() {
  return {"db4",
          {0.2303778133088964, 0.7148465705529154, 0.6308807679298587, -0.0279837694168599,
           -0.1870348117190931, 0.0308413818355607, 0.0328830116668852, -0.0105974017850690}};
}

WaveletFilter haar() { return {"haar", {std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0}}; }

PyramidFilter cdf97() {
  // Unit-DC analysis and DC-gain-2 synthesis lowpass, rescaled to sum sqrt(2).
  const std::vector<double> analysis = mirrored(
      {0.026748757410810, -0.016864118442875, -0.078223266528990, 0.266864118442875, 0.602949018236360});
  const std::vector<double> synthesis =
      mirrored({-0.091271763114250, -0.057543526228500, 0.591271763114250, 1.115087052456994});
  return {"cdf97", scaled(analysis, std::numbers::sqrt2), scaled(synthesis, 1.0 / std::numbers::sqrt2)};
}

DfbFilter lagrange6() { return {"lagrange6", {150.0 / 256.0, -25.0 / 256.0, 3.0 / 256.0}}; }

DfbFilter lagrange2() { return {"lagrange2", {0.5}}; }

FilterSpec FilterSpec::defaults() {
  FilterSpec spec;
  spec.verify();
  return spec;
}

void FilterSpec::verify() const {
  constexpr double kTol = 1e-8;
  const Image x = impulse(16);
  if (rms_diff(dwt2_inverse(dwt2_forward(x, 2, wavelet), wavelet), x) > kTol) {
    throw ValidationError("filter '" + wavelet.name + "' does not reconstruct an impulse");
  }
  if (rms_diff(lp_reconstruct(lp_decompose(x, 2, pyramid), pyramid), x) > kTol) {
    throw ValidationError("filter '" + pyramid.name + "' does not reconstruct an impulse");
  }
  const DirectionalFilterBank bank(16, 16, 2, dfb);
  if (rms_diff(bank.reconstruct(bank.decompose(x)), x) > kTol) {
    throw ValidationError("filter '" + dfb.name + "' does not reconstruct an impulse");
  }
}

}  // namespace vardecomp
