// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"
#include "vardecomp/noise.hpp"
#include "vardecomp/shrinkage.hpp"

using namespace vardecomp;

TEST_SUITE("shrinkage") {
  TEST_CASE("soft threshold minimises the scalar problem") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> cd(-10.0, 10.0);
    std::uniform_real_distribution<double> td(0.0, 5.0);
    for (int k = 0; k < 50; ++k) {
      const double c = cd(rng);
      const double t = td(rng);
      const double ref = oracle::grid_shrink(c, t, -12.0, 12.0, 24001);
      CHECK(std::abs(soft_threshold(c, t) - ref) <= 1e-3 + 1e-12);
    }
  }

  TEST_CASE("scalar edge cases") {
    CHECK(soft_threshold(3.0, 0.0) == 3.0);
    CHECK(soft_threshold(-3.0, 1.0) == -2.0);
    CHECK(soft_threshold(0.5, 1.0) == 0.0);
    CHECK(soft_threshold(-1.0, 1.0) == 0.0);
  }

  TEST_CASE("wavelet shrinkage limits") {
    const Image f = testutil::random_image(32, 32, 1, 0.0, 255.0);
    CHECK(rms_diff(wst(f, 0.0, 3), f) < 1e-10);
    // A huge threshold keeps only the approximation band.
    const Image coarse = wst(f, 1e12, 3);
    const WaveletPyramid pyr = dwt2_forward(coarse, 3);
    for (const auto& lvl : pyr.details) {
      for (const Image& b : lvl) CHECK(max_abs(b) < 1e-9);
    }
    CHECK(mean(coarse) == doctest::Approx(mean(f)));
    CHECK_THROWS_AS(wst(f, -1.0, 3), ValidationError);
  }

  TEST_CASE("shrinkage is non-expansive") {
    const Image a = testutil::random_image(32, 32, 2, 0.0, 50.0);
    const Image b = testutil::random_image(32, 32, 3, 0.0, 50.0);
    CHECK(l2_norm(wst(a, 5.0, 3) - wst(b, 5.0, 3)) <= l2_norm(a - b) + 1e-9);
    CHECK(l2_norm(cst(a, 5.0) - cst(b, 5.0)) <= 1.5 * l2_norm(a - b));
  }

  TEST_CASE("E-ball projection is the complement of shrinkage at 2 mu") {
    const Image f = testutil::random_image(32, 32, 4, 0.0, 100.0);
    CHECK(max_abs_diff(project_E(f, 3.0, 3) + wst(f, 6.0, 3), f) < 1e-10);
    // Every detail coefficient of the projection lies in [-2 mu, 2 mu].
    const WaveletPyramid pyr = dwt2_forward(project_E(f, 3.0, 3), 3);
    for (const auto& lvl : pyr.details) {
      for (const Image& b : lvl) CHECK(max_abs(b) <= 6.0 + 1e-9);
    }
  }

  TEST_CASE("contourlet shrinkage limits") {
    const Image f = testutil::random_image(64, 64, 5, 0.0, 255.0);
    CHECK(rms_diff(cst(f, 0.0), f) < 1e-9);
    const ContourletTransform t(64, 64);
    const Image big = cst(f, 1e12, t);
    const ContourletCoeffs c = t.forward(big);
    for (const auto& lvl : c.subbands) {
      for (const Image& b : lvl) CHECK(max_abs(b) < 1e-6);
    }
  }

  TEST_CASE("contourlet shrinkage removes most of a white noise field") {
    const Image n = gaussian_noise({20.0, 9}, 128, 128);
    const ContourletTransform t(128, 128);
    const auto gains = t.subband_gains();
    const Image kept = cst(n, 3.0 * 20.0, t, gains);
    CHECK(rms(kept) / rms(n) < 0.5);
  }

  TEST_CASE("per-subband gains of one reproduce the uniform threshold") {
    const Image f = testutil::random_image(64, 64, 6, 0.0, 50.0);
    const ContourletTransform t(64, 64);
    std::vector<std::vector<double>> ones;
    for (int d : t.directions()) ones.emplace_back(static_cast<std::size_t>(d), 1.0);
    CHECK(max_abs_diff(cst(f, 4.0, t, ones), cst(f, 4.0, t)) < 1e-12);
    CHECK_THROWS_AS(cst(f, 4.0, t, {{1.0}}), ValidationError);
  }

  TEST_CASE("non-finite input is a numerical error") {
    Image f(32, 32);
    f[0] = INFINITY;
    CHECK_THROWS_AS(wst(f, 1.0, 2), NumericalError);
  }
}
