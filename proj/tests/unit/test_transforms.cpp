// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "test_util.hpp"
#include "vardecomp/contourlet.hpp"
#include "vardecomp/dfb.hpp"
#include "vardecomp/filters.hpp"
#include "vardecomp/pyramid.hpp"
#include "vardecomp/wavelet.hpp"

using namespace vardecomp;

TEST_SUITE("filters") {
  TEST_CASE("orthonormal wavelet taps") {
    for (const WaveletFilter& f : {daubechies4(), haar()}) {
      const auto& h = f.lowpass;
      CHECK(std::accumulate(h.begin(), h.end(), 0.0) == doctest::Approx(std::sqrt(2.0)));
      CHECK(std::inner_product(h.begin(), h.end(), h.begin(), 0.0) == doctest::Approx(1.0));
      // Orthogonal to even shifts.
      for (std::size_t s = 2; s < h.size(); s += 2) {
        double acc = 0.0;
        for (std::size_t k = 0; k + s < h.size(); ++k) acc += h[k] * h[k + s];
        CHECK(std::abs(acc) < 1e-12);
      }
      const auto g = f.highpass();
      CHECK(std::accumulate(g.begin(), g.end(), 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(daubechies4().lowpass.size() == 8);
  }

  TEST_CASE("pyramid and interpolator taps are normalised") {
    const PyramidFilter p = cdf97();
    CHECK(p.analysis.size() == 9);
    CHECK(p.synthesis.size() == 7);
    CHECK(std::accumulate(p.analysis.begin(), p.analysis.end(), 0.0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(std::accumulate(p.synthesis.begin(), p.synthesis.end(), 0.0) == doctest::Approx(std::sqrt(2.0)));
    for (const DfbFilter& d : {lagrange6(), lagrange2()}) {
      CHECK(2.0 * std::accumulate(d.half_taps.begin(), d.half_taps.end(), 0.0) == doctest::Approx(1.0));
    }
  }

  TEST_CASE("defaults verify and a broken filter is rejected") {
    CHECK_NOTHROW(FilterSpec::defaults());
    FilterSpec bad;
    bad.wavelet.lowpass[0] += 0.1;
    CHECK_THROWS_AS(bad.verify(), ValidationError);
  }
}

TEST_SUITE("wavelet") {
  TEST_CASE("perfect reconstruction and Parseval") {
    for (std::size_t n : {16, 64, 128}) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        const Image f = testutil::random_image(n, n, s, 0.0, 255.0);
        const WaveletPyramid pyr = dwt2_forward(f, 3);
        CHECK(rms_diff(dwt2_inverse(pyr), f) < 1e-10);
        CHECK(std::abs(pyr.energy() / inner(f, f) - 1.0) < 1e-12);
      }
    }
  }

  TEST_CASE("band layout, coarse to fine") {
    const WaveletPyramid pyr = dwt2_forward(testutil::random_image(64, 32, 1), 3);
    CHECK(pyr.details.size() == 3);
    CHECK(pyr.approx.width() == 8);
    CHECK(pyr.approx.height() == 4);
    CHECK(pyr.band(0, Orientation::HH).width() == 8);
    CHECK(pyr.band(2, Orientation::HH).width() == 32);
    CHECK(pyr.band(2, Orientation::LH).height() == 16);
  }

  TEST_CASE("haar step on a known block") {
    const Image x(2, 2, std::vector<double>{1.0, 2.0, 3.0, 4.0});
    const auto b = dwt2_step(x, haar());
    CHECK(b[0][0] == doctest::Approx(5.0));           // (1+2+3+4)/2
    CHECK(std::abs(b[1][0]) == doctest::Approx(2.0));  // lowpass along rows, highpass down columns
    CHECK(std::abs(b[2][0]) == doctest::Approx(1.0));  // highpass along rows
    CHECK(b[3][0] == doctest::Approx(0.0));
  }

  TEST_CASE("odd sizes are padded and cropped back") {
    const Image f = testutil::random_image(37, 23, 4);
    const WaveletPyramid pyr = dwt2_forward(f, 2);
    const Image back = dwt2_inverse(pyr);
    CHECK(back.width() == 37);
    CHECK(back.height() == 23);
    CHECK(rms_diff(back, f) < 1e-10);
  }

  TEST_CASE("smooth images have small detail energy") {
    Image f(64, 64);
    for (std::size_t i = 0; i < 64; ++i) {
      for (std::size_t j = 0; j < 64; ++j) f(i, j) = 0.5 * static_cast<double>(i) + 0.25 * static_cast<double>(j);
    }
    const WaveletPyramid pyr = dwt2_forward(f, 2);
    // db4 kills linear trends away from the periodic seam.
    const Image& hh = pyr.band(1, Orientation::HH);
    CHECK(std::abs(hh(5, 5)) < 1e-10);
  }

  TEST_CASE("depth and size validation") {
    CHECK_THROWS_AS(dwt2_forward(Image(8, 8), 0), ValidationError);
    CHECK_THROWS_AS(dwt2_forward(Image(8, 8), 4), ValidationError);
    CHECK_THROWS_AS(dwt2_forward(Image(), 1), ValidationError);
  }
}

TEST_SUITE("pyramid") {
  TEST_CASE("Laplacian pyramid reconstructs exactly") {
    for (std::size_t n : {32, 64, 96}) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        const Image f = testutil::random_image(n, n, 10 + s, 0.0, 255.0);
        const LaplacianPyramid lp = lp_decompose(f, 3);
        CHECK(lp.bands.size() == 3);
        CHECK(lp.bands.back().width() == n);
        CHECK(lp.bands.front().width() == n / 4);
        CHECK(lp.coarse.width() == n / 8);
        CHECK(rms_diff(lp_reconstruct(lp), f) < 1e-10);
      }
    }
  }

  TEST_CASE("reduce keeps constants and expand interpolates them") {
    const Image c(16, 16, 10.0);
    const Image r = lp_reduce(c, cdf97());
    CHECK(r.width() == 8);
    // Analysis taps sum to sqrt 2 per axis.
    CHECK(r(3, 3) == doctest::Approx(20.0));
    const Image e = lp_expand(r, cdf97());
    CHECK(e(5, 5) == doctest::Approx(10.0));
  }

  TEST_CASE("band energy stays close to the image energy") {
    const Image f = testutil::random_image(64, 64, 20);
    const LaplacianPyramid lp = lp_decompose(f, 3);
    const double ratio = lp.energy() / inner(f, f);
    CHECK(ratio > 0.9);
    CHECK(ratio < 1.3);
  }
}

TEST_SUITE("dfb") {
  TEST_CASE("required block sizes") {
    CHECK(DirectionalFilterBank::required_multiple(0) == 1);
    CHECK(DirectionalFilterBank::required_multiple(1) == 2);
    CHECK(DirectionalFilterBank::required_multiple(2) == 2);
    CHECK(DirectionalFilterBank::required_multiple(3) == 4);
    CHECK(DirectionalFilterBank::required_multiple(4) == 8);
    CHECK(DirectionalFilterBank::supports(16, 16, 4));
    CHECK_FALSE(DirectionalFilterBank::supports(12, 16, 4));
    CHECK_THROWS_AS(DirectionalFilterBank(12, 16, 4), ValidationError);
  }

  TEST_CASE("critically sampled perfect reconstruction") {
    for (int l = 0; l <= 4; ++l) {
      for (std::size_t n : {16, 32}) {
        const Image x = testutil::random_image(n, n, 30 + static_cast<std::uint64_t>(l));
        const DirectionalFilterBank bank(n, n, l);
        const auto sub = bank.decompose(x);
        CHECK(sub.size() == (std::size_t{1} << l));
        std::size_t total = 0;
        for (const Image& s : sub) total += s.size();
        CHECK(total == x.size());
        CHECK(rms_diff(bank.reconstruct(sub), x) < 1e-12);
      }
    }
  }

  TEST_CASE("rectangular images") {
    const Image x = testutil::random_image(32, 16, 40);
    const auto sub = dfb_decompose(x, 3);
    CHECK(rms_diff(dfb_reconstruct(sub, 32, 16, 3), x) < 1e-12);
  }

  TEST_CASE("oriented grating concentrates in few subbands") {
    const Image x = testutil::sine_image(64, 64, 1.0, 1.2, 45.0);
    const auto sub = dfb_decompose(x, 3);
    std::vector<double> e;
    for (const Image& s : sub) e.push_back(inner(s, s));
    const double total = std::accumulate(e.begin(), e.end(), 0.0);
    CHECK(*std::max_element(e.begin(), e.end()) / total > 0.6);
  }

  TEST_CASE("leaf metadata is consistent") {
    const DirectionalFilterBank bank(16, 16, 3);
    for (const auto& leaf : bank.leaves()) {
      CHECK(leaf.rows * leaf.cols == leaf.positions.size());
      CHECK(std::abs(leaf.lattice[0] * leaf.lattice[3] - leaf.lattice[1] * leaf.lattice[2]) == 8);
    }
  }
}

TEST_SUITE("contourlet") {
  TEST_CASE("round trip on several sizes and seeds") {
    for (std::size_t n : {64, 96, 128}) {
      for (std::uint64_t s = 0; s < 3; ++s) {
        const Image f = testutil::random_image(n, n, 50 + s, 0.0, 255.0);
        const ContourletCoeffs c = contourlet_forward(f);
        CHECK(rms_diff(contourlet_inverse(c), f) < 1e-9);
      }
    }
  }

  TEST_CASE("subband layout follows the direction schedule") {
    const ContourletCoeffs c = contourlet_forward(testutil::random_image(64, 64, 60), DirectionSchedule{4, 8, 16});
    CHECK(c.levels == 3);
    REQUIRE(c.subbands.size() == 3);
    CHECK(c.subbands[0].size() == 4);
    CHECK(c.subbands[1].size() == 8);
    CHECK(c.subbands[2].size() == 16);
    CHECK(c.approx.width() == 8);
    std::size_t fine = 0;
    for (const Image& s : c.subbands[2]) fine += s.size();
    CHECK(fine == 64 * 64);  // the finest band is 64x64, split critically
  }

  TEST_CASE("sizes that need padding still round trip") {
    const Image f = testutil::random_image(50, 70, 61);
    const ContourletTransform t(50, 70);
    CHECK(t.padded_width() % 16 == 0);
    CHECK(t.padded_height() % 16 == 0);
    const ContourletCoeffs c = t.forward(f);
    const Image back = t.inverse(c);
    CHECK(back.width() == 50);
    CHECK(back.height() == 70);
    CHECK(rms_diff(back, f) < 1e-9);
  }

  TEST_CASE("single direction schedule and explicit level count") {
    const Image f = testutil::random_image(32, 32, 62);
    CHECK(rms_diff(contourlet_inverse(contourlet_forward(f, DirectionSchedule{1, 2})), f) < 1e-9);
    CHECK_THROWS_AS(contourlet_forward(f, 2, DirectionSchedule{8, 8, 4}), ValidationError);
    CHECK_THROWS_AS(contourlet_forward(f, DirectionSchedule{3}), ValidationError);
    CHECK_THROWS_AS(contourlet_forward(f, DirectionSchedule{}), ValidationError);
  }

  TEST_CASE("direction depth") {
    CHECK(direction_depth(1) == 0);
    CHECK(direction_depth(8) == 3);
    CHECK_THROWS_AS(direction_depth(6), ValidationError);
  }

  TEST_CASE("subband gains are positive and match the schedule") {
    const ContourletTransform t(64, 64);
    const auto gains = t.subband_gains();
    REQUIRE(gains.size() == 3);
    CHECK(gains[0].size() == 8);
    CHECK(gains[2].size() == 4);
    for (const auto& row : gains) {
      for (double gval : row) {
        CHECK(gval > 0.3);
        CHECK(gval < 3.0);
      }
    }
  }
}
