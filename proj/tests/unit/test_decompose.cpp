// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "vardecomp/decompose.hpp"
#include "vardecomp/noise.hpp"

using namespace vardecomp;

namespace {

// Cartoon + texture + noise test image small enough for unit tests.
Image test_image(std::size_t n = 64, double sigma = 10.0) {
  Image f(n, n, 100.0);
  for (std::size_t i = n / 4; i < n / 2; ++i) {
    for (std::size_t j = n / 4; j < 3 * n / 4; ++j) f(i, j) = 180.0;
  }
  const Image tex = testutil::sine_image(n, n, 20.0, 1.0, 30.0);
  for (std::size_t i = n / 2; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f(i, j) += tex(i, j);
  }
  return f + gaussian_noise({sigma, 4}, n, n);
}

StoppingRule short_rule() { return StoppingRule{0.5, 8}; }

void check_finite(const Decomposition& d) {
  CHECK(d.u.all_finite());
  CHECK(d.v.all_finite());
  if (d.w) CHECK(d.w->all_finite());
  CHECK(std::isfinite(d.residual));
}

}  // namespace

TEST_SUITE("decompose") {
  TEST_CASE("model names round trip") {
    for (Model m : {Model::kRof, Model::kBvG, Model::kBvE, Model::kBvH1, Model::kBvGG, Model::kBvGE, Model::kBvGCo}) {
      CHECK(parse_model(model_name(m)) == m);
    }
    CHECK_FALSE(parse_model("bv-x").has_value());
    CHECK(is_three_part(Model::kBvGCo));
    CHECK_FALSE(is_three_part(Model::kBvG));
  }

  TEST_CASE("published presets") {
    CHECK(threshold_from_noise(0.2, 20.0) == doctest::Approx(9.4));
    CHECK(threshold_from_noise(0.5, 20.0) == doctest::Approx(23.5));
    const ModelParams jg = preset_params(PaperPreset::kJG);
    CHECK(*jg.lambda == 10.0);
    CHECK(*jg.mu1 == 1000.0);
    CHECK(*jg.mu2 == 100.0);
    CHECK(jg.window == 3);
    const ModelParams ac2 = preset_params(PaperPreset::kAC2);
    CHECK(*ac2.lambda == 1.0);
    CHECK(*ac2.mu == 500.0);
    CHECK(*ac2.delta == doctest::Approx(9.4));
    CHECK(*preset_params(PaperPreset::kCo).delta == doctest::Approx(23.5));
    CHECK(preset_model(PaperPreset::kCo) == Model::kBvGCo);
    CHECK(parse_preset("AC2") == PaperPreset::kAC2);
    CHECK_FALSE(parse_preset("ac3").has_value());
  }

  TEST_CASE("nu partition") {
    Image v2(16, 16);
    const Image tex = testutil::sine_image(16, 16, 30.0, 1.5, 0.0);
    for (std::size_t i = 0; i < 16; ++i) {
      for (std::size_t j = 8; j < 16; ++j) v2(i, j) = tex(i, j);
    }
    const NuPartition nu = compute_nu(v2, 3);
    for (std::size_t k = 0; k < v2.size(); ++k) {
      CHECK(nu.nu1[k] >= kNuMin - 1e-15);
      CHECK(nu.nu1[k] <= 1.0 - kNuMin + 1e-15);
      CHECK(nu.nu1[k] + nu.nu2[k] == doctest::Approx(1.0));
    }
    CHECK(nu.nu1(8, 12) > nu.nu1(8, 2));
    const NuPartition flat = compute_nu(Image(8, 8, 3.0));
    CHECK(flat.nu1[10] == 0.5);
    CHECK_THROWS_AS(compute_nu(v2, 4), ValidationError);
    CHECK_THROWS_AS(compute_nu(v2, 3, 0.0), ValidationError);
  }

  TEST_CASE("rof splits exactly and lowers total variation") {
    const Image f = test_image(32);
    const Decomposition d = rof(f, 20.0);
    CHECK(max_abs_diff(d.u + d.v, f) < 1e-12);
    CHECK(total_variation(d.u) < total_variation(f));
    CHECK(mean(d.u) == doctest::Approx(mean(f)));
    CHECK(d.max_field_norm <= 1.0 + 1e-12);
    check_finite(d);
  }

  TEST_CASE("rof on a constant image leaves v zero") {
    const Decomposition d = rof(Image(16, 16, 77.0), 10.0);
    CHECK(max_abs(d.v) == 0.0);
    CHECK(max_abs_diff(d.u, Image(16, 16, 77.0)) == 0.0);
  }

  TEST_CASE("bv-g keeps v in the G ball and records a trace") {
    const Image f = test_image(32);
    const Decomposition d = decompose_bv_g(f, 10.0, 50.0, short_rule());
    CHECK(d.max_field_norm <= 1.0 + 1e-12);
    CHECK(std::abs(mean(d.v)) < 1e-9);
    CHECK(d.trace.size() == static_cast<std::size_t>(d.iterations));
    CHECK(d.trace.back().delta == doctest::Approx(d.final_delta));
    CHECK(d.residual == doctest::Approx(l2_norm(f - d.u - d.v)));
    CHECK(d.converged == (d.final_delta <= 0.5));
    check_finite(d);
  }

  TEST_CASE("bv-g with a vanishing texture radius") {
    const Image f = test_image(32);
    const Decomposition d = decompose_bv_g(f, 10.0, 1e-9, short_rule());
    CHECK(max_abs(d.v) < 1e-6);
    check_finite(d);
  }

  TEST_CASE("bv-e with mu 0 has no texture") {
    const Decomposition d = decompose_bv_e(test_image(32), 10.0, 0.0, short_rule(), {}, 3);
    CHECK(max_abs(d.v) < 1e-9);
    check_finite(d);
  }

  TEST_CASE("bv-h1 splits exactly with zero-mean texture") {
    const Image f = test_image(32);
    const Decomposition d = decompose_bv_h1(f, 10.0);
    CHECK(max_abs_diff(d.u + d.v, f) < 1e-12);
    CHECK(std::abs(mean(d.v)) < 1e-9);
    check_finite(d);
  }

  TEST_CASE("bv-g-g weights its components") {
    const Image f = test_image(32);
    const Decomposition d = decompose_bv_g_g(f, 10.0, 200.0, 50.0, 3, 1e-2, short_rule());
    REQUIRE(d.nu.has_value());
    REQUIRE(d.w.has_value());
    CHECK(max_abs_diff(d.effective_v(), mul(d.nu->nu1, d.v)) == 0.0);
    CHECK(max_abs_diff(*d.effective_w(), mul(d.nu->nu2, *d.w)) == 0.0);
    CHECK(d.residual == doctest::Approx(l2_norm(f - d.u - d.effective_v() - *d.effective_w())));
    check_finite(d);
  }

  TEST_CASE("three-part models with delta 0 put nothing in w") {
    const Image f = test_image(64);
    const Decomposition e = decompose_bv_g_e(f, 1.0, 100.0, 0.0, short_rule(), {}, 3);
    CHECK(max_abs(*e.w) < 1e-9);
    const Decomposition c = decompose_bv_g_co(f, 1.0, 100.0, 0.0, kDefaultDirections, short_rule());
    CHECK(max_abs(*c.w) < 1e-6);
    check_finite(e);
    check_finite(c);
  }

  TEST_CASE("three-part models separate noise") {
    const Image clean = test_image(64, 0.0);
    const Image f = test_image(64, 15.0);
    const Decomposition c = decompose_bv_g_co(f, 1.0, 100.0, 10.0, kDefaultDirections, short_rule());
    // w carries a good part of the noise and little of the clean image.
    const Image noise = f - clean;
    CHECK(inner(*c.w, noise) > 0.3 * inner(noise, noise));
    check_finite(c);
  }

  TEST_CASE("zero and constant images are fixed points") {
    for (double value : {0.0, 55.0}) {
      const Image f(64, 64, value);
      for (Model m : {Model::kBvG, Model::kBvGE, Model::kBvGCo, Model::kBvGG}) {
        ModelParams p;
        p.lambda = 1.0;
        p.mu = 10.0;
        p.mu1 = 10.0;
        p.mu2 = 10.0;
        p.delta = 5.0;
        p.wavelet_levels = 3;
        p.stop = short_rule();
        const Decomposition d = run_model(m, f, p);
        CHECK(max_abs_diff(d.u, f) < 1e-6);
        CHECK(max_abs(d.v) < 1e-6);
        if (d.w) CHECK(max_abs(*d.w) < 1e-6);
        check_finite(d);
      }
    }
  }

  TEST_CASE("runs are deterministic") {
    const Image f = test_image(64);
    const Decomposition a = decompose_bv_g_co(f, 1.0, 100.0, 10.0, kDefaultDirections, short_rule());
    const Decomposition b = decompose_bv_g_co(f, 1.0, 100.0, 10.0, kDefaultDirections, short_rule());
    CHECK(a.u == b.u);
    CHECK(a.v == b.v);
    CHECK(*a.w == *b.w);
  }

  TEST_CASE("parameter validation") {
    ModelParams p;
    p.lambda = 10.0;
    p.mu1 = 100.0;
    auto errors = validate_params(Model::kBvGG, p);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0] == "model bv-g-g requires --mu2");
    p.mu2 = -1.0;
    CHECK(validate_params(Model::kBvGG, p).front() == "--mu2 must be > 0");
    CHECK(validate_params(Model::kRof, p).empty());
    p.directions = {8, 6};
    CHECK_FALSE(validate_params(Model::kRof, p).empty());
    CHECK_THROWS_AS(run_model(Model::kBvGG, Image(8, 8), p), ValidationError);
    CHECK_THROWS_AS(decompose_bv_g(Image(8, 8), 0.0, 1.0), ValidationError);
    CHECK_THROWS_AS(decompose_bv_g_co(Image(64, 64), 1.0, 1.0, -1.0), ValidationError);
    CHECK_THROWS_AS(decompose_bv_g(Image(8, 8), 1.0, 1.0, StoppingRule{0.0, 5}), ValidationError);
    Image bad(8, 8);
    bad[0] = NAN;
    CHECK_THROWS_AS(rof(bad, 1.0), ValidationError);
  }

  TEST_CASE("run_model records the resolved parameters") {
    const ModelParams p = preset_params(PaperPreset::kAC2);
    ModelParams q = p;
    q.stop = short_rule();
    q.wavelet_levels = 3;
    const Decomposition d = run_model(Model::kBvGE, test_image(64), q);
    CHECK(d.model == Model::kBvGE);
    CHECK(*d.params.delta == doctest::Approx(9.4));
    CHECK(d.params.wavelet_levels == 3);
  }
}
