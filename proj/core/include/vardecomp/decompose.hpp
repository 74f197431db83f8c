// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vardecomp/contourlet.hpp"
#include "vardecomp/image.hpp"
#include "vardecomp/shrinkage.hpp"
#include "vardecomp/tv.hpp"

namespace vardecomp {

/// Outer-loop stopping rule: stop once the largest pixel change of every
/// component is <= epsilon, or after n_step rounds.
struct StoppingRule {
  double epsilon = 0.5;
  int n_step = 50;

  void validate() const;
};

/// Texture/noise weighting of the local adaptive model; nu2 = 1 - nu1.
struct NuPartition {
  Image nu1;
  Image nu2;
  int window = 3;
  double kappa = 1e-2;
};

inline constexpr double kNuMin = 0.01;

/// Local variance of v2 on an odd window (mirrored borders), mapped affinely
/// onto [kNuMin, 1 - kNuMin]. A constant variance map gives nu1 = 0.5.
NuPartition compute_nu(const Image& v2, int window = 3, double kappa = 1e-2);

enum class Model { kRof, kBvG, kBvE, kBvH1, kBvGG, kBvGE, kBvGCo };

std::string_view model_name(Model m) noexcept;
std::optional<Model> parse_model(std::string_view name) noexcept;
bool is_three_part(Model m) noexcept;

/// Every knob of every model. Unused fields are ignored; run_model()
/// checks that the ones a model needs are present and in range.
struct ModelParams {
  std::optional<double> lambda;
  std::optional<double> mu;
  std::optional<double> mu1;
  std::optional<double> mu2;
  std::optional<double> delta;
  int window = 3;
  double kappa = 1e-2;
  int wavelet_levels = kDefaultWaveletLevels;
  DirectionSchedule directions = kDefaultDirections;
  ProjectorConfig projector;
  StoppingRule stop;
};

enum class PaperPreset { kJG, kAC2, kCo };

std::optional<PaperPreset> parse_preset(std::string_view name) noexcept;
std::string_view preset_name(PaperPreset p) noexcept;
/// Model and parameter set of a published experiment.
Model preset_model(PaperPreset p) noexcept;
ModelParams preset_params(PaperPreset p);

/// Noise threshold from a noise-level multiplier: 2.35 * kappa_t * sigma.
/// Reproduces the published pairs (0.2, 20) -> 9.4 and (0.5, 20) -> 23.5.
double threshold_from_noise(double kappa_t, double sigma);

struct IterationRecord {
  int iteration = 0;
  double delta = 0.0;
  /// L2 norm of the model residual after this round.
  double residual = 0.0;
  double tv_u = 0.0;
};

struct Decomposition {
  Model model = Model::kRof;
  Image u;
  Image v;
  std::optional<Image> w;
  std::optional<NuPartition> nu;
  int iterations = 0;
  double final_delta = 0.0;
  bool converged = true;
  /// L2 norm of f - u - v (- w, or - nu1 v - nu2 w for the adaptive model).
  double residual = 0.0;
  /// Largest |p| of the field certifying the final v as mu div p.
  double max_field_norm = 0.0;
  std::vector<IterationRecord> trace;
  ModelParams params;

  /// Texture part as it enters the reconstruction (nu1 v for the adaptive model).
  Image effective_v() const;
  /// Noise part as it enters the reconstruction; empty for two-part models.
  std::optional<Image> effective_w() const;
};

Decomposition rof(const Image& f, double lambda, const ProjectorConfig& cfg = {});
Decomposition decompose_bv_g(const Image& f, double lambda, double mu, const StoppingRule& stop = {},
                             const ProjectorConfig& cfg = {});
Decomposition decompose_bv_e(const Image& f, double lambda, double mu, const StoppingRule& stop = {},
                             const ProjectorConfig& cfg = {}, int levels = kDefaultWaveletLevels);
Decomposition decompose_bv_h1(const Image& f, double lambda, const ProjectorConfig& cfg = {});
Decomposition decompose_bv_g_g(const Image& f, double lambda, double mu1, double mu2, int window = 3,
                               double kappa = 1e-2, const StoppingRule& stop = {}, const ProjectorConfig& cfg = {});
Decomposition decompose_bv_g_e(const Image& f, double lambda, double mu, double delta, const StoppingRule& stop = {},
                               const ProjectorConfig& cfg = {}, int levels = kDefaultWaveletLevels);
Decomposition decompose_bv_g_co(const Image& f, double lambda, double mu, double delta,
                                const DirectionSchedule& directions = kDefaultDirections,
                                const StoppingRule& stop = {}, const ProjectorConfig& cfg = {});

/// Validates `params` for `model` and dispatches to the matching algorithm.
Decomposition run_model(Model model, const Image& f, const ModelParams& params);

/// Human-readable list of parameter problems for `model`; empty when valid.
std::vector<std::string> validate_params(Model model, const ModelParams& params);

}  // namespace vardecomp
