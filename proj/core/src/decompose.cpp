// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace vardecomp {

namespace {

constexpr double kNoiseThresholdFactor = 2.35;

bool positive(const std::optional<double>& x) { return x && std::isfinite(*x) && *x > 0.0; }
bool nonnegative(const std::optional<double>& x) { return x && std::isfinite(*x) && *x >= 0.0; }

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

void require_input(const Image& f, const char* what) {
  if (f.empty()) throw ValidationError(std::string(what) + ": empty image");
  if (!f.all_finite()) throw ValidationError(std::string(what) + ": input has non-finite pixels");
}

std::ptrdiff_t reflect(std::ptrdiff_t k, std::ptrdiff_t n) {
  const std::ptrdiff_t period = 2 * n;
  k %= period;
  if (k < 0) k += period;
  return k < n ? k : period - 1 - k;
}

// u = g - P_{G_lambda}(g): the structure step shared by every model.
Image structure_step(const Image& g, double lambda, const ProjectorConfig& cfg) {
  return g - project_G(g, lambda, cfg);
}

struct Loop {
  const Image& f;
  const StoppingRule& stop;
  Decomposition& out;

  // Runs `round` until the stopping rule fires; `round` returns the max
  // pixel change of the round and the residual after it.
  void run(const std::function<std::pair<double, double>()>& round) {
    out.converged = false;
    for (int n = 1; n <= stop.n_step; ++n) {
      const auto [delta, residual] = round();
      if (!std::isfinite(delta)) throw NumericalError("decomposition diverged to a non-finite value");
      out.iterations = n;
      out.final_delta = delta;
      out.residual = residual;
      out.trace.push_back({n, delta, residual, total_variation(out.u)});
      if (delta <= stop.epsilon) {
        out.converged = true;
        break;
      }
    }
  }
};

Decomposition three_part_thresholding(Model model, const Image& f, double lambda, double mu,
                                      const StoppingRule& stop, const ProjectorConfig& cfg,
                                      const std::function<Image(const Image&)>& shrink) {
  Decomposition out;
  out.model = model;
  out.u = Image::zeros_like(f);
  out.v = Image::zeros_like(f);
  out.w = Image::zeros_like(f);
  Loop{f, stop, out}.run([&] {
    Image& w = *out.w;
    const Image g = f - out.u - out.v;
    Image w_next = g - shrink(g);
    Projection pv = chambolle_project(f - out.u - w_next, mu, cfg);
    Image u_next = structure_step(f - pv.value - w_next, lambda, cfg);
    const double delta = std::max({max_abs_diff(u_next, out.u), max_abs_diff(pv.value, out.v), max_abs_diff(w_next, w)});
    out.u = std::move(u_next);
    out.v = std::move(pv.value);
    w = std::move(w_next);
    out.max_field_norm = pv.field.max_norm();
    return std::pair{delta, l2_norm(f - out.u - out.v - w)};
  });
  return out;
}

}  // namespace

void StoppingRule::validate() const {
  require(std::isfinite(epsilon) && epsilon > 0.0, "stopping rule: epsilon must be > 0");
  require(n_step >= 1, "stopping rule: n_step must be >= 1");
}

NuPartition compute_nu(const Image& v2, int window, double kappa) {
  require(window >= 3 && window % 2 == 1, "compute_nu: window must be odd and >= 3, got " + std::to_string(window));
  require(std::isfinite(kappa) && kappa > 0.0, "compute_nu: kappa must be > 0");
  require_input(v2, "compute_nu");
  const auto rows = static_cast<std::ptrdiff_t>(v2.height());
  const auto cols = static_cast<std::ptrdiff_t>(v2.width());
  const std::ptrdiff_t r = window / 2;
  const double count = static_cast<double>(window) * window;
  Image var(v2.width(), v2.height());
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    for (std::ptrdiff_t j = 0; j < cols; ++j) {
      double s = 0.0;
      double s2 = 0.0;
      for (std::ptrdiff_t di = -r; di <= r; ++di) {
        const std::size_t ii = static_cast<std::size_t>(reflect(i + di, rows));
        for (std::ptrdiff_t dj = -r; dj <= r; ++dj) {
          const double x = v2(ii, static_cast<std::size_t>(reflect(j + dj, cols)));
          s += x;
          s2 += x * x;
        }
      }
      const double m = s / count;
      var(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = std::max(0.0, s2 / count - m * m);
    }
  }
  const auto [lo, hi] = std::minmax_element(var.pixels().begin(), var.pixels().end());
  const double vmin = *lo;
  const double spread = *hi - vmin;

  NuPartition nu;
  nu.window = window;
  nu.kappa = kappa;
  nu.nu1 = Image(v2.width(), v2.height(), 0.5);
  if (spread > 0.0) {
    for (std::size_t k = 0; k < var.size(); ++k) {
      nu.nu1[k] = kNuMin + (1.0 - 2.0 * kNuMin) * ((var[k] - vmin) / spread);
    }
  }
  nu.nu2 = Image(v2.width(), v2.height());
  for (std::size_t k = 0; k < var.size(); ++k) nu.nu2[k] = 1.0 - nu.nu1[k];
  return nu;
}

std::string_view model_name(Model m) noexcept {
  switch (m) {
    case Model::kRof: return "rof";
    case Model::kBvG: return "bv-g";
    case Model::kBvE: return "bv-e";
    case Model::kBvH1: return "bv-h1";
    case Model::kBvGG: return "bv-g-g";
    case Model::kBvGE: return "bv-g-e";
    case Model::kBvGCo: return "bv-g-co";
  }
  return "unknown";
}

std::optional<Model> parse_model(std::string_view name) noexcept {
  for (Model m : {Model::kRof, Model::kBvG, Model::kBvE, Model::kBvH1, Model::kBvGG, Model::kBvGE, Model::kBvGCo}) {
    if (model_name(m) == name) return m;
  }
  return std::nullopt;
}

bool is_three_part(Model m) noexcept { return m == Model::kBvGG || m == Model::kBvGE || m == Model::kBvGCo; }

std::optional<PaperPreset> parse_preset(std::string_view name) noexcept {
  if (name == "JG") return PaperPreset::kJG;
  if (name == "AC2") return PaperPreset::kAC2;
  if (name == "Co") return PaperPreset::kCo;
  return std::nullopt;
}

std::string_view preset_name(PaperPreset p) noexcept {
  switch (p) {
    case PaperPreset::kJG: return "JG";
    case PaperPreset::kAC2: return "AC2";
    case PaperPreset::kCo: return "Co";
  }
  return "unknown";
}

Model preset_model(PaperPreset p) noexcept {
  switch (p) {
    case PaperPreset::kJG: return Model::kBvGG;
    case PaperPreset::kAC2: return Model::kBvGE;
    case PaperPreset::kCo: return Model::kBvGCo;
  }
  return Model::kBvGG;
}

ModelParams preset_params(PaperPreset p) {
  ModelParams params;
  switch (p) {
    case PaperPreset::kJG:
      params.lambda = 10.0;
      params.mu1 = 1000.0;
      params.mu2 = 100.0;
      params.window = 3;
      break;
    case PaperPreset::kAC2:
      params.lambda = 1.0;
      params.mu = 500.0;
      params.delta = threshold_from_noise(0.2, 20.0);
      break;
    case PaperPreset::kCo:
      params.lambda = 1.0;
      params.mu = 500.0;
      params.delta = threshold_from_noise(0.5, 20.0);
      break;
  }
  return params;
}

double threshold_from_noise(double kappa_t, double sigma) {
  require(std::isfinite(kappa_t) && kappa_t >= 0.0, "threshold: kappa must be >= 0");
  require(std::isfinite(sigma) && sigma >= 0.0, "threshold: sigma must be >= 0");
  return kNoiseThresholdFactor * kappa_t * sigma;
}

Image Decomposition::effective_v() const { return nu ? mul(nu->nu1, v) : v; }

std::optional<Image> Decomposition::effective_w() const {
  if (!w) return std::nullopt;
  return nu ? mul(nu->nu2, *w) : *w;
}

Decomposition rof(const Image& f, double lambda, const ProjectorConfig& cfg) {
  require_input(f, "rof");
  Decomposition out;
  out.model = Model::kRof;
  out.params.lambda = lambda;
  out.params.projector = cfg;
  Projection p = chambolle_project(f, lambda, cfg);
  out.v = std::move(p.value);
  out.u = f - out.v;
  out.iterations = p.report.iterations;
  out.final_delta = p.report.last_delta;
  out.converged = p.report.reached_tol || !cfg.tol;
  out.max_field_norm = p.report.max_field_norm;
  out.residual = l2_norm(f - out.u - out.v);
  return out;
}

Decomposition decompose_bv_g(const Image& f, double lambda, double mu, const StoppingRule& stop,
                             const ProjectorConfig& cfg) {
  require_input(f, "bv-g");
  require(positive(lambda) && positive(mu), "bv-g: lambda and mu must be > 0");
  stop.validate();
  Decomposition out;
  out.model = Model::kBvG;
  out.params.lambda = lambda;
  out.params.mu = mu;
  out.params.stop = stop;
  out.params.projector = cfg;
  out.u = Image::zeros_like(f);
  out.v = Image::zeros_like(f);
  Loop{f, stop, out}.run([&] {
    Projection pv = chambolle_project(f - out.u, mu, cfg);
    Image u_next = structure_step(f - pv.value, lambda, cfg);
    const double delta = std::max(max_abs_diff(u_next, out.u), max_abs_diff(pv.value, out.v));
    out.u = std::move(u_next);
    out.v = std::move(pv.value);
    out.max_field_norm = pv.field.max_norm();
    return std::pair{delta, l2_norm(f - out.u - out.v)};
  });
  return out;
}

Decomposition decompose_bv_e(const Image& f, double lambda, double mu, const StoppingRule& stop,
                             const ProjectorConfig& cfg, int levels) {
  require_input(f, "bv-e");
  require(positive(lambda), "bv-e: lambda must be > 0");
  require(nonnegative(mu), "bv-e: mu must be >= 0");
  stop.validate();
  Decomposition out;
  out.model = Model::kBvE;
  out.params.lambda = lambda;
  out.params.mu = mu;
  out.params.stop = stop;
  out.params.projector = cfg;
  out.params.wavelet_levels = levels;
  out.u = Image::zeros_like(f);
  out.v = Image::zeros_like(f);
  Loop{f, stop, out}.run([&] {
    Image v_next = project_E(f - out.u, mu, levels);
    Image u_next = structure_step(f - v_next, lambda, cfg);
    const double delta = std::max(max_abs_diff(u_next, out.u), max_abs_diff(v_next, out.v));
    out.u = std::move(u_next);
    out.v = std::move(v_next);
    return std::pair{delta, l2_norm(f - out.u - out.v)};
  });
  return out;
}

Decomposition decompose_bv_h1(const Image& f, double lambda, const ProjectorConfig& cfg) {
  require_input(f, "bv-h1");
  require(positive(lambda), "bv-h1: lambda must be > 0");
  Decomposition out;
  out.model = Model::kBvH1;
  out.params.lambda = lambda;
  out.params.projector = cfg;
  Projection p = chambolle_project_k(f, lambda, neumann_negative_laplacian(), cfg);
  out.v = std::move(p.value);
  out.u = f - out.v;
  out.iterations = p.report.iterations;
  out.final_delta = p.report.last_delta;
  out.converged = p.report.reached_tol || !cfg.tol;
  out.max_field_norm = p.report.max_field_norm;
  out.residual = l2_norm(f - out.u - out.v);
  return out;
}

Decomposition decompose_bv_g_g(const Image& f, double lambda, double mu1, double mu2, int window, double kappa,
                               const StoppingRule& stop, const ProjectorConfig& cfg) {
  require_input(f, "bv-g-g");
  require(positive(lambda) && positive(mu1) && positive(mu2), "bv-g-g: lambda, mu1 and mu2 must be > 0");
  require(std::isfinite(kappa) && kappa > 0.0, "bv-g-g: kappa must be > 0");
  stop.validate();

  const Decomposition prelim = decompose_bv_g(f, lambda, mu1, stop, cfg);
  NuPartition nu = compute_nu(prelim.v, window, kappa);
  const Image w_den = [&] {
    Image d = nu.nu2;
    for (double& x : d.pixels()) x += kappa;
    return d;
  }();
  const Image v_den = [&] {
    Image d = nu.nu1;
    for (double& x : d.pixels()) x += kappa;
    return d;
  }();
  const auto divide = [](Image num, const Image& den) {
    for (std::size_t k = 0; k < num.size(); ++k) num[k] /= den[k];
    return num;
  };

  Decomposition out;
  out.model = Model::kBvGG;
  out.params.lambda = lambda;
  out.params.mu1 = mu1;
  out.params.mu2 = mu2;
  out.params.window = window;
  out.params.kappa = kappa;
  out.params.stop = stop;
  out.params.projector = cfg;
  out.u = Image::zeros_like(f);
  out.v = Image::zeros_like(f);
  out.w = Image::zeros_like(f);
  Loop{f, stop, out}.run([&] {
    Image& w = *out.w;
    Image w_next = project_G(divide(f - out.u - mul(nu.nu1, out.v), w_den), mu2, cfg);
    Projection pv = chambolle_project(divide(f - out.u - mul(nu.nu2, w_next), v_den), mu1, cfg);
    const Image textured = mul(nu.nu1, pv.value) + mul(nu.nu2, w_next);
    Image u_next = structure_step(f - textured, lambda, cfg);
    const double delta = std::max({max_abs_diff(u_next, out.u), max_abs_diff(pv.value, out.v), max_abs_diff(w_next, w)});
    out.u = std::move(u_next);
    out.v = std::move(pv.value);
    w = std::move(w_next);
    out.max_field_norm = pv.field.max_norm();
    return std::pair{delta, l2_norm(f - out.u - textured)};
  });
  out.nu = std::move(nu);
  return out;
}

Decomposition decompose_bv_g_e(const Image& f, double lambda, double mu, double delta, const StoppingRule& stop,
                               const ProjectorConfig& cfg, int levels) {
  require_input(f, "bv-g-e");
  require(positive(lambda) && positive(mu), "bv-g-e: lambda and mu must be > 0");
  require(nonnegative(delta), "bv-g-e: delta must be >= 0");
  stop.validate();
  dwt2_forward(Image::zeros_like(f), levels);  // validates the depth up front
  Decomposition out = three_part_thresholding(Model::kBvGE, f, lambda, mu, stop, cfg,
                                              [&](const Image& g) { return wst(g, 2.0 * delta, levels); });
  out.params.lambda = lambda;
  out.params.mu = mu;
  out.params.delta = delta;
  out.params.stop = stop;
  out.params.projector = cfg;
  out.params.wavelet_levels = levels;
  return out;
}

Decomposition decompose_bv_g_co(const Image& f, double lambda, double mu, double delta,
                                const DirectionSchedule& directions, const StoppingRule& stop,
                                const ProjectorConfig& cfg) {
  require_input(f, "bv-g-co");
  require(positive(lambda) && positive(mu), "bv-g-co: lambda and mu must be > 0");
  require(nonnegative(delta), "bv-g-co: delta must be >= 0");
  stop.validate();
  const ContourletTransform transform(f.width(), f.height(), directions);
  Decomposition out = three_part_thresholding(Model::kBvGCo, f, lambda, mu, stop, cfg,
                                              [&](const Image& g) { return cst(g, 2.0 * delta, transform); });
  out.params.lambda = lambda;
  out.params.mu = mu;
  out.params.delta = delta;
  out.params.directions = directions;
  out.params.stop = stop;
  out.params.projector = cfg;
  return out;
}

std::vector<std::string> validate_params(Model model, const ModelParams& p) {
  std::vector<std::string> errors;
  const auto need_positive = [&](const std::optional<double>& x, const char* name) {
    if (!x) {
      errors.push_back(std::string("model ") + std::string(model_name(model)) + " requires --" + name);
    } else if (!positive(x)) {
      errors.push_back(std::string("--") + name + " must be > 0");
    }
  };
  const auto need_nonnegative = [&](const std::optional<double>& x, const char* name) {
    if (!x) {
      errors.push_back(std::string("model ") + std::string(model_name(model)) + " requires --" + name);
    } else if (!nonnegative(x)) {
      errors.push_back(std::string("--") + name + " must be >= 0");
    }
  };
  need_positive(p.lambda, "lambda");
  switch (model) {
    case Model::kRof:
    case Model::kBvH1:
      break;
    case Model::kBvG:
      need_positive(p.mu, "mu");
      break;
    case Model::kBvE:
      need_nonnegative(p.mu, "mu");
      break;
    case Model::kBvGG:
      need_positive(p.mu1, "mu1");
      need_positive(p.mu2, "mu2");
      if (p.window < 3 || p.window % 2 == 0) errors.push_back("--window must be odd and >= 3");
      if (!(p.kappa > 0.0) || !std::isfinite(p.kappa)) errors.push_back("--kappa must be > 0");
      break;
    case Model::kBvGE:
    case Model::kBvGCo:
      need_positive(p.mu, "mu");
      need_nonnegative(p.delta, "delta");
      break;
  }
  if (!(p.stop.epsilon > 0.0) || !std::isfinite(p.stop.epsilon)) errors.push_back("--epsilon must be > 0");
  if (p.stop.n_step < 1) errors.push_back("--n-step must be >= 1");
  if (p.projector.n_iter < 0) errors.push_back("--n-iter must be >= 0");
  if (p.projector.tau && !(*p.projector.tau > 0.0)) errors.push_back("--tau must be > 0");
  if (p.wavelet_levels < 1) errors.push_back("--levels must be >= 1");
  for (int d : p.directions) {
    if (d < 1 || (d & (d - 1)) != 0) errors.push_back("--dirs entries must be powers of two, got " + std::to_string(d));
  }
  if (p.directions.empty()) errors.push_back("--dirs must not be empty");
  return errors;
}

Decomposition run_model(Model model, const Image& f, const ModelParams& p) {
  const auto errors = validate_params(model, p);
  if (!errors.empty()) {
    std::ostringstream msg;
    for (std::size_t k = 0; k < errors.size(); ++k) msg << (k ? "; " : "") << errors[k];
    throw ValidationError(msg.str());
  }
  Decomposition out;
  switch (model) {
    case Model::kRof: out = rof(f, *p.lambda, p.projector); break;
    case Model::kBvG: out = decompose_bv_g(f, *p.lambda, *p.mu, p.stop, p.projector); break;
    case Model::kBvE: out = decompose_bv_e(f, *p.lambda, *p.mu, p.stop, p.projector, p.wavelet_levels); break;
    case Model::kBvH1: out = decompose_bv_h1(f, *p.lambda, p.projector); break;
    case Model::kBvGG:
      out = decompose_bv_g_g(f, *p.lambda, *p.mu1, *p.mu2, p.window, p.kappa, p.stop, p.projector);
      break;
    case Model::kBvGE:
      out = decompose_bv_g_e(f, *p.lambda, *p.mu, *p.delta, p.stop, p.projector, p.wavelet_levels);
      break;
    case Model::kBvGCo:
      out = decompose_bv_g_co(f, *p.lambda, *p.mu, *p.delta, p.directions, p.stop, p.projector);
      break;
  }
  out.params = p;
  return out;
}

}  // namespace vardecomp
