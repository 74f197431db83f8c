// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "vardecomp/autocorrelation.hpp"

namespace vardecomp {

double residue_metric(const Image& w, const Image& w0) {
  require_same_shape(w, w0, "residue_metric");
  return l2_norm(autocorrelation(w) - autocorrelation(w0));
}

MetricsReport evaluate(const Image& u, const Image& v, const std::optional<Image>& w, const Phantom& phantom,
                       double runtime_seconds) {
  require_same_shape(u, phantom.u0, "evaluate (u)");
  require_same_shape(v, phantom.v0, "evaluate (v)");
  MetricsReport r;
  r.err_u = l2_norm(u - phantom.u0);
  r.err_v = l2_norm(v - phantom.v0);
  if (w) {
    require_same_shape(*w, phantom.w0, "evaluate (w)");
    r.residue = residue_metric(*w, phantom.w0);
  }
  r.runtime_seconds = runtime_seconds;
  return r;
}

MetricsReport evaluate(const Decomposition& dec, const Phantom& phantom, double runtime_seconds) {
  if (!dec.w && phantom.spec.noise.sigma > 0.0 && is_three_part(dec.model)) {
    throw ValidationError("evaluate: three-part decomposition without a noise component");
  }
  return evaluate(dec.u, dec.effective_v(), dec.effective_w(), phantom, runtime_seconds);
}

std::vector<double> default_sweep_amplitudes() { return {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; }

std::vector<SweepRow> residue_sweep(const Image& d, const NoiseSpec& noise, const std::vector<double>& amplitudes,
                                    int jobs) {
  if (amplitudes.empty()) throw ValidationError("residue_sweep: amplitude list is empty");
  if (jobs < 1) throw ValidationError("residue_sweep: jobs must be >= 1");
  for (double a : amplitudes) {
    if (!std::isfinite(a)) throw ValidationError("residue_sweep: amplitudes must be finite");
  }
  const Image b = gaussian_noise(noise, d.width(), d.height());
  std::vector<SweepRow> rows(amplitudes.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < amplitudes.size(); k = next++) {
      rows[k] = {amplitudes[k], residue_metric(amplitudes[k] * d + b, b)};
    }
  };
  const auto n_threads = static_cast<std::size_t>(std::min<std::size_t>(static_cast<std::size_t>(jobs), amplitudes.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return rows;
}

QuadraticFit fit_quadratic(const std::vector<SweepRow>& rows) {
  if (rows.empty()) throw ValidationError("fit_quadratic: no rows");
  double sxx = 0.0;
  double sxy = 0.0;
  double mean_y = 0.0;
  for (const auto& r : rows) {
    const double x = r.amplitude * r.amplitude;
    sxx += x * x;
    sxy += x * r.metric;
    mean_y += r.metric;
  }
  mean_y /= static_cast<double>(rows.size());
  QuadraticFit fit;
  fit.coefficient = sxx > 0.0 ? sxy / sxx : 0.0;
  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (const auto& r : rows) {
    const double e = r.metric - fit.coefficient * r.amplitude * r.amplitude;
    ss_res += e * e;
    ss_tot += (r.metric - mean_y) * (r.metric - mean_y);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
  return fit;
}

}  // namespace vardecomp
