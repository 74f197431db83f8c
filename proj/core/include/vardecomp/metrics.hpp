// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "vardecomp/decompose.hpp"
#include "vardecomp/image.hpp"
#include "vardecomp/noise.hpp"
#include "vardecomp/phantom.hpp"

namespace vardecomp {

/// ||autocorrelation(w) - autocorrelation(w0)||_2.
double residue_metric(const Image& w, const Image& w0);

struct MetricsReport {
  double err_u = 0.0;
  double err_v = 0.0;
  /// Absent when the decomposition has no noise component.
  std::optional<double> residue;
  double runtime_seconds = 0.0;
};

/// Errors of (u, v, w) against the phantom references. The adaptive
/// three-part model is scored on its weighted parts nu1 v and nu2 w.
MetricsReport evaluate(const Decomposition& dec, const Phantom& phantom, double runtime_seconds = 0.0);

/// Same, from bare components (w may be absent).
MetricsReport evaluate(const Image& u, const Image& v, const std::optional<Image>& w, const Phantom& phantom,
                       double runtime_seconds = 0.0);

struct SweepRow {
  double amplitude = 0.0;
  double metric = 0.0;
};

/// The ten published leak amplitudes 0.05, 0.1, 0.2, ..., 0.9.
std::vector<double> default_sweep_amplitudes();

/// metric(A) = residue_metric(A d + b, b) with b drawn from `noise`, one row
/// per amplitude in input order. `jobs` > 1 evaluates rows on worker threads;
/// the result does not depend on it.
std::vector<SweepRow> residue_sweep(const Image& d, const NoiseSpec& noise, const std::vector<double>& amplitudes,
                                    int jobs = 1);

/// Least-squares fit metric = c A^2 through the origin.
struct QuadraticFit {
  double coefficient = 0.0;
  /// 1 - SS_res / SS_tot with SS_tot about the mean metric.
  double r_squared = 0.0;
};

QuadraticFit fit_quadratic(const std::vector<SweepRow>& rows);

}  // namespace vardecomp
