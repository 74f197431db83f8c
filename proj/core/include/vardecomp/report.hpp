// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vardecomp/decompose.hpp"
#include "vardecomp/metrics.hpp"
#include "vardecomp/phantom.hpp"

namespace vardecomp {

/// Version of every JSON document below; bumped on incompatible changes.
inline constexpr int kReportSchemaVersion = 1;

/// Offset added to signed components (v, w) in 8-bit previews.
inline constexpr double kDisplayOffset = 128.0;

/// (role, path) pairs, e.g. {"u", "out/u.vdf"}.
using FileList = std::vector<std::pair<std::string, std::string>>;

/// All parameters of `model`, resolved, as a JSON object.
std::string params_json(Model model, const ModelParams& params);

std::string phantom_spec_json(const PhantomSpec& spec);

/// Decomposition run: model, parameters, iteration count, last delta,
/// convergence flag, residual, per-round trace and written files.
std::string decomposition_report(const Decomposition& dec, const std::string& input, const FileList& files,
                                 const FileList& previews, double runtime_seconds);

/// `context` is a JSON object merged in under "context" (for example the
/// decomposition report of the evaluated run); pass "{}" when there is none.
std::string metrics_report(const MetricsReport& m, const std::string& context = "{}");

std::string sweep_report(const std::vector<SweepRow>& rows, const QuadraticFit& fit, const NoiseSpec& noise,
                         const std::string& reference);

/// Aligned plain-text tables.
std::string metrics_table(const std::vector<std::pair<std::string, MetricsReport>>& runs);
std::string sweep_table(const std::vector<SweepRow>& rows, const QuadraticFit& fit);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// run,err_u,err_v,residue,seconds; an absent residue is an empty field.
std::string metrics_csv(const std::vector<std::pair<std::string, MetricsReport>>& runs);

}  // namespace vardecomp
