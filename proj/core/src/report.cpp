// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace vardecomp {

namespace {

using nlohmann::ordered_json;

ordered_json optional_number(const std::optional<double>& x) { return x ? ordered_json(*x) : ordered_json(nullptr); }

ordered_json params_object(Model model, const ModelParams& p) {
  ordered_json j;
  j["model"] = std::string(model_name(model));
  j["lambda"] = optional_number(p.lambda);
  j["mu"] = optional_number(p.mu);
  j["mu1"] = optional_number(p.mu1);
  j["mu2"] = optional_number(p.mu2);
  j["delta"] = optional_number(p.delta);
  j["window"] = p.window;
  j["kappa"] = p.kappa;
  j["levels"] = p.wavelet_levels;
  j["dirs"] = p.directions;
  j["tau"] = optional_number(p.projector.tau);
  j["tau_default"] = kDefaultTau;
  j["n_iter"] = p.projector.n_iter;
  j["tol"] = optional_number(p.projector.tol);
  j["enforce_tau_bound"] = p.projector.enforce_tau_bound;
  j["epsilon"] = p.stop.epsilon;
  j["n_step"] = p.stop.n_step;
  return j;
}

ordered_json files_object(const FileList& files) {
  ordered_json j = ordered_json::object();
  for (const auto& [role, path] : files) j[role] = path;
  return j;
}

std::string fmt(double x, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, x);
  return buf;
}

}  // namespace

std::string params_json(Model model, const ModelParams& params) { return params_object(model, params).dump(2); }

std::string phantom_spec_json(const PhantomSpec& spec) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "phantom_spec";
  j["width"] = spec.width;
  j["height"] = spec.height;
  j["background"] = spec.background;
  ordered_json shapes = ordered_json::array();
  for (const Shape& s : spec.shapes) {
    ordered_json o;
    if (const auto* r = std::get_if<Rectangle>(&s)) {
      o = {{"type", "rectangle"}, {"row0", r->row0}, {"col0", r->col0}, {"rows", r->rows}, {"cols", r->cols},
           {"value", r->value}};
    } else if (const auto* d = std::get_if<Disc>(&s)) {
      o = {{"type", "disc"}, {"row", d->row}, {"col", d->col}, {"radius", d->radius}, {"value", d->value}};
    } else {
      const auto& p = std::get<Polygon>(s);
      o = {{"type", "polygon"}, {"vertices", p.vertices}, {"value", p.value}};
    }
    shapes.push_back(o);
  }
  j["shapes"] = shapes;
  ordered_json patches = ordered_json::array();
  for (const SinePatch& p : spec.patches) {
    patches.push_back({{"row0", p.domain.row0},
                       {"col0", p.domain.col0},
                       {"rows", p.domain.rows},
                       {"cols", p.domain.cols},
                       {"amplitude", p.amplitude},
                       {"omega", p.omega},
                       {"theta_deg", p.theta_deg},
                       {"phase", p.phase}});
  }
  j["patches"] = patches;
  j["noise"] = {{"sigma", spec.noise.sigma}, {"seed", spec.noise.seed}, {"generator", "mt19937_64+box-muller"}};
  return j.dump(2);
}

std::string decomposition_report(const Decomposition& dec, const std::string& input, const FileList& files,
                                 const FileList& previews, double runtime_seconds) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "decomposition";
  j["input"] = input;
  j["width"] = dec.u.width();
  j["height"] = dec.u.height();
  j["params"] = params_object(dec.model, dec.params);
  j["iterations"] = dec.iterations;
  j["final_delta"] = dec.final_delta;
  j["converged"] = dec.converged;
  j["residual_l2"] = dec.residual;
  j["max_field_norm"] = dec.max_field_norm;
  j["norms"] = {{"u_l2", l2_norm(dec.u)},
                {"v_l2", l2_norm(dec.v)},
                {"w_l2", dec.w ? ordered_json(l2_norm(*dec.w)) : ordered_json(nullptr)},
                {"tv_u", total_variation(dec.u)}};
  j["nu_weighted"] = dec.nu.has_value();
  ordered_json trace = ordered_json::array();
  for (const auto& r : dec.trace) {
    trace.push_back({{"iteration", r.iteration}, {"delta", r.delta}, {"residual_l2", r.residual}, {"tv_u", r.tv_u}});
  }
  j["trace"] = trace;
  j["files"] = files_object(files);
  j["previews"] = files_object(previews);
  j["display_offset"] = kDisplayOffset;
  j["display_offset_applied_to"] = {"v", "w"};
  j["runtime_seconds"] = runtime_seconds;
  return j.dump(2);
}

std::string metrics_report(const MetricsReport& m, const std::string& context) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "metrics";
  j["err_u"] = m.err_u;
  j["err_v"] = m.err_v;
  j["residue"] = optional_number(m.residue);
  j["runtime_seconds"] = m.runtime_seconds;
  j["context"] = ordered_json::parse(context.empty() ? "{}" : context);
  return j.dump(2);
}

std::string sweep_report(const std::vector<SweepRow>& rows, const QuadraticFit& fit, const NoiseSpec& noise,
                         const std::string& reference) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["kind"] = "residue_sweep";
  j["reference"] = reference;
  j["noise"] = {{"sigma", noise.sigma}, {"seed", noise.seed}};
  ordered_json table = ordered_json::array();
  for (const auto& r : rows) table.push_back({{"amplitude", r.amplitude}, {"metric", r.metric}});
  j["rows"] = table;
  j["fit"] = {{"model", "metric = c * A^2"}, {"coefficient", fit.coefficient}, {"r_squared", fit.r_squared}};
  return j.dump(2);
}

std::string metrics_table(const std::vector<std::pair<std::string, MetricsReport>>& runs) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%-12s %14s %14s %16s %10s\n", "run", "err_u", "err_v", "residue", "seconds");
  out << line;
  for (const auto& [name, m] : runs) {
    std::snprintf(line, sizeof line, "%-12s %14s %14s %16s %10s\n", name.c_str(), fmt(m.err_u, 2).c_str(),
                  fmt(m.err_v, 2).c_str(), m.residue ? fmt(*m.residue, 2).c_str() : "-",
                  fmt(m.runtime_seconds, 2).c_str());
    out << line;
  }
  return out.str();
}

std::string sweep_table(const std::vector<SweepRow>& rows, const QuadraticFit& fit) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%8s %20s\n", "A", "||g_f - g_b||");
  out << line;
  for (const auto& r : rows) {
    std::snprintf(line, sizeof line, "%8.2f %20.2f\n", r.amplitude, r.metric);
    out << line;
  }
  std::snprintf(line, sizeof line, "fit: metric = %.6g * A^2, R^2 = %.5f\n", fit.coefficient, fit.r_squared);
  out << line;
  return out.str();
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "amplitude,metric\n";
  out.precision(17);
  for (const auto& r : rows) out << r.amplitude << ',' << r.metric << '\n';
  return out.str();
}

std::string metrics_csv(const std::vector<std::pair<std::string, MetricsReport>>& runs) {
  std::ostringstream out;
  out << "run,err_u,err_v,residue,seconds\n";
  out.precision(17);
  for (const auto& [name, m] : runs) {
    out << name << ',' << m.err_u << ',' << m.err_v << ',';
    if (m.residue) out << *m.residue;
    out << ',' << m.runtime_seconds << '\n';
  }
  return out.str();
}

}  // namespace vardecomp
