// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp_cli/cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vardecomp/coeff_dump.hpp"
#include "vardecomp/contourlet.hpp"
#include "vardecomp/decompose.hpp"
#include "vardecomp/image_io.hpp"
#include "vardecomp/metrics.hpp"
#include "vardecomp/phantom.hpp"
#include "vardecomp/report.hpp"
#include "vardecomp/wavelet.hpp"

namespace vardecomp::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

class Log {
 public:
  Log(std::ostream& err, const bool& quiet) : err_(err), quiet_(quiet) {}
  void info(const std::string& msg) const {
    if (!quiet_) err_ << "vardecomp: " << msg << '\n';
  }
  void warn(const std::string& msg) const { err_ << "vardecomp: warning: " << msg << '\n'; }
  void error(const std::string& msg) const { err_ << "vardecomp: error: " << msg << '\n'; }

 private:
  std::ostream& err_;
  const bool& quiet_;
};

// Raised for a run that finished but did not meet its stopping rule.
struct NotConverged {};

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open " + path.string() + " for writing");
  os << text << '\n';
  if (!os) throw IoError("write failed: " + path.string());
}

Json read_json(const fs::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(is);
  } catch (const Json::parse_error& e) {
    throw IoError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

Image read_existing(const fs::path& path) {
  if (!fs::exists(path)) throw IoError("missing file " + path.string());
  return read_image(path);
}

// -------------------------------------------------------------------- synth

struct SynthOptions {
  std::string out_dir;
  double sigma = 20.0;
  std::uint64_t seed = kStandardPhantomSeed;
};

int cmd_synth(const SynthOptions& o, std::ostream& out, const Log& log) {
  PhantomSpec spec = standard_phantom_spec();
  spec.noise = NoiseSpec{o.sigma, o.seed};
  const Phantom ph = synth_phantom(spec);

  const fs::path dir(o.out_dir);
  ensure_dir(dir);
  FileList files;
  FileList previews;
  const std::pair<const char*, const Image*> parts[] = {
      {"u0", &ph.u0}, {"v0", &ph.v0}, {"w0", &ph.w0}, {"f0", &ph.f0}};
  for (const auto& [name, img] : parts) {
    const fs::path raw = dir / (std::string(name) + ".raw");
    const fs::path pgm = dir / (std::string(name) + ".pgm");
    write_raw_float(*img, raw);
    const bool signed_part = name[0] == 'v' || name[0] == 'w';
    write_pgm(*img, pgm, signed_part ? kDisplayOffset : 0.0);
    files.emplace_back(name, raw.filename().string());
    previews.emplace_back(name, pgm.filename().string());
  }
  const std::string spec_text = phantom_spec_json(spec);
  write_text(dir / "spec.json", spec_text);
  log.info("wrote phantom to " + dir.string());

  Json summary;
  summary["schema_version"] = kReportSchemaVersion;
  summary["kind"] = "synth";
  summary["out"] = dir.string();
  Json fj = Json::object();
  for (const auto& [k, v] : files) fj[k] = v;
  Json pj = Json::object();
  for (const auto& [k, v] : previews) pj[k] = v;
  summary["files"] = fj;
  summary["previews"] = pj;
  summary["spec"] = Json::parse(spec_text);
  out << summary.dump(2) << '\n';
  return kOk;
}

// ---------------------------------------------------------------- decompose

struct DecomposeOptions {
  std::string input;
  std::string model;
  std::string preset;
  std::string out_dir;
  std::string dump_dir;
  std::optional<double> lambda, mu, mu1, mu2, delta, kappa, tau, epsilon, tol;
  std::optional<int> window, n_iter, n_step, levels;
  std::vector<int> dirs;
  double sigma = 20.0;
  std::uint64_t seed = kStandardPhantomSeed;
  bool allow_large_tau = false;
};

// Resolves model and parameters; throws ValidationError on conflicts.
std::pair<Model, ModelParams> resolve(const DecomposeOptions& o) {
  std::optional<Model> model;
  ModelParams p;
  if (!o.preset.empty()) {
    const auto preset = parse_preset(o.preset);
    if (!preset) throw ValidationError("unknown --paper-preset '" + o.preset + "' (expected JG, AC2 or Co)");
    model = preset_model(*preset);
    p = preset_params(*preset);
  }
  if (!o.model.empty()) {
    const auto m = parse_model(o.model);
    if (!m) {
      throw ValidationError("unknown --model '" + o.model +
                            "' (expected rof, bv-g, bv-e, bv-h1, bv-g-g, bv-g-e or bv-g-co)");
    }
    if (model && *model != *m) {
      throw ValidationError("--model " + o.model + " conflicts with --paper-preset " + o.preset + " (model " +
                            std::string(model_name(*model)) + ")");
    }
    model = m;
  }
  if (!model) throw ValidationError("one of --model or --paper-preset is required");

  if (o.lambda) p.lambda = o.lambda;
  if (o.mu) p.mu = o.mu;
  if (o.mu1) p.mu1 = o.mu1;
  if (o.mu2) p.mu2 = o.mu2;
  if (o.delta) p.delta = o.delta;
  if (o.kappa) p.kappa = *o.kappa;
  if (o.window) p.window = *o.window;
  if (o.levels) p.wavelet_levels = *o.levels;
  if (!o.dirs.empty()) p.directions = o.dirs;
  if (o.tau) p.projector.tau = o.tau;
  if (o.n_iter) p.projector.n_iter = *o.n_iter;
  if (o.tol) p.projector.tol = *o.tol > 0.0 ? o.tol : std::nullopt;
  if (o.allow_large_tau) p.projector.enforce_tau_bound = false;
  if (o.epsilon) p.stop.epsilon = *o.epsilon;
  if (o.n_step) p.stop.n_step = *o.n_step;

  const auto problems = validate_params(*model, p);
  if (!problems.empty()) {
    std::string msg = problems.front();
    for (std::size_t k = 1; k < problems.size(); ++k) msg += "; " + problems[k];
    throw ValidationError(msg);
  }
  return {*model, p};
}

void dump_transform(Model model, const Image& f, const ModelParams& p, const fs::path& dir, const Log& log) {
  std::vector<fs::path> written;
  if (model == Model::kBvE || model == Model::kBvGE) {
    written = dump_coefficients(dwt2_forward(f, p.wavelet_levels), dir);
  } else if (model == Model::kBvGCo) {
    written = dump_coefficients(contourlet_forward(f, p.directions), dir);
  } else {
    log.warn("--dump-coefficients ignored: model " + std::string(model_name(model)) + " uses no transform");
    return;
  }
  log.info("dumped " + std::to_string(written.size()) + " coefficient bands to " + dir.string());
}

int cmd_decompose(const DecomposeOptions& o, std::ostream& out, const Log& log) {
  const auto [model, params] = resolve(o);

  Image f;
  std::string input_label;
  if (o.input.empty()) {
    PhantomSpec spec = standard_phantom_spec();
    spec.noise = NoiseSpec{o.sigma, o.seed};
    f = synth_phantom(spec).f0;
    input_label = "standard-phantom(sigma=" + std::to_string(o.sigma) + ",seed=" + std::to_string(o.seed) + ")";
    log.info("no --input given; using the standard phantom");
  } else {
    f = read_existing(o.input);
    input_label = o.input;
  }

  const fs::path dir(o.out_dir);
  ensure_dir(dir);
  log.info("running " + std::string(model_name(model)) + " on " + std::to_string(f.width()) + "x" +
           std::to_string(f.height()));
  const auto t0 = std::chrono::steady_clock::now();
  const Decomposition dec = run_model(model, f, params);
  const double runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  FileList files;
  FileList previews;
  auto emit = [&](const std::string& name, const Image& img, double offset) {
    write_raw_float(img, dir / (name + ".raw"));
    write_pgm(img, dir / (name + ".pgm"), offset);
    files.emplace_back(name, name + ".raw");
    previews.emplace_back(name, name + ".pgm");
  };
  emit("u", dec.u, 0.0);
  emit("v", dec.v, kDisplayOffset);
  if (dec.w) emit("w", *dec.w, kDisplayOffset);
  if (dec.nu) {
    write_raw_float(dec.nu->nu1, dir / "nu1.raw");
    files.emplace_back("nu1", "nu1.raw");
  }
  if (!o.dump_dir.empty()) dump_transform(model, f, params, o.dump_dir, log);

  const std::string report = decomposition_report(dec, input_label, files, previews, runtime);
  write_text(dir / "report.json", report);
  out << report << '\n';
  log.info("wrote " + std::to_string(files.size()) + " components to " + dir.string());

  if (!dec.converged) {
    log.warn("stopping rule not met after " + std::to_string(dec.iterations) + " rounds (last delta " +
             std::to_string(dec.final_delta) + " > epsilon " + std::to_string(params.stop.epsilon) + ")");
    throw NotConverged{};
  }
  return kOk;
}

// --------------------------------------------------------------------- eval

struct EvalOptions {
  std::string reference;
  std::string run;
  std::string u, v, w, nu1;
  std::string out_file;
  bool sweep = false;
  int jobs = 1;
  std::string format = "json";
  std::string csv_file;
  std::vector<double> amplitudes;
  double sigma = 20.0;
  std::uint64_t seed = kStandardPhantomSeed;
};

Phantom load_reference(const fs::path& dir) {
  Phantom ph;
  ph.u0 = read_existing(dir / "u0.raw");
  ph.v0 = read_existing(dir / "v0.raw");
  ph.w0 = read_existing(dir / "w0.raw");
  require_same_shape(ph.u0, ph.v0, "reference v0");
  require_same_shape(ph.u0, ph.w0, "reference w0");
  ph.f0 = ph.u0 + ph.v0 + ph.w0;
  return ph;
}

int cmd_sweep(const EvalOptions& o, std::ostream& out, const Log& log) {
  Image d;
  std::string reference;
  if (o.reference.empty()) {
    const Phantom ph = synth_phantom(standard_phantom_spec());
    d = ph.u0 + ph.v0;
    reference = "standard-phantom";
  } else {
    const Phantom ph = load_reference(o.reference);
    d = ph.u0 + ph.v0;
    reference = o.reference;
  }
  const NoiseSpec noise{o.sigma, o.seed};
  const std::vector<double> amps = o.amplitudes.empty() ? default_sweep_amplitudes() : o.amplitudes;
  log.info("sweeping " + std::to_string(amps.size()) + " amplitudes with " + std::to_string(o.jobs) + " job(s)");
  const auto rows = residue_sweep(d, noise, amps, o.jobs);
  const QuadraticFit fit = fit_quadratic(rows);
  const std::string json = sweep_report(rows, fit, noise, reference);

  if (!o.out_file.empty()) write_text(o.out_file, json);
  if (!o.csv_file.empty()) write_text(o.csv_file, sweep_csv(rows));
  if (o.format == "table") {
    out << sweep_table(rows, fit);
  } else if (o.format == "csv") {
    out << sweep_csv(rows);
  } else {
    out << json << '\n';
  }
  return kOk;
}

int cmd_eval(const EvalOptions& o, std::ostream& out, const Log& log) {
  if (o.sweep) return cmd_sweep(o, out, log);
  if (o.reference.empty()) throw ValidationError("eval requires --reference DIR (or --sweep)");
  const bool have_files = !o.u.empty() || !o.v.empty();
  if (o.run.empty() == !have_files) throw ValidationError("eval takes either --run DIR or --u/--v [--w] [--nu1]");
  if (have_files && (o.u.empty() || o.v.empty())) throw ValidationError("--u and --v are both required");

  const Phantom ph = load_reference(o.reference);

  Image u;
  Image v;
  std::optional<Image> w;
  std::optional<Image> nu1;
  std::string context = "{}";
  double runtime = 0.0;
  fs::path default_out;

  if (!o.run.empty()) {
    const fs::path dir(o.run);
    const Json report = read_json(dir / "report.json");
    const Json files = report.value("files", Json::object());
    auto component = [&](const char* key) -> std::optional<Image> {
      if (!files.contains(key)) return std::nullopt;
      fs::path p = files[key].get<std::string>();
      if (p.is_relative()) p = dir / p;
      return read_existing(p);
    };
    auto cu = component("u");
    auto cv = component("v");
    if (!cu || !cv) throw ValidationError(o.run + "/report.json lists no u or v component");
    u = std::move(*cu);
    v = std::move(*cv);
    w = component("w");
    nu1 = component("nu1");
    runtime = report.value("runtime_seconds", 0.0);
    context = report.dump();
    default_out = dir / "metrics.json";
  } else {
    u = read_existing(o.u);
    v = read_existing(o.v);
    if (!o.w.empty()) w = read_existing(o.w);
    if (!o.nu1.empty()) nu1 = read_existing(o.nu1);
    Json c;
    c["u"] = o.u;
    c["v"] = o.v;
    c["w"] = o.w.empty() ? Json() : Json(o.w);
    c["nu1"] = o.nu1.empty() ? Json() : Json(o.nu1);
    context = Json{{"components", c}}.dump();
  }

  if (nu1) {
    // Adaptive model: score nu1 v and (1 - nu1) w.
    require_same_shape(*nu1, v, "nu1");
    for (std::size_t k = 0; k < v.size(); ++k) v[k] *= (*nu1)[k];
    if (w) {
      require_same_shape(*nu1, *w, "nu1");
      for (std::size_t k = 0; k < w->size(); ++k) (*w)[k] *= 1.0 - (*nu1)[k];
    }
  }

  const MetricsReport m = evaluate(u, v, w, ph, runtime);
  const std::string json = metrics_report(m, context);
  const fs::path target = o.out_file.empty() ? default_out : fs::path(o.out_file);
  if (!target.empty()) {
    write_text(target, json);
    log.info("wrote " + target.string());
  }
  const std::string label = o.run.empty() ? std::string("components") : o.run;
  if (o.format == "table") {
    out << metrics_table({{label, m}});
  } else if (o.format == "csv") {
    out << metrics_csv({{label, m}});
  } else {
    out << json << '\n';
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  bool quiet = false;
  const Log log(err, quiet);

  CLI::App app{"Structure / texture / noise image decomposition", "vardecomp"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_flag("-q,--quiet", quiet, "Suppress informational logs");
  app.set_version_flag("--version", "vardecomp 0.1.0");

  SynthOptions so;
  CLI::App* synth = app.add_subcommand("synth", "Write the synthetic test phantom (u0, v0, w0, f0)");
  synth->add_option("--out", so.out_dir, "Output directory")->required();
  synth->add_option("--sigma", so.sigma, "Noise standard deviation")->check(CLI::NonNegativeNumber);
  synth->add_option("--seed", so.seed, "Noise seed");

  DecomposeOptions dopt;
  CLI::App* dec = app.add_subcommand("decompose", "Decompose an image into u + v (+ w)");
  dec->add_option("--input", dopt.input, "Input image (raw-float or PGM); default: the standard phantom");
  dec->add_option("--model", dopt.model, "rof | bv-g | bv-e | bv-h1 | bv-g-g | bv-g-e | bv-g-co");
  dec->add_option("--paper-preset", dopt.preset, "Published parameter set: JG | AC2 | Co");
  dec->add_option("--out", dopt.out_dir, "Output directory")->required();
  dec->add_option("--lambda", dopt.lambda, "Structure weight lambda");
  dec->add_option("--mu", dopt.mu, "Texture radius mu");
  dec->add_option("--mu1", dopt.mu1, "Texture radius mu1 (bv-g-g)");
  dec->add_option("--mu2", dopt.mu2, "Noise radius mu2 (bv-g-g)");
  dec->add_option("--delta", dopt.delta, "Noise threshold delta");
  dec->add_option("--window", dopt.window, "Local variance window L (odd)");
  dec->add_option("--kappa", dopt.kappa, "Variance normaliser kappa (bv-g-g)");
  dec->add_option("--tau", dopt.tau, "Projector step size");
  dec->add_flag("--allow-large-tau", dopt.allow_large_tau, "Accept tau above the convergence bound");
  dec->add_option("--n-iter", dopt.n_iter, "Projector iterations per call");
  dec->add_option("--tol", dopt.tol, "Projector early-exit tolerance (0 disables)");
  dec->add_option("--epsilon", dopt.epsilon, "Outer stopping tolerance");
  dec->add_option("--n-step", dopt.n_step, "Maximum outer rounds");
  dec->add_option("--levels", dopt.levels, "Wavelet levels");
  dec->add_option("--dirs", dopt.dirs, "Contourlet directions per scale, coarse to fine (e.g. 8,8,4)")
      ->delimiter(',');
  dec->add_option("--sigma", dopt.sigma, "Phantom noise sigma when --input is absent")
      ->check(CLI::NonNegativeNumber);
  dec->add_option("--seed", dopt.seed, "Phantom noise seed when --input is absent");
  dec->add_option("--dump-coefficients", dopt.dump_dir, "Write the input's transform bands to this directory");

  EvalOptions eo;
  CLI::App* ev = app.add_subcommand("eval", "Score a decomposition against reference components");
  ev->add_option("--reference", eo.reference, "Directory written by `synth`");
  ev->add_option("--run", eo.run, "Directory written by `decompose`");
  ev->add_option("--u", eo.u, "Structure component");
  ev->add_option("--v", eo.v, "Texture component");
  ev->add_option("--w", eo.w, "Noise component");
  ev->add_option("--nu1", eo.nu1, "Texture weight map of the adaptive model");
  ev->add_option("--out", eo.out_file, "Also write the JSON report here");
  ev->add_option("--format", eo.format, "stdout format")->check(CLI::IsMember({"json", "table", "csv"}));
  ev->add_flag("--sweep", eo.sweep, "Residue metric sweep over noise leak amplitudes");
  ev->add_option("--jobs", eo.jobs, "Worker threads for --sweep")->check(CLI::PositiveNumber);
  ev->add_option("--csv", eo.csv_file, "Also write the sweep table as CSV");
  ev->add_option("--amplitudes", eo.amplitudes, "Sweep amplitudes (default: the ten published values)")
      ->delimiter(',');
  ev->add_option("--sigma", eo.sigma, "Sweep noise sigma")->check(CLI::NonNegativeNumber);
  ev->add_option("--seed", eo.seed, "Sweep noise seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (synth->parsed()) return cmd_synth(so, out, log);
    if (dec->parsed()) return cmd_decompose(dopt, out, log);
    return cmd_eval(eo, out, log);
  } catch (const NotConverged&) {
    return kNotConverged;
  } catch (const ValidationError& e) {
    log.error(e.what());
    return kValidation;
  } catch (const IoError& e) {
    log.error(e.what());
    return kIo;
  } catch (const fs::filesystem_error& e) {
    log.error(e.what());
    return kIo;
  } catch (const NumericalError& e) {
    log.error(e.what());
    return kNotConverged;
  } catch (const std::exception& e) {
    log.error(e.what());
    return kValidation;
  }
}

}  // namespace vardecomp::cli
