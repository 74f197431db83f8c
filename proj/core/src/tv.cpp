// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/tv.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace vardecomp {

VectorField::VectorField(Image a, Image b) : p1(std::move(a)), p2(std::move(b)) {
  require_same_shape(p1, p2, "VectorField");
}

double VectorField::max_norm() const {
  double m = 0.0;
  for (std::size_t k = 0; k < p1.size(); ++k) m = std::max(m, std::hypot(p1[k], p2[k]));
  return m;
}

double inner(const VectorField& p, const VectorField& q) { return inner(p.p1, q.p1) + inner(p.p2, q.p2); }

namespace {

void grad_into(const Image& u, VectorField& out) {
  const std::size_t rows = u.height();
  const std::size_t cols = u.width();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double c = u(i, j);
      out.p1(i, j) = (i + 1 < rows) ? u(i + 1, j) - c : 0.0;
      out.p2(i, j) = (j + 1 < cols) ? u(i, j + 1) - c : 0.0;
    }
  }
}

void div_into(const VectorField& p, Image& out) {
  const std::size_t rows = p.height();
  const std::size_t cols = p.width();
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double d = 0.0;
      if (i + 1 < rows) d += p.p1(i, j);
      if (i > 0) d -= p.p1(i - 1, j);
      if (j + 1 < cols) d += p.p2(i, j);
      if (j > 0) d -= p.p2(i, j - 1);
      out(i, j) = d;
    }
  }
}

void check_finite(const Image& img, const char* what) {
  if (!img.all_finite()) throw NumericalError(std::string(what) + ": non-finite value");
}

// Shared Chambolle loop; `k_inv` == nullptr means the identity.
Projection run_chambolle(const Image& g, double lambda, const LinearOperator* k_inv, double tau,
                         const ProjectorConfig& cfg, const IterationObserver& observer) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ValidationError("projector: lambda must be finite and > 0");
  }
  if (cfg.n_iter < 0) throw ValidationError("projector: n_iter must be >= 0");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ValidationError("projector: tol must be > 0");
  check_finite(g, "projector input");

  const std::size_t w = g.width();
  const std::size_t h = g.height();
  Projection out;
  out.field = VectorField(w, h);
  out.report.tau = tau;

  VectorField& p = out.field;
  VectorField gr(w, h);
  Image divp(w, h);
  Image next_div(w, h);
  Image arg(w, h);
  const double inv_lambda = 1.0 / lambda;

  for (int n = 1; n <= cfg.n_iter; ++n) {
    if (k_inv) {
      const Image kd = k_inv->apply(divp);
      for (std::size_t k = 0; k < arg.size(); ++k) arg[k] = kd[k] - g[k] * inv_lambda;
    } else {
      for (std::size_t k = 0; k < arg.size(); ++k) arg[k] = divp[k] - g[k] * inv_lambda;
    }
    grad_into(arg, gr);
    double field_max = 0.0;
    for (std::size_t k = 0; k < arg.size(); ++k) {
      const double a1 = gr.p1[k];
      const double a2 = gr.p2[k];
      const double denom = 1.0 + tau * std::sqrt(a1 * a1 + a2 * a2);
      p.p1[k] = (p.p1[k] + tau * a1) / denom;
      p.p2[k] = (p.p2[k] + tau * a2) / denom;
      field_max = std::max(field_max, p.p1[k] * p.p1[k] + p.p2[k] * p.p2[k]);
    }
    out.report.max_field_norm = std::max(out.report.max_field_norm, std::sqrt(field_max));
    div_into(p, next_div);
    const double delta = max_abs_diff(next_div, divp);
    std::swap(divp, next_div);
    out.report.iterations = n;
    out.report.last_delta = delta;
    if (!std::isfinite(delta)) throw NumericalError("projector: iteration diverged to a non-finite value");
    if (observer) observer(n, p);
    if (cfg.tol && delta < *cfg.tol) {
      out.report.reached_tol = true;
      break;
    }
  }

  if (k_inv) {
    out.value = k_inv->apply(divp);
    out.value *= lambda;
  } else {
    out.value = divp * lambda;
  }
  check_finite(out.value, "projector output");
  return out;
}

}  // namespace

VectorField grad(const Image& u) {
  VectorField out(u.width(), u.height());
  grad_into(u, out);
  return out;
}

Image div(const VectorField& p) {
  require_same_shape(p.p1, p.p2, "div");
  Image out(p.width(), p.height());
  div_into(p, out);
  return out;
}

double total_variation(const Image& u) {
  const VectorField g = grad(u);
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) s += std::hypot(g.p1[k], g.p2[k]);
  return s;
}

LinearOperator identity_operator() {
  return LinearOperator{[](const Image& x) { return x; }, 1.0, "identity"};
}

LinearOperator neumann_negative_laplacian() {
  return LinearOperator{[](const Image& x) {
                          Image out = div(grad(x));
                          out *= -1.0;
                          return out;
                        },
                        std::nullopt, "neumann-negative-laplacian"};
}

double estimate_operator_norm(const LinearOperator& op, std::size_t width, std::size_t height,
                              int iterations) {
  if (op.norm_bound) return *op.norm_bound;
  if (width == 0 || height == 0) return 0.0;
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Image x(width, height);
  for (double& v : x.pixels()) v = unif(rng);
  x *= 1.0 / l2_norm(x);
  double estimate = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Image y = op.apply(x);
    const double n = l2_norm(y);
    if (n == 0.0) return 0.0;
    estimate = n;
    x = y * (1.0 / n);
  }
  return estimate;
}

Projection chambolle_project(const Image& g, double lambda, const ProjectorConfig& cfg,
                             const IterationObserver& observer) {
  const double tau = cfg.tau.value_or(kDefaultTau);
  if (!(tau > 0.0)) throw ValidationError("projector: tau must be > 0");
  if (cfg.enforce_tau_bound && !(tau < 0.125)) {
    throw ValidationError("projector: tau = " + std::to_string(tau) +
                          " violates the convergence bound tau < 1/8");
  }
  return run_chambolle(g, lambda, nullptr, tau, cfg, observer);
}

Image project_G(const Image& g, double lambda, const ProjectorConfig& cfg) {
  return chambolle_project(g, lambda, cfg).value;
}

Image project_G_mu(const Image& g, double mu, const ProjectorConfig& cfg) {
  return chambolle_project(g, mu, cfg).value;
}

Projection chambolle_project_k(const Image& g, double lambda, const LinearOperator& k_inv,
                               const ProjectorConfig& cfg, const IterationObserver& observer) {
  if (!k_inv.apply) throw ValidationError("projector: K^-1 operator is empty");
  const double norm = estimate_operator_norm(k_inv, g.width(), g.height());
  // Power iteration approaches the norm from below; an estimated norm gets a
  // 1% margin, a declared one is used as is.
  const double margin = k_inv.norm_bound ? 1.0 : 1.01;
  const double bound = norm > 0.0 ? 1.0 / (8.0 * norm * margin) : 0.125;
  const double tau = cfg.tau.value_or(kDefaultTau * 8.0 * bound);
  if (!(tau > 0.0)) throw ValidationError("projector: tau must be > 0");
  if (cfg.enforce_tau_bound && !(tau < bound)) {
    throw ValidationError("projector: tau = " + std::to_string(tau) +
                          " violates the bound tau < 1/(8 ||K^-1||) = " + std::to_string(bound));
  }
  return run_chambolle(g, lambda, &k_inv, tau, cfg, observer);
}

Image project_K(const Image& g, double lambda, const LinearOperator& k_inv, const ProjectorConfig& cfg) {
  return chambolle_project_k(g, lambda, k_inv, cfg).value;
}

CgResult solve_neumann_poisson(const Image& rhs, double tol, int max_iter) {
  const LinearOperator lap = neumann_negative_laplacian();
  Image b = rhs;
  const double m = mean(b);
  for (double& v : b.pixels()) v -= m;

  CgResult res;
  res.solution = Image::zeros_like(b);
  const double bnorm = l2_norm(b);
  if (bnorm == 0.0) return res;

  Image r = b;
  Image d = r;
  double rr = inner(r, r);
  for (int it = 1; it <= max_iter; ++it) {
    const Image ad = lap.apply(d);
    const double dad = inner(d, ad);
    if (dad <= 0.0) break;
    const double alpha = rr / dad;
    for (std::size_t k = 0; k < r.size(); ++k) {
      res.solution[k] += alpha * d[k];
      r[k] -= alpha * ad[k];
    }
    const double rr_next = inner(r, r);
    res.iterations = it;
    res.relative_residual = std::sqrt(rr_next) / bnorm;
    if (res.relative_residual < tol) break;
    const double beta = rr_next / rr;
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = r[k] + beta * d[k];
    rr = rr_next;
  }
  const double zm = mean(res.solution);
  for (double& v : res.solution.pixels()) v -= zm;
  return res;
}

double hminus1_norm_sq(const Image& v, double tol) {
  Image centered = v;
  const double m = mean(centered);
  for (double& x : centered.pixels()) x -= m;
  const CgResult z = solve_neumann_poisson(centered, tol);
  return inner(centered, z.solution);
}

}  // namespace vardecomp
