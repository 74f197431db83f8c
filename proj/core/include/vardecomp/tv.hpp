// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>

#include "vardecomp/image.hpp"

namespace vardecomp {

/// Dual field p = (p1, p2), one 2-vector per pixel.
struct VectorField {
  Image p1;
  Image p2;

  VectorField() = default;
  VectorField(std::size_t width, std::size_t height) : p1(width, height), p2(width, height) {}
  VectorField(Image a, Image b);

  std::size_t width() const noexcept { return p1.width(); }
  std::size_t height() const noexcept { return p1.height(); }

  /// max over pixels of sqrt(p1^2 + p2^2).
  double max_norm() const;
};

double inner(const VectorField& p, const VectorField& q);

/// Forward differences; component 1 runs down the rows (zero on the last
/// row), component 2 along the columns (zero on the last column).
VectorField grad(const Image& u);

/// Backward-difference divergence, the negative adjoint of grad():
/// <-div p, u> = <p, grad u>.
Image div(const VectorField& p);

/// Discrete total variation: sum over all pixels of |grad u|.
double total_variation(const Image& u);

/// Step size and stopping rule of the Chambolle fixed-point iteration.
struct ProjectorConfig {
  /// Step size. Unset means 0.124 for the G projector and the same fraction
  /// (0.992) of the bound 1/(8 ||K^-1||) for the K-weighted variant.
  std::optional<double> tau;
  int n_iter = 20;
  /// Early exit once max |div p^{n+1} - div p^n| < tol. Unset disables it.
  std::optional<double> tol = 1e-4;
  /// When false, a tau above the convergence bound is accepted (the
  /// iteration still terminates after n_iter steps).
  bool enforce_tau_bound = true;
};

inline constexpr double kDefaultTau = 0.124;

struct ProjectorReport {
  int iterations = 0;
  /// max |div p^{n} - div p^{n-1}| at the last step.
  double last_delta = 0.0;
  /// Largest |p_ij| seen over all iterates; <= 1 up to rounding.
  double max_field_norm = 0.0;
  bool reached_tol = false;
  double tau = 0.0;
};

struct Projection {
  Image value;
  VectorField field;
  ProjectorReport report;
};

/// Called after every update with the iteration index (1-based) and p^n.
using IterationObserver = std::function<void(int, const VectorField&)>;

/// Symmetric positive (semi-)definite operator used as K^{-1}.
struct LinearOperator {
  std::function<Image(const Image&)> apply;
  /// Known upper bound on the operator norm; estimated by power iteration
  /// when unset.
  std::optional<double> norm_bound;
  const char* name = "operator";
};

LinearOperator identity_operator();

/// -Laplacian with Neumann boundary: -div(grad u), the 5-point stencil with
/// mirrored borders.
LinearOperator neumann_negative_laplacian();

/// Power iteration estimate of the operator norm on width x height images.
double estimate_operator_norm(const LinearOperator& op, std::size_t width, std::size_t height,
                              int iterations = 200);

/// Chambolle's projector onto G_lambda = {lambda div p : |p_ij| <= 1}.
///
/// Iterates p^{n+1} = (p^n + tau grad(div p^n - g/lambda)) /
/// (1 + tau |grad(div p^n - g/lambda)|) from p^0 = 0 and returns
/// lambda div p. The structure part of the ROF problem
/// min_u J(u) + ||u - g||^2 / (2 lambda) is g - project_G(g, lambda).
/// The denominator is >= 1, so no division guard is needed.
Projection chambolle_project(const Image& g, double lambda, const ProjectorConfig& cfg = {},
                             const IterationObserver& observer = {});

Image project_G(const Image& g, double lambda, const ProjectorConfig& cfg = {});

/// Projection onto the G-ball of radius mu; same iteration with mu as scale.
Image project_G_mu(const Image& g, double mu, const ProjectorConfig& cfg = {});

/// K-weighted variant: iterates with K^{-1} div p in place of div p and
/// returns v = lambda K^{-1} div p, the texture part of
/// min_u J(u) + <g - u, K (g - u)> / (2 lambda). With K^{-1} = identity it
/// coincides with project_G.
Projection chambolle_project_k(const Image& g, double lambda, const LinearOperator& k_inv,
                               const ProjectorConfig& cfg = {},
                               const IterationObserver& observer = {});

Image project_K(const Image& g, double lambda, const LinearOperator& k_inv,
                const ProjectorConfig& cfg = {});

struct CgResult {
  Image solution;
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Solves -Laplacian(z) = rhs (Neumann) for zero-mean z by conjugate
/// gradients. The mean of rhs is removed first (the system is singular on
/// constants).
CgResult solve_neumann_poisson(const Image& rhs, double tol = 1e-8, int max_iter = 10000);

/// ||v||^2_{H^-1} = <v, (-Laplacian)^{-1} v> of the zero-mean part of v.
double hminus1_norm_sq(const Image& v, double tol = 1e-8);

}  // namespace vardecomp
