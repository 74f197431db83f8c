// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/phantom.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace vardecomp {

namespace {

bool inside(const Rectangle& r, std::size_t width, std::size_t height) {
  return r.row0 + r.rows <= height && r.col0 + r.cols <= width;
}

bool overlaps(const Rectangle& a, const Rectangle& b) {
  return a.row0 < b.row0 + b.rows && b.row0 < a.row0 + a.rows && a.col0 < b.col0 + b.cols && b.col0 < a.col0 + a.cols;
}

// Even-odd rule.
bool point_in_polygon(const std::vector<std::array<double, 2>>& v, double y, double x) {
  bool in = false;
  for (std::size_t a = 0, b = v.size() - 1; a < v.size(); b = a++) {
    const double ya = v[a][0], xa = v[a][1];
    const double yb = v[b][0], xb = v[b][1];
    if ((ya > y) != (yb > y) && x < (xb - xa) * (y - ya) / (yb - ya) + xa) in = !in;
  }
  return in;
}

void paint(Image& u, const Shape& shape) {
  const double h = static_cast<double>(u.height());
  const double w = static_cast<double>(u.width());
  if (const auto* r = std::get_if<Rectangle>(&shape)) {
    if (!inside(*r, u.width(), u.height())) throw ValidationError("phantom: rectangle leaves the image");
    for (std::size_t i = r->row0; i < r->row0 + r->rows; ++i) {
      for (std::size_t j = r->col0; j < r->col0 + r->cols; ++j) u(i, j) = r->value;
    }
  } else if (const auto* d = std::get_if<Disc>(&shape)) {
    if (!(d->radius > 0.0) || d->row - d->radius < 0.0 || d->col - d->radius < 0.0 || d->row + d->radius > h - 1.0 ||
        d->col + d->radius > w - 1.0) {
      throw ValidationError("phantom: disc leaves the image");
    }
    const double r2 = d->radius * d->radius;
    for (std::size_t i = 0; i < u.height(); ++i) {
      for (std::size_t j = 0; j < u.width(); ++j) {
        const double di = static_cast<double>(i) - d->row;
        const double dj = static_cast<double>(j) - d->col;
        if (di * di + dj * dj <= r2) u(i, j) = d->value;
      }
    }
  } else {
    const auto& p = std::get<Polygon>(shape);
    if (p.vertices.size() < 3) throw ValidationError("phantom: polygon needs at least 3 vertices");
    for (const auto& v : p.vertices) {
      if (v[0] < 0.0 || v[1] < 0.0 || v[0] > h - 1.0 || v[1] > w - 1.0) {
        throw ValidationError("phantom: polygon leaves the image");
      }
    }
    for (std::size_t i = 0; i < u.height(); ++i) {
      for (std::size_t j = 0; j < u.width(); ++j) {
        if (point_in_polygon(p.vertices, static_cast<double>(i), static_cast<double>(j))) u(i, j) = p.value;
      }
    }
  }
}

}  // namespace

PhantomSpec standard_phantom_spec() {
  PhantomSpec spec;
  spec.shapes = {
      Rectangle{16, 16, 80, 96, 64.0},
      Disc{56.0, 184.0, 40.0, 192.0},
      Polygon{{{{128.0, 16.0}, {240.0, 16.0}, {240.0, 112.0}}}, 230.0},
  };
  spec.patches = {
      SinePatch{Rectangle{112, 136, 64, 104, 0.0}, 40.0, 0.6, 0.0, 0.0},
      SinePatch{Rectangle{184, 136, 64, 104, 0.0}, 40.0, 1.1, 45.0, 0.0},
  };
  spec.noise = NoiseSpec{20.0, kStandardPhantomSeed};
  return spec;
}

Phantom synth_phantom(const PhantomSpec& spec) {
  if (spec.width == 0 || spec.height == 0) throw ValidationError("phantom: empty image size");
  if (!std::isfinite(spec.background)) throw ValidationError("phantom: background must be finite");
  Phantom ph;
  ph.spec = spec;
  ph.u0 = Image(spec.width, spec.height, spec.background);
  for (const Shape& s : spec.shapes) paint(ph.u0, s);

  ph.v0 = Image(spec.width, spec.height);
  for (std::size_t a = 0; a < spec.patches.size(); ++a) {
    const SinePatch& p = spec.patches[a];
    if (!inside(p.domain, spec.width, spec.height)) {
      throw ValidationError("phantom: sine patch " + std::to_string(a) + " leaves the image");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (overlaps(p.domain, spec.patches[b].domain)) {
        throw ValidationError("phantom: sine patches " + std::to_string(b) + " and " + std::to_string(a) + " overlap");
      }
    }
    if (!std::isfinite(p.amplitude) || !std::isfinite(p.omega) || !std::isfinite(p.theta_deg) ||
        !std::isfinite(p.phase)) {
      throw ValidationError("phantom: sine patch parameters must be finite");
    }
    const double th = p.theta_deg * std::numbers::pi / 180.0;
    const double kx = p.omega * std::cos(th);
    const double ky = p.omega * std::sin(th);
    for (std::size_t i = p.domain.row0; i < p.domain.row0 + p.domain.rows; ++i) {
      for (std::size_t j = p.domain.col0; j < p.domain.col0 + p.domain.cols; ++j) {
        ph.v0(i, j) = p.amplitude * std::sin(kx * static_cast<double>(j) + ky * static_cast<double>(i) + p.phase);
      }
    }
  }

  ph.w0 = gaussian_noise(spec.noise, spec.width, spec.height);
  ph.f0 = ph.u0 + ph.v0 + ph.w0;
  return ph;
}

}  // namespace vardecomp
