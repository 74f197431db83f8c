// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vardecomp {

Image::Image(std::size_t width, std::size_t height, double fill)
    : width_(width), height_(height), data_(width * height, fill) {}

Image::Image(std::size_t width, std::size_t height, std::vector<double> data)
    : width_(width), height_(height), data_(std::move(data)) {
  if (data_.size() != width_ * height_) {
    throw ValidationError("Image: data length " + std::to_string(data_.size()) +
                          " does not match " + std::to_string(width_) + "x" +
                          std::to_string(height_));
  }
}

bool Image::all_finite() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); });
}

void require_same_shape(const Image& a, const Image& b, const char* what) {
  if (!a.same_shape(b)) {
    throw ValidationError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(a.width()) + "x" + std::to_string(a.height()) + " vs " +
                          std::to_string(b.width()) + "x" + std::to_string(b.height()) + ")");
  }
}

Image& Image::operator+=(const Image& rhs) {
  require_same_shape(*this, rhs, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Image& Image::operator-=(const Image& rhs) {
  require_same_shape(*this, rhs, "sub");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Image& Image::operator*=(double c) noexcept {
  for (double& x : data_) x *= c;
  return *this;
}

Image add(const Image& a, const Image& b) { return a + b; }
Image sub(const Image& a, const Image& b) { return a - b; }
Image scale(const Image& a, double c) { return a * c; }

Image mul(const Image& a, const Image& b) {
  require_same_shape(a, b, "mul");
  Image out(a);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] *= b[k];
  return out;
}

double l2_norm(const Image& a) { return std::sqrt(inner(a, a)); }

double l1_norm(const Image& a) {
  double s = 0.0;
  for (double x : a.pixels()) s += std::abs(x);
  return s;
}

double mean(const Image& a) {
  if (a.empty()) return 0.0;
  double s = 0.0;
  for (double x : a.pixels()) s += x;
  return s / static_cast<double>(a.size());
}

double variance(const Image& a) {
  if (a.empty()) return 0.0;
  const double m = mean(a);
  double s = 0.0;
  for (double x : a.pixels()) s += (x - m) * (x - m);
  return s / static_cast<double>(a.size());
}

double max_abs(const Image& a) {
  double m = 0.0;
  for (double x : a.pixels()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(const Image& a, const Image& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double rms(const Image& a) {
  if (a.empty()) return 0.0;
  return l2_norm(a) / std::sqrt(static_cast<double>(a.size()));
}

double rms_diff(const Image& a, const Image& b) { return rms(a - b); }

double inner(const Image& a, const Image& b) {
  require_same_shape(a, b, "inner");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Image crop(const Image& a, std::size_t row0, std::size_t col0, std::size_t rows,
           std::size_t cols) {
  if (row0 + rows > a.height() || col0 + cols > a.width()) {
    throw ValidationError("crop: rectangle outside the image");
  }
  Image out(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(row0 + i, col0 + j);
  }
  return out;
}

namespace {

// Index into [0, n) under half-sample symmetric reflection (... 1 0 | 0 1 ... n-1 | n-1 ...).
std::size_t reflect(std::size_t k, std::size_t n) {
  const std::size_t period = 2 * n;
  k %= period;
  return k < n ? k : period - 1 - k;
}

}  // namespace

Image pad_symmetric(const Image& a, std::size_t new_height, std::size_t new_width) {
  if (new_height < a.height() || new_width < a.width()) {
    throw ValidationError("pad_symmetric: target smaller than source");
  }
  if (a.empty()) throw ValidationError("pad_symmetric: empty image");
  Image out(new_width, new_height);
  for (std::size_t i = 0; i < new_height; ++i) {
    const std::size_t si = reflect(i, a.height());
    for (std::size_t j = 0; j < new_width; ++j) out(i, j) = a(si, reflect(j, a.width()));
  }
  return out;
}

std::size_t round_up(std::size_t n, std::size_t m) { return m == 0 ? n : ((n + m - 1) / m) * m; }

}  // namespace vardecomp
