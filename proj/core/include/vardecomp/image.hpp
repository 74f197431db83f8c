// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vardecomp {

/// Raised when an argument violates an operation's precondition
/// (dimension mismatch, parameter out of range, malformed request).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on file-system or format failures.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an iteration produces a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Grayscale image of 64-bit reals, row-major.
///
/// Pixel (i, j) is row i (0..height-1) and column j (0..width-1). The first
/// index runs along the first gradient component, the second index along the
/// second one, so the finite-difference conventions in tv.hpp read the same as
/// the index notation u(i, j).
class Image {
 public:
  Image() = default;
  Image(std::size_t width, std::size_t height, double fill = 0.0);
  Image(std::size_t width, std::size_t height, std::vector<double> data);

  static Image zeros_like(const Image& other) { return Image(other.width(), other.height()); }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }

  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * width_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * width_ + j]; }

  double operator[](std::size_t k) const noexcept { return data_[k]; }
  double& operator[](std::size_t k) noexcept { return data_[k]; }

  std::span<const double> pixels() const noexcept { return data_; }
  std::span<double> pixels() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  bool same_shape(const Image& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool all_finite() const noexcept;

  Image& operator+=(const Image& rhs);
  Image& operator-=(const Image& rhs);
  Image& operator*=(double c) noexcept;

  friend bool operator==(const Image& a, const Image& b) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<double> data_;
};

Image add(const Image& a, const Image& b);
Image sub(const Image& a, const Image& b);
Image scale(const Image& a, double c);
/// Pointwise product.
Image mul(const Image& a, const Image& b);

inline Image operator+(Image a, const Image& b) { return a += b; }
inline Image operator-(Image a, const Image& b) { return a -= b; }
inline Image operator*(Image a, double c) { return a *= c; }
inline Image operator*(double c, Image a) { return a *= c; }

/// Throws ValidationError unless both images have identical dimensions.
void require_same_shape(const Image& a, const Image& b, const char* what);

double l2_norm(const Image& a);
double l1_norm(const Image& a);
double mean(const Image& a);
/// Population variance (divides by the pixel count).
double variance(const Image& a);
double max_abs(const Image& a);
/// Largest |a - b| over all pixels.
double max_abs_diff(const Image& a, const Image& b);
double rms(const Image& a);
double rms_diff(const Image& a, const Image& b);
double inner(const Image& a, const Image& b);

/// Copy of the rectangle [row0, row0+rows) x [col0, col0+cols).
Image crop(const Image& a, std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols);

/// Half-sample symmetric extension to (new_height, new_width); the original
/// occupies the top-left corner.
Image pad_symmetric(const Image& a, std::size_t new_height, std::size_t new_width);

/// Smallest multiple of `m` that is >= n.
std::size_t round_up(std::size_t n, std::size_t m);

}  // namespace vardecomp
