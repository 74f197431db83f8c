// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/pyramid.hpp"

#include <string>

namespace vardecomp {

namespace {

std::ptrdiff_t wrap(std::ptrdiff_t k, std::ptrdiff_t n) {
  k %= n;
  return k < 0 ? k + n : k;
}

// out[m] = sum_k h[k] in[2m + k - c], n_in samples, n_in/2 outputs.
void reduce_line(const double* in, std::size_t n_in, std::size_t stride, const std::vector<double>& h,
                 double* out, std::size_t out_stride) {
  const auto n = static_cast<std::ptrdiff_t>(n_in);
  const auto c = static_cast<std::ptrdiff_t>(h.size() / 2);
  for (std::ptrdiff_t m = 0; m < n / 2; ++m) {
    double s = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      s += h[k] * in[wrap(2 * m + static_cast<std::ptrdiff_t>(k) - c, n) * static_cast<std::ptrdiff_t>(stride)];
    }
    out[m * static_cast<std::ptrdiff_t>(out_stride)] = s;
  }
}

// out[t] = sum_k g[k] up[t + k - c] with up[2m] = in[m], up[odd] = 0.
void expand_line(const double* in, std::size_t n_in, std::size_t stride, const std::vector<double>& g,
                 double* out, std::size_t out_stride) {
  const auto n = static_cast<std::ptrdiff_t>(2 * n_in);
  const auto c = static_cast<std::ptrdiff_t>(g.size() / 2);
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    double s = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const std::ptrdiff_t q = wrap(t + static_cast<std::ptrdiff_t>(k) - c, n);
      if (q % 2 == 0) s += g[k] * in[(q / 2) * static_cast<std::ptrdiff_t>(stride)];
    }
    out[t * static_cast<std::ptrdiff_t>(out_stride)] = s;
  }
}

}  // namespace

double LaplacianPyramid::energy() const {
  double e = inner(coarse, coarse);
  for (const Image& b : bands) e += inner(b, b);
  return e;
}

Image lp_reduce(const Image& x, const PyramidFilter& filter) {
  const std::size_t rows = x.height();
  const std::size_t cols = x.width();
  if (rows % 2 != 0 || cols % 2 != 0 || x.empty()) throw ValidationError("lp_reduce: sides must be even");
  Image tmp(cols / 2, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    reduce_line(&x.pixels()[i * cols], cols, 1, filter.analysis, &tmp.pixels()[i * (cols / 2)], 1);
  }
  Image out(cols / 2, rows / 2);
  for (std::size_t j = 0; j < cols / 2; ++j) {
    reduce_line(&tmp.pixels()[j], rows, cols / 2, filter.analysis, &out.pixels()[j], cols / 2);
  }
  return out;
}

Image lp_expand(const Image& c, const PyramidFilter& filter) {
  const std::size_t rows = c.height();
  const std::size_t cols = c.width();
  Image tmp(2 * cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    expand_line(&c.pixels()[i * cols], cols, 1, filter.synthesis, &tmp.pixels()[i * 2 * cols], 1);
  }
  Image out(2 * cols, 2 * rows);
  for (std::size_t j = 0; j < 2 * cols; ++j) {
    expand_line(&tmp.pixels()[j], rows, 2 * cols, filter.synthesis, &out.pixels()[j], 2 * cols);
  }
  return out;
}

LaplacianPyramid lp_decompose(const Image& f, int levels, const PyramidFilter& filter) {
  if (levels < 1) throw ValidationError("lp_decompose: levels must be >= 1");
  if (f.empty()) throw ValidationError("lp_decompose: empty image");
  const std::size_t block = std::size_t{1} << levels;
  if (block > f.width() || block > f.height()) {
    throw ValidationError("lp_decompose: " + std::to_string(levels) + " levels too deep for a " +
                          std::to_string(f.width()) + "x" + std::to_string(f.height()) + " image");
  }
  LaplacianPyramid lp;
  lp.levels = levels;
  lp.width = f.width();
  lp.height = f.height();
  lp.bands.resize(static_cast<std::size_t>(levels));
  Image current = pad_symmetric(f, round_up(f.height(), block), round_up(f.width(), block));
  for (int step = 0; step < levels; ++step) {
    Image c = lp_reduce(current, filter);
    current -= lp_expand(c, filter);
    lp.bands[static_cast<std::size_t>(levels - 1 - step)] = std::move(current);
    current = std::move(c);
  }
  lp.coarse = std::move(current);
  return lp;
}

Image lp_reconstruct(const LaplacianPyramid& lp, const PyramidFilter& filter) {
  if (lp.levels < 1 || lp.bands.size() != static_cast<std::size_t>(lp.levels)) {
    throw ValidationError("lp_reconstruct: malformed pyramid");
  }
  Image current = lp.coarse;
  for (const Image& band : lp.bands) {
    Image up = lp_expand(current, filter);
    require_same_shape(up, band, "lp_reconstruct");
    up += band;
    current = std::move(up);
  }
  if (current.width() == lp.width && current.height() == lp.height) return current;
  return crop(current, 0, 0, lp.height, lp.width);
}

}  // namespace vardecomp
