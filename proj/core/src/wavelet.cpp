// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/wavelet.hpp"

#include <string>

namespace vardecomp {

namespace {

// Periodic analysis of one line of length n (even) read with `stride`.
void analyze_line(const double* in, std::size_t n, std::size_t stride, const std::vector<double>& h,
                  const std::vector<double>& g, double* lo, double* hi, std::size_t out_stride) {
  const std::size_t half = n / 2;
  for (std::size_t m = 0; m < half; ++m) {
    double a = 0.0;
    double d = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
      const double x = in[((2 * m + k) % n) * stride];
      a += h[k] * x;
      d += g[k] * x;
    }
    lo[m * out_stride] = a;
    hi[m * out_stride] = d;
  }
}

// Transpose of analyze_line.
void synthesize_line(const double* lo, const double* hi, std::size_t in_stride, std::size_t n,
                     const std::vector<double>& h, const std::vector<double>& g, double* out,
                     std::size_t stride) {
  for (std::size_t t = 0; t < n; ++t) out[t * stride] = 0.0;
  const std::size_t half = n / 2;
  for (std::size_t m = 0; m < half; ++m) {
    const double a = lo[m * in_stride];
    const double d = hi[m * in_stride];
    for (std::size_t k = 0; k < h.size(); ++k) out[((2 * m + k) % n) * stride] += h[k] * a + g[k] * d;
  }
}

}  // namespace

double WaveletPyramid::energy() const {
  double e = inner(approx, approx);
  for (const auto& level : details) {
    for (const Image& b : level) e += inner(b, b);
  }
  return e;
}

std::array<Image, 4> dwt2_step(const Image& x, const WaveletFilter& filter) {
  const std::size_t rows = x.height();
  const std::size_t cols = x.width();
  if (rows % 2 != 0 || cols % 2 != 0 || rows == 0 || cols == 0) {
    throw ValidationError("dwt2_step: sides must be even and non-zero");
  }
  const auto& h = filter.lowpass;
  const auto g = filter.highpass();
  // Filter along rows (second index) first: L/H halves side by side.
  Image row_lo(cols / 2, rows);
  Image row_hi(cols / 2, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    analyze_line(&x.pixels()[i * cols], cols, 1, h, g, &row_lo.pixels()[i * (cols / 2)],
                 &row_hi.pixels()[i * (cols / 2)], 1);
  }
  // Then down the columns (first index).
  std::array<Image, 4> out{Image(cols / 2, rows / 2), Image(cols / 2, rows / 2),
                           Image(cols / 2, rows / 2), Image(cols / 2, rows / 2)};
  const std::size_t hc = cols / 2;
  for (std::size_t j = 0; j < hc; ++j) {
    // LL, LH: lowpass along rows; HL, HH: highpass along rows.
    analyze_line(&row_lo.pixels()[j], rows, hc, h, g, &out[0].pixels()[j], &out[1].pixels()[j], hc);
    analyze_line(&row_hi.pixels()[j], rows, hc, h, g, &out[2].pixels()[j], &out[3].pixels()[j], hc);
  }
  return out;
}

Image idwt2_step(const std::array<Image, 4>& bands, const WaveletFilter& filter) {
  const std::size_t hr = bands[0].height();
  const std::size_t hc = bands[0].width();
  for (const Image& b : bands) {
    if (b.height() != hr || b.width() != hc) throw ValidationError("idwt2_step: band shape mismatch");
  }
  const auto& h = filter.lowpass;
  const auto g = filter.highpass();
  const std::size_t rows = 2 * hr;
  const std::size_t cols = 2 * hc;
  Image row_lo(hc, rows);
  Image row_hi(hc, rows);
  for (std::size_t j = 0; j < hc; ++j) {
    synthesize_line(&bands[0].pixels()[j], &bands[1].pixels()[j], hc, rows, h, g, &row_lo.pixels()[j], hc);
    synthesize_line(&bands[2].pixels()[j], &bands[3].pixels()[j], hc, rows, h, g, &row_hi.pixels()[j], hc);
  }
  Image out(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    synthesize_line(&row_lo.pixels()[i * hc], &row_hi.pixels()[i * hc], 1, cols, h, g,
                    &out.pixels()[i * cols], 1);
  }
  return out;
}

WaveletPyramid dwt2_forward(const Image& f, int levels, const WaveletFilter& filter) {
  if (levels < 1) throw ValidationError("dwt2_forward: levels must be >= 1");
  if (f.empty()) throw ValidationError("dwt2_forward: empty image");
  const std::size_t block = std::size_t{1} << levels;
  if (block > f.width() || block > f.height()) {
    throw ValidationError("dwt2_forward: " + std::to_string(levels) + " levels too deep for a " +
                          std::to_string(f.width()) + "x" + std::to_string(f.height()) + " image");
  }
  WaveletPyramid pyr;
  pyr.levels = levels;
  pyr.width = f.width();
  pyr.height = f.height();
  pyr.details.resize(static_cast<std::size_t>(levels));

  Image current = pad_symmetric(f, round_up(f.height(), block), round_up(f.width(), block));
  // Finest scale comes out first; store it at the back.
  for (int step = 0; step < levels; ++step) {
    auto bands = dwt2_step(current, filter);
    auto& slot = pyr.details[static_cast<std::size_t>(levels - 1 - step)];
    slot[0] = std::move(bands[1]);
    slot[1] = std::move(bands[2]);
    slot[2] = std::move(bands[3]);
    current = std::move(bands[0]);
  }
  pyr.approx = std::move(current);
  return pyr;
}

Image dwt2_inverse(const WaveletPyramid& pyr, const WaveletFilter& filter) {
  if (pyr.levels < 1 || pyr.details.size() != static_cast<std::size_t>(pyr.levels)) {
    throw ValidationError("dwt2_inverse: malformed pyramid");
  }
  Image current = pyr.approx;
  for (int j = 0; j < pyr.levels; ++j) {
    const auto& slot = pyr.details[static_cast<std::size_t>(j)];
    current = idwt2_step({current, slot[0], slot[1], slot[2]}, filter);
  }
  if (current.width() == pyr.width && current.height() == pyr.height) return current;
  return crop(current, 0, 0, pyr.height, pyr.width);
}

}  // namespace vardecomp
