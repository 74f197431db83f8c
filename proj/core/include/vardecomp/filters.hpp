// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace vardecomp {

/// Orthonormal two-channel wavelet filter; the highpass is the alternating
/// flip g[k] = (-1)^k h[L-1-k].
struct WaveletFilter {
  std::string name;
  std::vector<double> lowpass;  // sums to sqrt(2)

  std::vector<double> highpass() const;
};

/// Symmetric odd-length analysis/synthesis lowpass pair for the Laplacian
/// pyramid; taps are centred on index size()/2.
struct PyramidFilter {
  std::string name;
  std::vector<double> analysis;   // sums to sqrt(2)
  std::vector<double> synthesis;  // sums to sqrt(2)
};

/// One-dimensional half-sample interpolator driving the quincunx lifting
/// steps of the directional filter bank. Holds b_0, b_1, ... for the taps at
/// +-1/2, +-3/2, ... ; 2 * sum(b) == 1.
struct DfbFilter {
  std::string name;
  std::vector<double> half_taps;
};

/// Daubechies, 4 vanishing moments (8 taps).
WaveletFilter daubechies4();
WaveletFilter haar();

/// Cohen-Daubechies-Feauveau 9/7 biorthogonal pair.
PyramidFilter cdf97();

/// 6-tap Lagrange half-sample interpolator [3, -25, 150, 150, -25, 3] / 256.
DfbFilter lagrange6();
/// 2-tap average; gives the plain 4-neighbour quincunx predictor.
DfbFilter lagrange2();

/// Filter choices for every multiscale transform. The constructor-style
/// factory `defaults()` checks perfect reconstruction of each stage on an
/// impulse and throws ValidationError if a filter is inconsistent.
struct FilterSpec {
  WaveletFilter wavelet = daubechies4();
  PyramidFilter pyramid = cdf97();
  DfbFilter dfb = lagrange6();

  static FilterSpec defaults();
  /// Throws ValidationError if any stage fails to reconstruct an impulse to 1e-8.
  void verify() const;
};

}  // namespace vardecomp
