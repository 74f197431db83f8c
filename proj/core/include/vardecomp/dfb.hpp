// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "vardecomp/filters.hpp"
#include "vardecomp/image.hpp"

namespace vardecomp {

/// 2x2 integer sampling matrix [[a, b], [c, d]] acting on (row, col) vectors.
using SamplingMatrix = std::array<std::int64_t, 4>;

/// Critically sampled directional filter bank on a periodic H x W grid.
///
/// The tree of l two-channel quincunx splits is realised as lifting steps on
/// lattice cosets of the input array: a node is the set of positions
/// c + M n (mod H, W). Each split separates the node's quincunx sublattice
/// (fan channel) from its complement and reparameterises both children
/// through a unimodular resampling matrix, so the 2^l leaves are the wedge
/// shaped directional subbands. Reconstruction replays the lifting steps in
/// reverse and is exact up to rounding for any filter.
///
/// A plan is tied to one (width, height, l); build it once and reuse it.
class DirectionalFilterBank {
 public:
  struct Leaf {
    SamplingMatrix lattice{};
    std::array<std::int64_t, 2> offset{};
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Array positions of the leaf in row-major order; reshaped to rows x cols.
    std::vector<std::uint32_t> positions;
  };

  DirectionalFilterBank(std::size_t width, std::size_t height, int levels, DfbFilter filter = lagrange6());

  int levels() const noexcept { return levels_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t subband_count() const noexcept { return leaves_.size(); }
  const std::vector<Leaf>& leaves() const noexcept { return leaves_; }

  std::vector<Image> decompose(const Image& band) const;
  Image reconstruct(const std::vector<Image>& subbands) const;

  /// Whether a width x height grid admits an l-level tree.
  static bool supports(std::size_t width, std::size_t height, int levels);
  /// Smallest power of two m such that every multiple-of-m size is supported.
  static std::size_t required_multiple(int levels);

 private:
  struct Tap {
    std::int64_t drow = 0;  // already reduced into [0, height)
    std::int64_t dcol = 0;  // already reduced into [0, width)
    double weight = 0.0;    // includes the modulation sign
  };
  struct Split {
    std::vector<std::uint32_t> fan;     // quincunx sublattice of the node
    std::vector<std::uint32_t> nonfan;  // its complement
    std::vector<Tap> taps;              // neighbour offsets in array coordinates
  };

  void forward_split(std::vector<double>& x, const Split& s) const;
  void inverse_split(std::vector<double>& x, const Split& s) const;
  std::uint32_t neighbour(std::uint32_t idx, const Tap& t) const;

  std::size_t width_;
  std::size_t height_;
  int levels_;
  DfbFilter filter_;
  std::vector<std::vector<Split>> stages_;
  std::vector<Leaf> leaves_;
};

/// Convenience wrappers building a one-shot plan; l = 0 returns {band}.
std::vector<Image> dfb_decompose(const Image& band, int levels, const DfbFilter& filter = lagrange6());
Image dfb_reconstruct(const std::vector<Image>& subbands, std::size_t width, std::size_t height, int levels,
                      const DfbFilter& filter = lagrange6());

}  // namespace vardecomp
