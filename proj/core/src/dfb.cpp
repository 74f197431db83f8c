// Copyright 2026 The vardecomp Authors
// SPDX-License-Identifier: Apache-2.0

#include "vardecomp/dfb.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <string>

namespace vardecomp {

namespace {

using Vec = std::array<std::int64_t, 2>;

constexpr SamplingMatrix kIdentity{1, 0, 0, 1};
constexpr SamplingMatrix kQuincunx{1, -1, 1, 1};
// Resamplings applied after each split. The first split differs from the
// later ones: it only has to orient the two half planes.
constexpr SamplingMatrix kRootFan{1, 0, 0, 1};
constexpr SamplingMatrix kRootNonfan{1, 0, 0, -1};
constexpr SamplingMatrix kFan{1, 1, 0, 1};
constexpr SamplingMatrix kNonfan{1, 1, -1, 0};

SamplingMatrix mul(const SamplingMatrix& x, const SamplingMatrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Vec apply(const SamplingMatrix& m, const Vec& v) { return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]}; }

std::int64_t det(const SamplingMatrix& m) { return m[0] * m[3] - m[1] * m[2]; }

std::int64_t mod(std::int64_t a, std::int64_t n) {
  a %= n;
  return a < 0 ? a + n : a;
}

// True when the period lattice H Z x W Z lies inside M Z^2.
bool contains_period(const SamplingMatrix& m, std::int64_t h, std::int64_t w) {
  const std::int64_t d = std::llabs(det(m));
  return mod(m[3] * h, d) == 0 && mod(m[2] * h, d) == 0 && mod(m[1] * w, d) == 0 && mod(m[0] * w, d) == 0;
}

struct Node {
  SamplingMatrix lattice;
  Vec offset;
};

// Lattice coordinates n of position p in node (M, c); p must belong to it.
Vec coordinates(const Node& node, const Vec& p) {
  const SamplingMatrix& m = node.lattice;
  const Vec q{p[0] - node.offset[0], p[1] - node.offset[1]};
  const std::int64_t d = det(m);
  return {(m[3] * q[0] - m[1] * q[1]) / d, (-m[2] * q[0] + m[0] * q[1]) / d};
}

std::vector<Node> children(const Node& node, bool root) {
  const SamplingMatrix mq = mul(node.lattice, kQuincunx);
  const Vec shift = apply(node.lattice, {1, 0});
  return {Node{mul(mq, root ? kRootFan : kFan), node.offset},
          Node{mul(mq, root ? kRootNonfan : kNonfan), {node.offset[0] + shift[0], node.offset[1] + shift[1]}}};
}

std::vector<Node> leaf_nodes(int levels) {
  std::vector<Node> nodes{Node{kIdentity, {0, 0}}};
  for (int k = 0; k < levels; ++k) {
    std::vector<Node> next;
    next.reserve(nodes.size() * 2);
    for (const Node& n : nodes) {
      for (Node& c : children(n, k == 0)) next.push_back(std::move(c));
    }
    nodes = std::move(next);
  }
  return nodes;
}

}  // namespace

bool DirectionalFilterBank::supports(std::size_t width, std::size_t height, int levels) {
  if (levels < 0 || width == 0 || height == 0) return false;
  for (const Node& n : leaf_nodes(levels)) {
    if (!contains_period(n.lattice, static_cast<std::int64_t>(height), static_cast<std::int64_t>(width))) {
      return false;
    }
  }
  return true;
}

std::size_t DirectionalFilterBank::required_multiple(int levels) {
  std::size_t m = 1;
  while (!supports(m, m, levels)) m *= 2;
  return m;
}

DirectionalFilterBank::DirectionalFilterBank(std::size_t width, std::size_t height, int levels, DfbFilter filter)
    : width_(width), height_(height), levels_(levels), filter_(std::move(filter)) {
  if (levels < 0) throw ValidationError("dfb: levels must be >= 0");
  if (levels > 12) throw ValidationError("dfb: levels above 12 are not supported");
  if (filter_.half_taps.empty()) throw ValidationError("dfb: filter has no taps");
  if (!supports(width, height, levels)) {
    throw ValidationError("dfb: a " + std::to_string(width) + "x" + std::to_string(height) +
                          " band does not admit " + std::to_string(levels) +
                          " directional levels; sides must be multiples of " +
                          std::to_string(required_multiple(levels)));
  }
  if (width * height > std::size_t{0xffffffffu}) throw ValidationError("dfb: band too large");

  const auto h = static_cast<std::int64_t>(height);
  const auto w = static_cast<std::int64_t>(width);
  const std::size_t total = width * height;

  // Separable interpolator in rotated coordinates r = (t1 + t2, t1 - t2).
  const auto nb = static_cast<std::int64_t>(filter_.half_taps.size());
  std::vector<std::pair<Vec, double>> stencil;
  for (std::int64_t a = -nb; a < nb; ++a) {
    for (std::int64_t b = -nb; b < nb; ++b) {
      const std::int64_t r1 = 2 * a + 1;
      const std::int64_t r2 = 2 * b + 1;
      const double wt = filter_.half_taps[static_cast<std::size_t>((std::llabs(r1) - 1) / 2)] *
                        filter_.half_taps[static_cast<std::size_t>((std::llabs(r2) - 1) / 2)];
      const Vec t{(r1 + r2) / 2, (r1 - r2) / 2};
      stencil.push_back({t, (t[0] % 2 == 0) ? wt : -wt});
    }
  }

  std::vector<Node> nodes{Node{kIdentity, {0, 0}}};
  std::vector<std::uint32_t> owner(total, 0);
  for (int k = 0; k < levels; ++k) {
    std::vector<Split> stage(nodes.size());
    std::vector<Node> next;
    next.reserve(nodes.size() * 2);
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      Split& s = stage[id];
      for (const auto& [t, wt] : stencil) {
        const Vec off = apply(nodes[id].lattice, t);
        s.taps.push_back(Tap{mod(off[0], h), mod(off[1], w), wt});
      }
      for (Node& c : children(nodes[id], k == 0)) next.push_back(std::move(c));
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
      const std::uint32_t id = owner[idx];
      const Vec p{static_cast<std::int64_t>(idx / width), static_cast<std::int64_t>(idx % width)};
      const Vec n = coordinates(nodes[id], p);
      const bool fan = mod(n[0] + n[1], 2) == 0;
      (fan ? stage[id].fan : stage[id].nonfan).push_back(static_cast<std::uint32_t>(idx));
      owner[idx] = 2 * id + (fan ? 0u : 1u);
    }
    stages_.push_back(std::move(stage));
    nodes = std::move(next);
  }

  leaves_.resize(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    leaves_[id].lattice = nodes[id].lattice;
    leaves_[id].offset = {mod(nodes[id].offset[0], h), mod(nodes[id].offset[1], w)};
  }
  for (std::size_t idx = 0; idx < total; ++idx) leaves_[owner[idx]].positions.push_back(static_cast<std::uint32_t>(idx));
  for (Leaf& leaf : leaves_) {
    const auto g = static_cast<std::size_t>(std::gcd(leaf.lattice[0], leaf.lattice[1]));
    leaf.rows = height / g;
    leaf.cols = leaf.positions.size() / leaf.rows;
    if (leaf.rows * leaf.cols != leaf.positions.size()) throw ValidationError("dfb: inconsistent leaf lattice");
  }
}

std::uint32_t DirectionalFilterBank::neighbour(std::uint32_t idx, const Tap& t) const {
  auto r = static_cast<std::int64_t>(idx / width_) + t.drow;
  auto c = static_cast<std::int64_t>(idx % width_) + t.dcol;
  if (r >= static_cast<std::int64_t>(height_)) r -= static_cast<std::int64_t>(height_);
  if (c >= static_cast<std::int64_t>(width_)) c -= static_cast<std::int64_t>(width_);
  return static_cast<std::uint32_t>(r * static_cast<std::int64_t>(width_) + c);
}

void DirectionalFilterBank::forward_split(std::vector<double>& x, const Split& s) const {
  for (const std::uint32_t i : s.nonfan) {
    double pred = 0.0;
    for (const Tap& t : s.taps) pred += t.weight * x[neighbour(i, t)];
    x[i] -= pred;
  }
  for (const std::uint32_t i : s.fan) {
    double upd = 0.0;
    for (const Tap& t : s.taps) upd += t.weight * x[neighbour(i, t)];
    x[i] += 0.5 * upd;
  }
  for (const std::uint32_t i : s.fan) x[i] *= std::numbers::sqrt2;
  for (const std::uint32_t i : s.nonfan) x[i] /= std::numbers::sqrt2;
}

void DirectionalFilterBank::inverse_split(std::vector<double>& x, const Split& s) const {
  for (const std::uint32_t i : s.fan) x[i] /= std::numbers::sqrt2;
  for (const std::uint32_t i : s.nonfan) x[i] *= std::numbers::sqrt2;
  for (const std::uint32_t i : s.fan) {
    double upd = 0.0;
    for (const Tap& t : s.taps) upd += t.weight * x[neighbour(i, t)];
    x[i] -= 0.5 * upd;
  }
  for (const std::uint32_t i : s.nonfan) {
    double pred = 0.0;
    for (const Tap& t : s.taps) pred += t.weight * x[neighbour(i, t)];
    x[i] += pred;
  }
}

std::vector<Image> DirectionalFilterBank::decompose(const Image& band) const {
  if (band.width() != width_ || band.height() != height_) {
    throw ValidationError("dfb: band is " + std::to_string(band.width()) + "x" + std::to_string(band.height()) +
                          ", plan expects " + std::to_string(width_) + "x" + std::to_string(height_));
  }
  std::vector<double> x(band.data());
  for (const auto& stage : stages_) {
    for (const Split& s : stage) forward_split(x, s);
  }
  std::vector<Image> out;
  out.reserve(leaves_.size());
  for (const Leaf& leaf : leaves_) {
    Image sub(leaf.cols, leaf.rows);
    for (std::size_t k = 0; k < leaf.positions.size(); ++k) sub[k] = x[leaf.positions[k]];
    out.push_back(std::move(sub));
  }
  return out;
}

Image DirectionalFilterBank::reconstruct(const std::vector<Image>& subbands) const {
  if (subbands.size() != leaves_.size()) {
    throw ValidationError("dfb: expected " + std::to_string(leaves_.size()) + " subbands, got " +
                          std::to_string(subbands.size()));
  }
  std::vector<double> x(width_ * height_, 0.0);
  for (std::size_t id = 0; id < leaves_.size(); ++id) {
    const Leaf& leaf = leaves_[id];
    if (subbands[id].width() != leaf.cols || subbands[id].height() != leaf.rows) {
      throw ValidationError("dfb: subband " + std::to_string(id) + " has the wrong shape");
    }
    for (std::size_t k = 0; k < leaf.positions.size(); ++k) x[leaf.positions[k]] = subbands[id][k];
  }
  for (auto it = stages_.rbegin(); it != stages_.rend(); ++it) {
    for (auto s = it->rbegin(); s != it->rend(); ++s) inverse_split(x, *s);
  }
  return Image(width_, height_, std::move(x));
}

std::vector<Image> dfb_decompose(const Image& band, int levels, const DfbFilter& filter) {
  return DirectionalFilterBank(band.width(), band.height(), levels, filter).decompose(band);
}

Image dfb_reconstruct(const std::vector<Image>& subbands, std::size_t width, std::size_t height, int levels,
                      const DfbFilter& filter) {
  return DirectionalFilterBank(width, height, levels, filter).reconstruct(subbands);
}

}  // namespace vardecomp
