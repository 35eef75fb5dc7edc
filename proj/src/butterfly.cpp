// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cmath>
#include <numbers>

#include "spinchain/bethe.hpp"
#include "spinchain/error.hpp"

namespace spinchain {

namespace {

int bit_reverse(int i, int bits) {
  int r = 0;
  for (int b = 0; b < bits; ++b)
    if (i & (1 << b)) r |= 1 << (bits - 1 - b);
  return r;
}

void require_power_of_two(int n) {
  if (n < 1 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw Error(ErrorKind::non_power_of_two, "butterfly needs n = 2^m, got " + std::to_string(n));
}

}  // namespace

std::vector<std::vector<TwoModeGate>> butterfly_layers(int n) {
  require_power_of_two(n);
  const int bits = std::countr_zero(static_cast<unsigned>(n));
  std::vector<std::vector<TwoModeGate>> layers;

  std::vector<TwoModeGate> swaps;
  for (int i = 0; i < n; ++i) {
    int j = bit_reverse(i, bits);
    if (i < j) {
      TwoModeGate g{i, j, Eigen::Matrix2cd::Zero()};
      g.g(0, 1) = g.g(1, 0) = 1.0;
      swaps.push_back(g);
    }
  }
  if (!swaps.empty()) layers.push_back(std::move(swaps));

  const double h = 1.0 / std::sqrt(2.0);
  for (int len = 2; len <= n; len <<= 1) {
    std::vector<TwoModeGate> stage;
    for (int start = 0; start < n; start += len)
      for (int t = 0; t < len / 2; ++t) {
        Complex w = std::polar(1.0, 2.0 * std::numbers::pi * t / len);
        TwoModeGate g{start + t, start + t + len / 2, {}};
        g.g << h, h * w, h, -h * w;
        stage.push_back(g);
      }
    layers.push_back(std::move(stage));
  }
  return layers;
}

Matrix butterfly_single_particle(int n) {
  Matrix m = Matrix::Identity(n, n);
  for (const auto& layer : butterfly_layers(n))
    for (const auto& gate : layer) {
      Matrix u = Matrix::Identity(n, n);
      u(gate.p, gate.p) = gate.g(0, 0);
      u(gate.p, gate.r) = gate.g(0, 1);
      u(gate.r, gate.p) = gate.g(1, 0);
      u(gate.r, gate.r) = gate.g(1, 1);
      m = u * m;
    }
  return m;
}

void apply_gate_compound(const FockSector& sector, const TwoModeGate& gate, Matrix& m) {
  const std::uint64_t bp = std::uint64_t{1} << gate.p, br = std::uint64_t{1} << gate.r;
  const std::uint64_t between = (br - 1) & ~((bp << 1) - 1);
  const Complex det = gate.g.determinant();
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (int i = 0; i < sector.dim(); ++i) {
    const std::uint64_t s = sector.mask(i);
    const bool hp = s & bp, hr = s & br;
    if (hp && hr) {
      out.row(i) += det * m.row(i);
    } else if (!hp && !hr) {
      out.row(i) += m.row(i);
    } else {
      // One fermion in the pair: it stays, or hops across the modes in
      // between and picks up their parity.
      const double sign = (std::popcount(s & between) & 1) ? -1.0 : 1.0;
      const int other = sector.index_of(s ^ bp ^ br);
      const Complex stay = hp ? gate.g(0, 0) : gate.g(1, 1);
      const Complex move = hp ? gate.g(1, 0) : gate.g(0, 1);
      out.row(i) += stay * m.row(i);
      out.row(other) += sign * move * m.row(i);
    }
  }
  m = std::move(out);
}

Matrix butterfly_compound(int n, int k) {
  auto layers = butterfly_layers(n);
  auto sector = FockSector::make(n, k, Boundary::open);
  Matrix m = Matrix::Identity(sector->dim(), sector->dim());
  for (const auto& layer : layers)
    for (const auto& gate : layer) apply_gate_compound(*sector, gate, m);
  return m;
}

}  // namespace spinchain
