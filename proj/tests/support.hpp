// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "spinchain/fock.hpp"
#include "spinchain/partitions.hpp"
#include "spinchain/qpoly.hpp"
#include "spinchain/symfunc.hpp"

namespace spinchain::testing {

// Seeded generators for property tests. Every test owns its own Gen so
// failures reproduce from the seed alone.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  // Uniform over the box, by drawing a random weight-k bit string.
  Partition partition_in_box(int k, int n) {
    std::vector<int> sites(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) sites[static_cast<std::size_t>(i)] = i;
    std::shuffle(sites.begin(), sites.end(), rng_);
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i) mask |= std::uint64_t{1} << sites[static_cast<std::size_t>(i)];
    return bits_to_partition(BitCode{mask, n}, BoxSpec(k, n));
  }

  // Random partition of d by repeatedly splitting off a part.
  Partition partition_of(int d) {
    std::vector<int> parts;
    int left = d;
    while (left > 0) {
      int p = uniform(1, left);
      parts.push_back(p);
      left -= p;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
  }

  Complex complex_in_disk(double radius) {
    double r = radius * std::sqrt(real(0, 1));
    double t = real(0, 2 * 3.141592653589793);
    return std::polar(r, t);
  }

  VariablePoint point(int m, double radius = 1.0) {
    VariablePoint x;
    for (int i = 0; i < m; ++i) x.push_back(complex_in_disk(radius));
    return x;
  }

  QPoly qpoly(int max_degree, int max_coeff) {
    std::vector<std::int64_t> c;
    for (int d = 0; d <= max_degree; ++d) c.push_back(uniform(-max_coeff, max_coeff));
    return QPoly(c);
  }

  SectorOperator sparse_operator(const SectorPtr& s, double density) {
    SectorOperator op(s);
    for (int j = 0; j < s->dim(); ++j)
      for (int i = 0; i < s->dim(); ++i)
        if (real(0, 1) < density) op.add_entry(i, j, qpoly(2, 3));
    return op;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double relative_gap(Complex a, Complex b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace spinchain::testing
