// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "spinchain/bethe.hpp"
#include "spinchain/error.hpp"

namespace spinchain {

IqpResult iqp_simulate(int n, int k, const std::vector<double>& phases, const BitCode& input,
                       std::int64_t samples, std::uint64_t seed) {
  auto sector = FockSector::make(n, k, Boundary::open);
  if (static_cast<int>(phases.size()) != sector->dim())
    throw Error(ErrorKind::dimension_mismatch, "expected " + std::to_string(sector->dim()) + " phases, got " +
                                                   std::to_string(phases.size()));
  if (input.n != n || input.weight() != k) throw Error(ErrorKind::weight_mismatch, "input code not in the sector");
  if (samples < 0) throw Error(ErrorKind::range, "negative sample count");
  const int in = sector->index_of(input.mask);

  Matrix b = bethe_basis(n, k);
  Eigen::VectorXcd phase(sector->dim());
  for (int a = 0; a < sector->dim(); ++a) phase(a) = std::polar(1.0, phases[static_cast<std::size_t>(a)]);
  Eigen::VectorXcd psi = b.adjoint() * (phase.asDiagonal() * b.col(in));

  IqpResult res;
  for (int a = 0; a < sector->dim(); ++a) {
    res.outcomes.push_back(BitCode{sector->mask(a), n});
    res.exact.push_back(std::norm(psi(a)));
  }
  res.counts.assign(res.exact.size(), 0);
  std::mt19937_64 rng(seed);
  std::discrete_distribution<int> pick(res.exact.begin(), res.exact.end());
  for (std::int64_t s = 0; s < samples; ++s) ++res.counts[static_cast<std::size_t>(pick(rng))];
  return res;
}

}  // namespace spinchain
