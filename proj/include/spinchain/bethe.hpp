// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinchain/fock.hpp"
#include "spinchain/partitions.hpp"
#include "spinchain/quantized.hpp"
#include "spinchain/symfunc.hpp"

namespace spinchain {

using Matrix = Eigen::MatrixXcd;

Matrix dft_matrix(int n);

// k x k minors of m, rows and columns in canonical sector order (matrix
// index i is site i+1). Minors are computed in parallel.
Matrix compound(const Matrix& m, int k);
// Single-threaded reference for compound.
Matrix compound_serial(const Matrix& m, int k);

// k of the n-th roots of unity, omega^j for the occupied sites j+1 of
// label, ordered by increasing exponent j (argument taken in [0, 2 pi)).
struct BetheRootSet {
  int n = 0;
  BitCode label;
  std::vector<int> exponents;

  VariablePoint roots() const;
  Complex vandermonde() const;
};

// All root sets of size k, in canonical sector order of their labels.
std::vector<BetheRootSet> bethe_root_sets(int n, int k);

// B_k = C_k[F_n].
Matrix bethe_basis(int n, int k);

// Max |B_{a,mu} - V(x_a) s_mu(x_a) / n^(k/2)| over all entries.
double bethe_factorization_residual(int n, int k);
// Max |B - B^T|.
double bethe_symmetry_residual(int n, int k);

struct OrthogonalityReport {
  int n = 0, k = 0;
  double schur_residual = 0;  // sum over roots, (mu, nu) pairs
  double dual_residual = 0;   // sum over partitions, (a, b) pairs
};
OrthogonalityReport verify_orthogonality(int n, int k);

struct DiagonalizationReport {
  Partition lambda;
  int n = 0, k = 0;
  Complex q;
  double off_diagonal = 0;       // max |off-diagonal entry|
  double eigenvalue_residual = 0;  // max |D_aa - s_lambda(x_a)|
  std::string mismatch;          // first index exceeding tolerance, if any
  bool pass(double tol) const { return off_diagonal < tol && eigenvalue_residual < tol; }
};
// B s_lambda(q) B^dagger at q = (-1)^(k-1), closed chain.
DiagonalizationReport verify_diagonalization(const Partition& lambda, int n, int k);
// Same at an arbitrary twist, for the numerical record at other q.
DiagonalizationReport diagonalization_at(const Partition& lambda, int n, int k, Complex q);

// (1/n^k) sum_a |V(x_a)|^2 s_mu(x_a) s_nu(x_a) conj(s_lambda(x_a)).
Complex bvi_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda, int n, int k);

// Schur values at every root set, for bulk residue sums over P_{k,n}.
class BviTable {
 public:
  BviTable(int n, int k);
  const std::vector<Partition>& labels() const noexcept { return labels_; }
  // Indices into labels().
  Complex coefficient(int mu, int nu, int lambda) const;
  // All |P|^3 values, mu-major then nu then lambda; parallel over mu.
  std::vector<Complex> all() const;
  std::vector<Complex> all_serial() const;

 private:
  int n_, k_;
  std::vector<Partition> labels_;
  std::vector<double> weight_;   // |V(x_a)|^2 / n^k
  Matrix values_;                // values_(a, mu) = s_mu(x_a)
};

// O + O^dagger with O the quantized function at numeric q on the unit circle.
NumericOperator hermitian_hamiltonian(const QuantizedFunctionSpec& spec, const SectorPtr& sector, Complex q);

// Vector B_k alpha / |alpha| with alpha indexed by P_{k,n}.
Eigen::VectorXcd point_representation(const SchurCoefficientVector& p, int n, int k);

// A 2x2 unitary on modes p < r (0-based), acting on (a_p, a_r).
struct TwoModeGate {
  int p = 0, r = 0;
  Eigen::Matrix2cd g;
};

// Radix-2 decimation in time: bit-reversal swaps, then log2(n) stages of
// (1/sqrt2)[[1, w], [1, -w]] with w = exp(2 pi i t / len).
std::vector<std::vector<TwoModeGate>> butterfly_layers(int n);
// Product of the layers as an n x n matrix; equals F_n.
Matrix butterfly_single_particle(int n);
// Each gate lifted to the sector and composed.
Matrix butterfly_compound(int n, int k);
// Left-multiplies m (rows in canonical order) by the compound of the gate.
void apply_gate_compound(const FockSector& sector, const TwoModeGate& gate, Matrix& m);

struct IqpResult {
  std::vector<BitCode> outcomes;  // canonical order
  std::vector<double> exact;
  std::vector<std::int64_t> counts;
};
// |<b| B^dagger D B |input>|^2 exactly, plus samples drawn with mt19937_64(seed).
IqpResult iqp_simulate(int n, int k, const std::vector<double>& phases, const BitCode& input,
                       std::int64_t samples, std::uint64_t seed);

struct XxzReport {
  int n = 0;
  double delta = 1;
  double rll_residual = 0;
  double transfer_commutator = 0;
};
XxzReport xxz_integrability_check(int n, double delta, Complex u1, Complex u2, Complex q);

}  // namespace spinchain
