// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "spinchain/partitions.hpp"

namespace spinchain {

using Complex = std::complex<double>;
// Finitely many variables; the rest are implicitly zero.
using VariablePoint = std::vector<Complex>;

enum class SymKind { e, h, p };
enum class SchurMethod { bialternant, jacobi_trudi_h, jacobi_trudi_e, ssyt_sum };

Complex eval_ehp(SymKind kind, int r, const VariablePoint& x);
// All of e_0..e_max (or h, p) at once. p_0 is reported as 0.
std::vector<Complex> ehp_ladder(SymKind kind, int max_r, const VariablePoint& x);

Complex schur_eval(const SkewShape& shape, const VariablePoint& x, SchurMethod method);
inline Complex schur_eval(const Partition& lambda, const VariablePoint& x,
                          SchurMethod method = SchurMethod::jacobi_trudi_h) {
  return schur_eval(SkewShape(lambda), x, method);
}

// prod_{r<s} (x_s - x_r)
Complex vandermonde(const VariablePoint& x);
// Determinant of the columns of the k x n power matrix X_{ij} = x_i^(j-1)
// picked out by the staircase code of lambda (n sites, k = |x|).
Complex vandermonde_minor(const VariablePoint& x, const Partition& lambda, int n);

struct GeneratingFunctionReport {
  int order = 0;
  double eh_residual = 0;           // |E(t)H(-t) - 1| with H truncated at order
  double vertex_residual = 0;       // |H(t) - exp(Psi(t))|, both truncated at order
  double coefficient_residual = 0;  // max_r |sum_{i+j=r} (-1)^j e_i h_j|, 1 <= r <= order
};

GeneratingFunctionReport generating_function_check(const VariablePoint& x, Complex t, int order = 16);

struct CauchyReport {
  int degree_cap = 0;
  // Residual against the product side expanded to the same total degree.
  double truncated_residual = 0;
  double dual_truncated_residual = 0;
  // Residual against the closed-form products.
  double closed_form_residual = 0;
  double dual_closed_form_residual = 0;
};

CauchyReport cauchy_check(const VariablePoint& x, const VariablePoint& y, int degree_cap);

struct SchurCoefficientVector {
  std::map<Partition, Complex, CanonicalLess> entries;
  std::optional<int> degree;

  Complex eval(const VariablePoint& x) const;
  double norm() const;
};

}  // namespace spinchain
