// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <array>
#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

#include "spinchain/bethe.hpp"
#include "spinchain/error.hpp"

namespace spinchain {

namespace {

using Blocks = std::array<std::array<Eigen::Matrix2cd, 2>, 2>;  // [aux row][aux col], site operator

Eigen::Matrix2cd unit(int r, int c) {
  Eigen::Matrix2cd e = Eigen::Matrix2cd::Zero();
  e(r, c) = 1.0;
  return e;
}

// Lax operator split over the auxiliary space. Delta = 1 uses the rational
// (u - i/2) I + i P; otherwise the six-vertex weights with Delta = cos(eta).
Blocks lax_blocks(Complex u, double delta) {
  const Complex i(0.0, 1.0);
  Blocks l;
  if (delta == 1.0) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) l[a][b] = (a == b ? (u - 0.5 * i) : Complex(0.0)) * Eigen::Matrix2cd::Identity() + i * unit(b, a);
    return l;
  }
  const Complex eta = std::acos(Complex(delta, 0.0));
  const Complex wa = std::sin(u + eta), wb = std::sin(u), wc = std::sin(eta);
  l[0][0] = wa * unit(0, 0) + wb * unit(1, 1);
  l[1][1] = wb * unit(0, 0) + wa * unit(1, 1);
  l[0][1] = wc * unit(1, 0);
  l[1][0] = wc * unit(0, 1);
  return l;
}

// R(lambda) = lambda I + i P, i.e. the Lax operator shifted by i/2; in the
// trigonometric case R and L coincide.
Blocks r_blocks(Complex lambda, double delta) {
  return lax_blocks(delta == 1.0 ? lambda + Complex(0.0, 0.5) : lambda, delta);
}

Matrix kron3(const Matrix& a, const Matrix& b, const Matrix& c) {
  Matrix ab = Eigen::kroneckerProduct(a, b);
  return Eigen::kroneckerProduct(ab, c);
}

// Spaces ordered (site, a, b).
Matrix on_site_aux(const Blocks& l, bool second_aux) {
  Matrix out = Matrix::Zero(8, 8);
  const Matrix id = Matrix::Identity(2, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      out += second_aux ? kron3(l[x][y], id, unit(x, y)) : kron3(l[x][y], unit(x, y), id);
  return out;
}

Matrix on_aux_pair(const Blocks& r) {
  Matrix out = Matrix::Zero(8, 8);
  const Matrix id = Matrix::Identity(2, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) out += kron3(id, unit(x, y), r[x][y]);
  return out;
}

Matrix embed(const Eigen::Matrix2cd& op, int site, int n) {
  Matrix left = Matrix::Identity(1 << (site - 1), 1 << (site - 1));
  Matrix right = Matrix::Identity(1 << (n - site), 1 << (n - site));
  return kron3(left, op, right);
}

Matrix transfer(int n, double delta, Complex u, Complex q) {
  const int dim = 1 << n;
  std::array<std::array<Matrix, 2>, 2> m;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) m[a][b] = a == b ? Matrix(Matrix::Identity(dim, dim)) : Matrix(Matrix::Zero(dim, dim));
  for (int site = 1; site <= n; ++site) {
    Blocks l = lax_blocks(u, delta);
    std::array<std::array<Matrix, 2>, 2> next;
    for (int a = 0; a < 2; ++a)
      for (int c = 0; c < 2; ++c) {
        next[a][c] = Matrix::Zero(dim, dim);
        for (int b = 0; b < 2; ++b) next[a][c] += embed(l[a][b], site, n) * m[b][c];
      }
    m = std::move(next);
  }
  return q * m[0][0] + m[1][1];
}

}  // namespace

XxzReport xxz_integrability_check(int n, double delta, Complex u1, Complex u2, Complex q) {
  if (n < 1 || n > 10) throw Error(ErrorKind::range, "xxz check is dense; use 1 <= n <= 10");
  XxzReport rep;
  rep.n = n;
  rep.delta = delta;
  Matrix r = on_aux_pair(r_blocks(u1 - u2, delta));
  Matrix la = on_site_aux(lax_blocks(u1, delta), false);
  Matrix lb = on_site_aux(lax_blocks(u2, delta), true);
  rep.rll_residual = (r * la * lb - lb * la * r).cwiseAbs().maxCoeff();
  Matrix t1 = transfer(n, delta, u1, q), t2 = transfer(n, delta, u2, q);
  rep.transfer_commutator = (t1 * t2 - t2 * t1).cwiseAbs().maxCoeff();
  return rep;
}

}  // namespace spinchain
