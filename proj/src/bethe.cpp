// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/bethe.hpp"

#include <cmath>
#include <numbers>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

std::vector<std::vector<int>> site_lists(const FockSector& s) {
  std::vector<std::vector<int>> out;
  for (auto mask : s.masks()) {
    std::vector<int> idx;
    for (int i = 0; i < s.n(); ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    out.push_back(std::move(idx));
  }
  return out;
}

Complex minor(const Matrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  if (k == 0) return 1.0;
  if (k == 1) return m(rows[0], cols[0]);
  Matrix sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = m(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
  return sub.partialPivLu().determinant();
}

SectorPtr compound_sector(const Matrix& m, int k) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "compound needs a square matrix");
  if (k < 0 || k > m.rows()) throw Error(ErrorKind::range, "compound order outside 0..dim");
  return FockSector::make(static_cast<int>(m.rows()), k, Boundary::open);
}

Complex twist_star(int k) { return (k - 1) % 2 ? -1.0 : 1.0; }

}  // namespace

Matrix dft_matrix(int n) {
  if (n < 1) throw Error(ErrorKind::range, "dft needs n >= 1");
  Matrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j)
    for (int m = 0; m < n; ++m) {
      // Reduce the exponent first so large n keeps full phase accuracy.
      double angle = 2.0 * std::numbers::pi * static_cast<double>((j * m) % n) / n;
      f(j, m) = std::polar(norm, angle);
    }
  return f;
}

Matrix compound(const Matrix& m, int k) {
  auto s = compound_sector(m, k);
  const auto sites = site_lists(*s);
  const int dim = s->dim();
  Matrix out(dim, dim);
#pragma omp parallel for schedule(static)
  for (long long idx = 0; idx < static_cast<long long>(dim) * dim; ++idx) {
    int a = static_cast<int>(idx / dim), b = static_cast<int>(idx % dim);
    out(a, b) = minor(m, sites[static_cast<std::size_t>(a)], sites[static_cast<std::size_t>(b)]);
  }
  return out;
}

Matrix compound_serial(const Matrix& m, int k) {
  auto s = compound_sector(m, k);
  const auto sites = site_lists(*s);
  const int dim = s->dim();
  Matrix out(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) out(a, b) = minor(m, sites[static_cast<std::size_t>(a)], sites[static_cast<std::size_t>(b)]);
  return out;
}

VariablePoint BetheRootSet::roots() const {
  VariablePoint x;
  for (int j : exponents) x.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / n));
  return x;
}

Complex BetheRootSet::vandermonde() const { return spinchain::vandermonde(roots()); }

std::vector<BetheRootSet> bethe_root_sets(int n, int k) {
  auto s = FockSector::make(n, k, Boundary::open);
  std::vector<BetheRootSet> out;
  for (auto mask : s->masks()) {
    BetheRootSet r;
    r.n = n;
    r.label = BitCode{mask, n};
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1u) r.exponents.push_back(i);
    out.push_back(std::move(r));
  }
  return out;
}

Matrix bethe_basis(int n, int k) { return compound(dft_matrix(n), k); }

double bethe_factorization_residual(int n, int k) {
  Matrix b = bethe_basis(n, k);
  auto roots = bethe_root_sets(n, k);
  auto labels = partitions_in_box(BoxSpec(k, n));
  const double norm = std::pow(static_cast<double>(n), -0.5 * k);
  double worst = 0;
  for (std::size_t a = 0; a < roots.size(); ++a) {
    auto x = roots[a].roots();
    Complex v = vandermonde(x);
    for (std::size_t mu = 0; mu < labels.size(); ++mu) {
      Complex expect = norm * v * schur_eval(labels[mu], x, SchurMethod::jacobi_trudi_h);
      worst = std::max(worst, std::abs(b(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(mu)) - expect));
    }
  }
  return worst;
}

double bethe_symmetry_residual(int n, int k) {
  Matrix b = bethe_basis(n, k);
  return (b - b.transpose()).cwiseAbs().maxCoeff();
}

OrthogonalityReport verify_orthogonality(int n, int k) {
  auto roots = bethe_root_sets(n, k);
  auto labels = partitions_in_box(BoxSpec(k, n));
  const auto dim = static_cast<Eigen::Index>(roots.size());
  // w(a, mu) = V(x_a) s_mu(x_a) / n^(k/2); the two sums are w^dagger w and w w^dagger.
  Matrix w(dim, dim);
  const double norm = std::pow(static_cast<double>(n), -0.5 * k);
  for (Eigen::Index a = 0; a < dim; ++a) {
    auto x = roots[static_cast<std::size_t>(a)].roots();
    Complex v = vandermonde(x);
    for (Eigen::Index mu = 0; mu < dim; ++mu)
      w(a, mu) = norm * v * schur_eval(labels[static_cast<std::size_t>(mu)], x, SchurMethod::jacobi_trudi_h);
  }
  OrthogonalityReport rep;
  rep.n = n;
  rep.k = k;
  const Matrix id = Matrix::Identity(dim, dim);
  rep.schur_residual = (w.adjoint() * w - id).cwiseAbs().maxCoeff();
  rep.dual_residual = (w * w.adjoint() - id).cwiseAbs().maxCoeff();
  return rep;
}

DiagonalizationReport diagonalization_at(const Partition& lambda, int n, int k, Complex q) {
  auto sector = FockSector::make(n, k, Boundary::closed);
  Matrix s = to_dense(build_schur(SkewShape(lambda), sector), q);
  Matrix b = bethe_basis(n, k);
  Matrix d = b * s * b.adjoint();
  auto roots = bethe_root_sets(n, k);
  DiagonalizationReport rep;
  rep.lambda = lambda;
  rep.n = n;
  rep.k = k;
  rep.q = q;
  for (Eigen::Index a = 0; a < d.rows(); ++a)
    for (Eigen::Index c = 0; c < d.cols(); ++c) {
      if (a == c) {
        Complex expect = schur_eval(lambda, roots[static_cast<std::size_t>(a)].roots(), SchurMethod::jacobi_trudi_h);
        double err = std::abs(d(a, a) - expect);
        if (err > rep.eigenvalue_residual) {
          rep.eigenvalue_residual = err;
          if (err > 1e-10 && rep.mismatch.empty())
            rep.mismatch = "diagonal " + roots[static_cast<std::size_t>(a)].label.to_string();
        }
      } else {
        double err = std::abs(d(a, c));
        if (err > rep.off_diagonal) {
          rep.off_diagonal = err;
          if (err > 1e-10 && rep.mismatch.empty())
            rep.mismatch = "off-diagonal (" + std::to_string(a) + "," + std::to_string(c) + ")";
        }
      }
    }
  return rep;
}

DiagonalizationReport verify_diagonalization(const Partition& lambda, int n, int k) {
  return diagonalization_at(lambda, n, k, twist_star(k));
}

Complex bvi_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda, int n, int k) {
  Complex total = 0;
  for (const auto& r : bethe_root_sets(n, k)) {
    auto x = r.roots();
    Complex s_mu = schur_eval(mu, x, SchurMethod::jacobi_trudi_h);
    Complex s_nu = schur_eval(nu, x, SchurMethod::jacobi_trudi_h);
    Complex s_la = schur_eval(lambda, x, SchurMethod::jacobi_trudi_h);
    total += std::norm(vandermonde(x)) * s_mu * s_nu * std::conj(s_la);
  }
  return total / std::pow(static_cast<double>(n), k);
}

BviTable::BviTable(int n, int k) : n_(n), k_(k), labels_(partitions_in_box(BoxSpec(k, n))) {
  auto roots = bethe_root_sets(n, k);
  const auto dim = static_cast<Eigen::Index>(roots.size());
  values_.resize(dim, dim);
  const double norm = std::pow(static_cast<double>(n), -k);
  for (Eigen::Index a = 0; a < dim; ++a) {
    auto x = roots[static_cast<std::size_t>(a)].roots();
    weight_.push_back(std::norm(vandermonde(x)) * norm);
    for (Eigen::Index mu = 0; mu < dim; ++mu)
      values_(a, mu) = schur_eval(labels_[static_cast<std::size_t>(mu)], x, SchurMethod::jacobi_trudi_h);
  }
}

Complex BviTable::coefficient(int mu, int nu, int lambda) const {
  Complex total = 0;
  for (Eigen::Index a = 0; a < values_.rows(); ++a)
    total += weight_[static_cast<std::size_t>(a)] * values_(a, mu) * values_(a, nu) * std::conj(values_(a, lambda));
  return total;
}

std::vector<Complex> BviTable::all() const {
  const int d = static_cast<int>(labels_.size());
  std::vector<Complex> out(static_cast<std::size_t>(d) * d * d);
#pragma omp parallel for schedule(static)
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu)
      for (int la = 0; la < d; ++la)
        out[(static_cast<std::size_t>(mu) * d + nu) * d + la] = coefficient(mu, nu, la);
  return out;
}

std::vector<Complex> BviTable::all_serial() const {
  const int d = static_cast<int>(labels_.size());
  std::vector<Complex> out(static_cast<std::size_t>(d) * d * d);
  for (int mu = 0; mu < d; ++mu)
    for (int nu = 0; nu < d; ++nu)
      for (int la = 0; la < d; ++la) out[(static_cast<std::size_t>(mu) * d + nu) * d + la] = coefficient(mu, nu, la);
  return out;
}

NumericOperator hermitian_hamiltonian(const QuantizedFunctionSpec& spec, const SectorPtr& sector, Complex q) {
  if (!sector->closed()) throw Error(ErrorKind::boundary, "hermitian assembly needs a closed chain");
  if (std::abs(std::abs(q) - 1.0) > 1e-12) throw Error(ErrorKind::domain, "twist must lie on the unit circle");
  NumericOperator o = evaluate(build_function(spec, sector), q);
  return add(o, adjoint(o));
}

Eigen::VectorXcd point_representation(const SchurCoefficientVector& p, int n, int k) {
  auto sector = FockSector::make(n, k, Boundary::open);
  Eigen::VectorXcd alpha = Eigen::VectorXcd::Zero(sector->dim());
  for (const auto& [lam, c] : p.entries) {
    int idx = sector->index_of(lam);
    if (idx < 0) throw Error(ErrorKind::shape_overflow, "(" + lam.to_string() + ") outside the box");
    alpha(idx) = c;
  }
  return bethe_basis(n, k) * alpha / p.norm();
}

}  // namespace spinchain
