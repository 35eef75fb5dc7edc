// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/symfunc.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

constexpr double kDegenerate = 1e-12;

Complex det(const Eigen::MatrixXcd& m) {
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

// Truncated power series in t, coefficients 0..order.
using Series = std::vector<Complex>;

Series series_mul(const Series& a, const Series& b, int order) {
  Series r(static_cast<std::size_t>(order) + 1, 0.0);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      r[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  return r;
}

Complex series_at(const Series& s, Complex t) {
  Complex acc = 0;
  for (auto it = s.rbegin(); it != s.rend(); ++it) acc = acc * t + *it;
  return acc;
}

void require_convergent(const VariablePoint& x, Complex t) {
  for (const auto& xi : x)
    if (std::abs(t * xi) >= 1.0) throw Error(ErrorKind::divergence, "|t x_i| >= 1");
}

}  // namespace

std::vector<Complex> ehp_ladder(SymKind kind, int max_r, const VariablePoint& x) {
  std::vector<Complex> out(static_cast<std::size_t>(max_r) + 1, 0.0);
  if (kind == SymKind::p) {
    for (int r = 1; r <= max_r; ++r)
      for (const auto& xi : x) out[static_cast<std::size_t>(r)] += std::pow(xi, r);
    return out;
  }
  out[0] = 1.0;
  // Add one variable at a time: e gains x*e_{r-1}, h gains x*h_{r-1} (new).
  for (const auto& xi : x) {
    if (kind == SymKind::e) {
      for (int r = max_r; r >= 1; --r) out[static_cast<std::size_t>(r)] += xi * out[static_cast<std::size_t>(r - 1)];
    } else {
      for (int r = 1; r <= max_r; ++r) out[static_cast<std::size_t>(r)] += xi * out[static_cast<std::size_t>(r - 1)];
    }
  }
  return out;
}

Complex eval_ehp(SymKind kind, int r, const VariablePoint& x) {
  if (r < 0) throw Error(ErrorKind::range, "negative degree");
  if (kind == SymKind::p && r == 0) throw Error(ErrorKind::domain, "p_0 is not defined");
  return ehp_ladder(kind, r, x)[static_cast<std::size_t>(r)];
}

Complex vandermonde(const VariablePoint& x) {
  Complex v = 1.0;
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t s = r + 1; s < x.size(); ++s) v *= x[s] - x[r];
  return v;
}

Complex vandermonde_minor(const VariablePoint& x, const Partition& lambda, int n) {
  const int k = static_cast<int>(x.size());
  BitCode code = partition_to_bits(lambda, BoxSpec(k, n));
  Eigen::MatrixXcd m(k, k);
  int col = 0;
  for (int site = 1; site <= n; ++site) {
    if (!code.occupied(site)) continue;
    for (int i = 0; i < k; ++i) m(i, col) = std::pow(x[static_cast<std::size_t>(i)], site - 1);
    ++col;
  }
  return det(m);
}

Complex schur_eval(const SkewShape& shape, const VariablePoint& x, SchurMethod method) {
  const Partition& lam = shape.outer();
  const Partition& mu = shape.inner();
  switch (method) {
    case SchurMethod::bialternant: {
      if (!mu.empty()) throw Error(ErrorKind::domain, "bialternant needs a straight shape");
      const int m = static_cast<int>(x.size());
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          if (std::abs(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)]) < kDegenerate)
            throw Error(ErrorKind::degenerate_denominator, "coincident variables");
      if (lam.length() > m) return 0.0;
      Eigen::MatrixXcd num(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          num(i, j) = std::pow(x[static_cast<std::size_t>(i)], lam[j] + m - 1 - j);
      // The denominator det(x_i^(m-1-j)) is the Vandermonde with reversed sign convention.
      Complex den = vandermonde(x);
      if (m * (m - 1) / 2 % 2) den = -den;
      return det(num) / den;
    }
    case SchurMethod::jacobi_trudi_h:
    case SchurMethod::jacobi_trudi_e: {
      const bool use_h = method == SchurMethod::jacobi_trudi_h;
      const Partition outer = use_h ? lam : lam.transpose();
      const Partition inner = use_h ? mu : mu.transpose();
      const int l = outer.length();
      const int top = outer[0] + l;
      auto ladder = ehp_ladder(use_h ? SymKind::h : SymKind::e, std::max(top, 0), x);
      Eigen::MatrixXcd m(l, l);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
          int r = outer[i] - inner[j] - i + j;
          m(i, j) = (r < 0) ? Complex(0.0) : ladder[static_cast<std::size_t>(r)];
        }
      return det(m);
    }
    case SchurMethod::ssyt_sum: {
      Complex total = 0;
      for_each_semistandard(shape, static_cast<int>(x.size()), [&](const Tableau& t) {
        Complex term = 1.0;
        for (const auto& row : t.rows)
          for (int v : row) term *= x[static_cast<std::size_t>(v - 1)];
        total += term;
        return true;
      });
      return total;
    }
  }
  return 0.0;
}

GeneratingFunctionReport generating_function_check(const VariablePoint& x, Complex t, int order) {
  require_convergent(x, t);
  GeneratingFunctionReport rep;
  rep.order = order;
  auto e = ehp_ladder(SymKind::e, order, x);
  auto h = ehp_ladder(SymKind::h, order, x);
  auto p = ehp_ladder(SymKind::p, order, x);

  Series h_neg(h);
  for (int j = 1; j <= order; j += 2) h_neg[static_cast<std::size_t>(j)] = -h_neg[static_cast<std::size_t>(j)];
  Series eh = series_mul(e, h_neg, order);
  for (int r = 1; r <= order; ++r)
    rep.coefficient_residual = std::max(rep.coefficient_residual, std::abs(eh[static_cast<std::size_t>(r)]));
  rep.eh_residual = std::abs(series_at(eh, t) - 1.0);

  Complex psi = 0;
  for (int r = 1; r <= order; ++r) psi += p[static_cast<std::size_t>(r)] * std::pow(t, r) / static_cast<double>(r);
  rep.vertex_residual = std::abs(series_at(h, t) - std::exp(psi));
  return rep;
}

CauchyReport cauchy_check(const VariablePoint& x, const VariablePoint& y, int degree_cap) {
  for (const auto& xi : x)
    for (const auto& yj : y)
      if (std::abs(xi * yj) >= 1.0) throw Error(ErrorKind::divergence, "|x_i y_j| >= 1");
  CauchyReport rep;
  rep.degree_cap = degree_cap;
  const int rows = static_cast<int>(std::min(x.size(), y.size()));
  Complex lhs = 0, lhs_dual = 0;
  for (int d = 0; d <= degree_cap; ++d)
    for (const auto& lam : partitions_of(d)) {
      Complex sx = schur_eval(lam, x, SchurMethod::jacobi_trudi_h);
      if (lam.length() <= rows) lhs += sx * schur_eval(lam, y, SchurMethod::jacobi_trudi_h);
      lhs_dual += sx * schur_eval(lam.transpose(), y, SchurMethod::jacobi_trudi_h);
    }

  // Product sides as series in an auxiliary t, so truncation matches the
  // degree cap exactly; t = 1 at the end.
  Series prod{1.0}, prod_dual{1.0};
  Complex closed = 1.0, closed_dual = 1.0;
  for (const auto& xi : x)
    for (const auto& yj : y) {
      Complex z = xi * yj;
      Series geo(static_cast<std::size_t>(degree_cap) + 1);
      for (int r = 0; r <= degree_cap; ++r) geo[static_cast<std::size_t>(r)] = std::pow(z, r);
      prod = series_mul(prod, geo, degree_cap);
      prod_dual = series_mul(prod_dual, Series{1.0, z}, degree_cap);
      closed /= (1.0 - z);
      closed_dual *= (1.0 + z);
    }
  rep.truncated_residual = std::abs(lhs - series_at(prod, 1.0));
  rep.dual_truncated_residual = std::abs(lhs_dual - series_at(prod_dual, 1.0));
  rep.closed_form_residual = std::abs(lhs - closed);
  rep.dual_closed_form_residual = std::abs(lhs_dual - closed_dual);
  return rep;
}

Complex SchurCoefficientVector::eval(const VariablePoint& x) const {
  Complex total = 0;
  for (const auto& [lam, a] : entries) total += a * schur_eval(lam, x, SchurMethod::jacobi_trudi_h);
  return total;
}

double SchurCoefficientVector::norm() const {
  double s = 0;
  for (const auto& [lam, a] : entries) s += std::norm(a);
  return std::sqrt(s);
}

}  // namespace spinchain
