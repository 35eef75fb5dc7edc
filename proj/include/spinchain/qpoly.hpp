// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace spinchain {

// Integer polynomial in the twist q. Arithmetic is exact and throws on
// int64 overflow instead of wrapping.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::int64_t c) { if (c != 0) c_.push_back(c); }  // NOLINT implicit on purpose
  explicit QPoly(std::vector<std::int64_t> coeffs);

  static QPoly q() { return QPoly(std::vector<std::int64_t>{0, 1}); }
  static QPoly monomial(std::int64_t c, int degree);

  // Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::int64_t coeff(int d) const noexcept {
    return d >= 0 && d < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(d)] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  bool nonnegative() const noexcept;

  std::complex<double> eval(std::complex<double> q) const;
  std::string to_string() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  // Adds c * q^d * b without intermediate allocation; the inner loop of
  // sparse products.
  void add_scaled(const QPoly& b, std::int64_t c, int d);

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

}  // namespace spinchain
