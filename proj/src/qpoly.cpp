// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/qpoly.hpp"

#include <algorithm>

#include "spinchain/error.hpp"

namespace spinchain {

namespace {

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "q-polynomial coefficient");
  return r;
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "q-polynomial coefficient");
  return r;
}

}  // namespace

QPoly::QPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(std::int64_t c, int degree) {
  QPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
    p.c_.back() = c;
  }
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPoly::nonnegative() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t c) { return c >= 0; });
}

std::complex<double> QPoly::eval(std::complex<double> q) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + static_cast<double>(*it);
  return acc;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    std::int64_t c = c_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    std::int64_t a = c < 0 ? -c : c;
    if (d == 0 || a != 1) out += std::to_string(a);
    if (d >= 1) out += "q";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  add_scaled(o, 1, 0);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  add_scaled(o, -1, 0);
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly r;
  r.add_scaled(*this, -1, 0);
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<std::int64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      r[i + j] = add_checked(r[i + j], mul_checked(c_[i], o.c_[j]));
  c_ = std::move(r);
  trim();
  return *this;
}

void QPoly::add_scaled(const QPoly& b, std::int64_t c, int d) {
  if (c == 0 || b.c_.empty()) return;
  std::size_t need = b.c_.size() + static_cast<std::size_t>(d);
  if (c_.size() < need) c_.resize(need, 0);
  for (std::size_t j = 0; j < b.c_.size(); ++j) {
    auto& slot = c_[j + static_cast<std::size_t>(d)];
    slot = add_checked(slot, mul_checked(c, b.c_[j]));
  }
  trim();
}

}  // namespace spinchain
