// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace spinchain {

enum class ErrorKind {
  shape_overflow,
  weight_mismatch,
  size_mismatch,
  degenerate_denominator,
  divergence,
  site_range,
  boundary,
  number_nonconserving,
  sector_mismatch,
  range,
  non_power_of_two,
  dimension_mismatch,
  overflow,
  domain,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spinchain
