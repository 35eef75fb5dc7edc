// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/error.hpp"

namespace spinchain {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::shape_overflow: return "shape-overflow";
    case ErrorKind::weight_mismatch: return "weight-mismatch";
    case ErrorKind::size_mismatch: return "size-mismatch";
    case ErrorKind::degenerate_denominator: return "degenerate-denominator";
    case ErrorKind::divergence: return "divergence";
    case ErrorKind::site_range: return "site-range";
    case ErrorKind::boundary: return "boundary";
    case ErrorKind::number_nonconserving: return "number-nonconserving";
    case ErrorKind::sector_mismatch: return "sector-mismatch";
    case ErrorKind::range: return "range";
    case ErrorKind::non_power_of_two: return "non-power-of-two";
    case ErrorKind::dimension_mismatch: return "dimension-mismatch";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::domain: return "domain";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

}  // namespace spinchain
