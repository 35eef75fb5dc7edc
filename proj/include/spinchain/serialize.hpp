// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "spinchain/qpoly.hpp"
#include "spinchain/quantized.hpp"

namespace spinchain {

// Coefficient arrays [c0, c1, ...]; the zero polynomial is [].
std::string qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const std::string& text);

// {"kind": "s", "mu": "1", "nu": "2,1", "n": 4, "k": 2, "boundary": "closed",
//  "entries": [{"lambda": "2,2", "coeff": [1]}, ...]} with entries in canonical order.
std::string table_to_json(const CoefficientTable& table, int indent = -1);
CoefficientTable table_from_json(const std::string& text);

}  // namespace spinchain
