// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace spinchain {

// Exit codes: 0 success, 1 verification or oracle failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "formal" yields nullopt; otherwise "1", "-0.5", "0.3+0.4i", "i", "-2i".
std::optional<std::complex<double>> parse_twist(std::string_view text);

// Largest n accepted; SPINCHAIN_MAX_N if set, else 14.
int max_chain_length();

}  // namespace spinchain
