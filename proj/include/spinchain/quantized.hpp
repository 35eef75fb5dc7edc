// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinchain/fock.hpp"
#include "spinchain/partitions.hpp"

namespace spinchain {

enum class FunctionKind { e, h, p, s };

// kind e/h/p with label mu means the product over parts of mu; kind s is
// the Schur operator of mu.
struct QuantizedFunctionSpec {
  FunctionKind kind = FunctionKind::s;
  Partition label;

  friend bool operator==(const QuantizedFunctionSpec&, const QuantizedFunctionSpec&) = default;
};

enum class CompleteRoute {
  automatic,        // transfer matrix on closed chains, words on open ones
  transfer_matrix,  // closed chains only
  words,            // ordered products of hops
};

enum class OperatorMethod { jacobi_trudi_h, jacobi_trudi_e, ssyt_sum };

// Sums of ordered hop words. On closed chains indices are read cyclically
// and r must stay below n.
SectorOperator build_elementary(int r, const SectorPtr& sector);
SectorOperator build_complete(int r, const SectorPtr& sector, CompleteRoute route = CompleteRoute::automatic);
SectorOperator build_current(int r, const SectorPtr& sector);
SectorOperator build_schur(const SkewShape& shape, const SectorPtr& sector,
                           OperatorMethod method = OperatorMethod::jacobi_trudi_h);
SectorOperator build_function(const QuantizedFunctionSpec& spec, const SectorPtr& sector);

// Applies the function to a state without assembling the full operator.
QState apply_function(const QuantizedFunctionSpec& spec, const QState& v);
QState apply_schur(const SkewShape& shape, const QState& v);

// Coefficients of u^0..u^truncation of the twisted fermionic transfer
// matrix. The A block enters with weight (-1)^k q so that the twist
// matches the boundary hop.
std::vector<SectorOperator> fermionic_transfer_matrix(const SectorPtr& sector, int truncation);

struct MonodromyBlocks {
  std::vector<SectorOperator> a;  // u^r coefficients of A_F
  std::vector<SectorOperator> d;  // u^r coefficients of D_F
};
MonodromyBlocks fermionic_monodromy(const SectorPtr& sector);

struct CoefficientTable {
  QuantizedFunctionSpec spec;
  Partition nu;
  int n = 0;
  int k = 0;
  Boundary boundary = Boundary::open;
  std::map<Partition, QPoly, CanonicalLess> entries;  // nonzero only

  QPoly at(const Partition& lambda) const;
  bool nonnegative() const;
  // Every q^d term sits at |lambda| = |mu| + |nu| - n d (d = 0 on open chains).
  bool graded() const;
  friend bool operator==(const CoefficientTable&, const CoefficientTable&) = default;
};

CoefficientTable extract_coefficients(const QuantizedFunctionSpec& spec, const Partition& nu,
                                      const SectorPtr& sector);

struct IdentityCheck {
  IdentityCheck() = default;
  explicit IdentityCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  bool pass = true;
  std::size_t instances = 0;
  std::string witness;  // first violated matrix entry
};

struct FominGreeneReport {
  int n = 0, k = 0;
  Boundary boundary = Boundary::open;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

// Exact checks of the hop relations and the generating-function
// identities. Closed chains are checked through t^(n-1), open ones through t^n.
FominGreeneReport verify_fomin_greene(const SectorPtr& sector);

// Fills witness with the first nonzero entry, if any.
bool is_zero_operator(const SectorOperator& op, std::string* witness = nullptr);

const char* to_string(FunctionKind kind);
FunctionKind function_kind_from(char c);

}  // namespace spinchain
