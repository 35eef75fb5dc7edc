// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "spinchain/error.hpp"
#include "spinchain/quantized.hpp"
#include "support.hpp"

namespace spinchain {
namespace {

std::uint64_t bits(const char* s) { return BitCode::parse(s).mask; }

QState ref_state(const SectorPtr& s) { return QState::basis(s, 0); }

QPoly amp(const QState& v, const Partition& p) { return v.amp[static_cast<std::size_t>(v.sector->index_of(p))]; }
QPoly amp(const QState& v, const char* b) { return v.amp[static_cast<std::size_t>(v.sector->index_of(bits(b)))]; }

std::size_t support(const QState& v) {
  std::size_t c = 0;
  for (const auto& a : v.amp) c += !a.is_zero();
  return c;
}

const QPoly q = QPoly::q();

TEST(Elementary, DegreeOneCoincides) {
  for (auto b : {Boundary::open, Boundary::closed}) {
    auto s = FockSector::make(5, 2, b);
    EXPECT_EQ(build_elementary(1, s), build_complete(1, s));
    auto sum = SectorOperator(s);
    for (int i = 1; i <= (b == Boundary::closed ? 5 : 4); ++i) sum = add(sum, hop_operator(i, s));
    EXPECT_EQ(build_elementary(1, s), sum);
    EXPECT_EQ(build_elementary(0, s), SectorOperator::identity(s));
    EXPECT_EQ(build_complete(0, s), SectorOperator::identity(s));
  }
}

TEST(Elementary, Commute) {
  auto s = FockSector::make(6, 3, Boundary::closed);
  for (int j = 1; j <= 4; ++j)
    for (int k = j + 1; k <= 4; ++k) EXPECT_TRUE(commutator(build_elementary(j, s), build_elementary(k, s)).is_zero());
}

TEST(Elementary, RangeRules) {
  auto c = FockSector::make(4, 2, Boundary::closed);
  try {
    build_elementary(4, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::range);
  }
  EXPECT_THROW(build_elementary(-1, c), Error);
  EXPECT_TRUE(build_elementary(4, FockSector::make(4, 2, Boundary::open)).is_zero());
  EXPECT_THROW(build_complete(2, FockSector::make(4, 2, Boundary::open), CompleteRoute::transfer_matrix), Error);
  EXPECT_THROW(build_current(0, c), Error);
}

TEST(Complete, ReferenceStateActions) {
  for (auto b : {Boundary::open, Boundary::closed}) {
    auto s = FockSector::make(6, 3, b);
    auto h3 = apply_function({FunctionKind::h, {3}}, ref_state(s));
    EXPECT_EQ(support(h3), 1u);
    EXPECT_EQ(amp(h3, "110001"), QPoly(1));
    auto h21 = apply_function({FunctionKind::h, {2, 1}}, ref_state(s));
    EXPECT_EQ(support(h21), 2u);
    EXPECT_EQ(amp(h21, "101010"), QPoly(1));
    EXPECT_EQ(amp(h21, "110001"), QPoly(1));
  }
}

TEST(Complete, TransferRouteMatchesWords) {
  for (int n = 2; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      auto s = FockSector::make(n, k, Boundary::closed);
      for (int r = 0; r < n; ++r)
        EXPECT_EQ(build_complete(r, s, CompleteRoute::transfer_matrix), build_complete(r, s, CompleteRoute::words))
            << n << " " << k << " " << r;
    }
}

TEST(TransferMatrix, Coefficients) {
  auto s = FockSector::make(4, 2, Boundary::closed);
  auto t = fermionic_transfer_matrix(s, 5);
  ASSERT_EQ(t.size(), 6u);
  EXPECT_EQ(t[0], SectorOperator::identity(s));
  EXPECT_EQ(t[1], build_schur(SkewShape({1}), s));
  std::vector<Factor> vac{Factor::vacancy(4), Factor::vacancy(3), Factor::vacancy(2), Factor::vacancy(1)};
  EXPECT_EQ(t[4], scale(build_word_operator(vac, s), q));
  EXPECT_TRUE(t[5].is_zero());
  auto empty = FockSector::make(4, 0, Boundary::closed);
  EXPECT_EQ(fermionic_transfer_matrix(empty, 4)[4], scale(SectorOperator::identity(empty), q));
  auto blocks = fermionic_monodromy(s);
  EXPECT_EQ(add(scale(blocks.a[2], q), blocks.d[2]), t[2]);
}

TEST(Currents, ReferenceStateActions) {
  auto s = FockSector::make(6, 3, Boundary::closed);
  auto j3 = apply_function({FunctionKind::p, {3}}, ref_state(s));
  EXPECT_EQ(amp(j3, Partition{3}), QPoly(1));
  EXPECT_EQ(amp(j3, Partition{2, 1}), QPoly(-1));
  EXPECT_EQ(amp(j3, Partition{1, 1, 1}), QPoly(1));
  EXPECT_EQ(support(j3), 3u);
  auto j111 = apply_function({FunctionKind::p, {1, 1, 1}}, ref_state(s));
  EXPECT_EQ(amp(j111, Partition{3}), QPoly(1));
  EXPECT_EQ(amp(j111, Partition{2, 1}), QPoly(2));
  EXPECT_EQ(amp(j111, Partition{1, 1, 1}), QPoly(1));
  auto j21 = apply_function({FunctionKind::p, {2, 1}}, ref_state(s));
  EXPECT_EQ(amp(j21, Partition{3}), QPoly(1));
  EXPECT_EQ(amp(j21, Partition{1, 1, 1}), QPoly(-1));
  EXPECT_EQ(support(j21), 2u);
}

TEST(Currents, Commute) {
  for (int n = 2; n <= 8; ++n) {
    auto s = FockSector::make(n, n / 2, Boundary::closed);
    for (int a = 1; a <= 4; ++a)
      for (int b = a + 1; b <= 4; ++b) EXPECT_TRUE(commutator(build_current(a, s), build_current(b, s)).is_zero());
  }
}

TEST(Schur, ClosedFourTwoExamples) {
  auto s = FockSector::make(4, 2, Boundary::closed);
  auto v = apply_schur(SkewShape({1}), QState::basis(s, s->index_of(Partition{2, 1})));
  EXPECT_EQ(amp(v, Partition{}), q);
  EXPECT_EQ(amp(v, Partition{2, 2}), QPoly(1));
  EXPECT_EQ(support(v), 2u);
  auto w = apply_schur(SkewShape({2, 2}), QState::basis(s, s->index_of(Partition{2, 2})));
  EXPECT_EQ(amp(w, Partition{}), q * q);
  EXPECT_EQ(support(w), 1u);
}

TEST(Schur, CreatesClassicalStateFromReference) {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{6, 3}})
    for (auto b : {Boundary::open, Boundary::closed}) {
      auto s = FockSector::make(n, k, b);
      for (const auto& mu : s->partitions()) {
        auto v = apply_schur(SkewShape(mu), ref_state(s));
        EXPECT_EQ(support(v), 1u) << mu.to_string();
        EXPECT_EQ(amp(v, mu), QPoly(1)) << mu.to_string();
      }
    }
}

TEST(Schur, MethodsAgree) {
  auto open = FockSector::make(6, 3, Boundary::open);
  auto closed = FockSector::make(6, 3, Boundary::closed);
  for (int d = 1; d <= 4; ++d)
    for (const auto& la : partitions_of(d)) {
      if (!open->box().fits(la)) continue;
      SkewShape sh(la);
      auto ref = build_schur(sh, open);
      EXPECT_EQ(build_schur(sh, open, OperatorMethod::jacobi_trudi_e), ref);
      EXPECT_EQ(build_schur(sh, open, OperatorMethod::ssyt_sum), ref);
      EXPECT_EQ(build_schur(sh, closed, OperatorMethod::jacobi_trudi_e), build_schur(sh, closed)) << la.to_string();
    }
}

TEST(Coefficients, Examples) {
  auto s63 = FockSector::make(6, 3, Boundary::closed);
  auto p21 = extract_coefficients({FunctionKind::p, {2, 1}}, {}, s63);
  EXPECT_EQ(p21.at({3}), QPoly(1));
  EXPECT_EQ(p21.at({2, 1}), QPoly(0));
  EXPECT_EQ(p21.at({1, 1, 1}), QPoly(-1));
  EXPECT_EQ(p21.entries.size(), 2u);
  auto h111 = extract_coefficients({FunctionKind::h, {1, 1, 1}}, {}, s63);
  EXPECT_EQ(h111.at({1, 1, 1}), QPoly(1));
  EXPECT_EQ(h111.at({2, 1}), QPoly(2));
  EXPECT_EQ(h111.at({3}), QPoly(1));
  auto s42 = FockSector::make(4, 2, Boundary::closed);
  auto s11 = extract_coefficients({FunctionKind::s, {1}}, {1}, s42);
  EXPECT_EQ(s11.at({2}), QPoly(1));
  EXPECT_EQ(s11.at({1, 1}), QPoly(1));
  EXPECT_EQ(s11.entries.size(), 2u);
  // h_3 vanishes on the 2x2 box; only an overflowing nu is an error.
  EXPECT_TRUE(extract_coefficients({FunctionKind::s, {3}}, {}, s42).entries.empty());
  EXPECT_THROW(extract_coefficients({FunctionKind::s, {1}}, {3}, s42), Error);
}

TEST(Coefficients, PositivityAndGrading) {
  for (auto b : {Boundary::open, Boundary::closed}) {
    auto s = FockSector::make(6, 3, b);
    for (const auto& mu : s->partitions()) {
      if (mu.size() > 4) continue;
      for (const auto& nu : s->partitions()) {
        if (mu.size() + nu.size() > 6) continue;
        for (auto kind : {FunctionKind::h, FunctionKind::s, FunctionKind::p}) {
          auto t = extract_coefficients({kind, mu}, nu, s);
          EXPECT_TRUE(t.graded()) << to_string(kind) << mu.to_string() << "/" << nu.to_string();
          if (kind != FunctionKind::p) {
            EXPECT_TRUE(t.nonnegative());
          }
          for (const auto& [la, c] : t.entries)
            for (int d = 0; d <= c.degree(); ++d) {
              if (c.coeff(d) != 0) {
                EXPECT_EQ(la.size() + 6 * d, mu.size() + nu.size());
              }
            }
        }
      }
    }
  }
}

TEST(Coefficients, TrailingZerosRemoveTheTwist) {
  // μ, ν of total size at most 3 live in the 3x3 box of n=6; with n=10,
  // k=3 the wrap cannot be reached.
  auto small = FockSector::make(6, 3, Boundary::open);
  auto large = FockSector::make(10, 3, Boundary::closed);
  for (const auto& mu : small->partitions())
    for (const auto& nu : small->partitions()) {
      if (mu.size() + nu.size() > 3) continue;
      auto open = extract_coefficients({FunctionKind::s, mu}, nu, small);
      auto closed = extract_coefficients({FunctionKind::s, mu}, nu, large);
      for (const auto& [la, c] : closed.entries) {
        EXPECT_EQ(c.degree(), 0);
        EXPECT_EQ(c, open.at(la));
      }
      for (const auto& [la, c] : open.entries) EXPECT_EQ(c, closed.at(la));
    }
}

TEST(Coefficients, CommutingFamily) {
  auto s = FockSector::make(6, 3, Boundary::closed);
  std::vector<SectorOperator> ops;
  for (int d = 1; d <= 4; ++d)
    for (const auto& la : partitions_of(d))
      for (auto kind : {FunctionKind::e, FunctionKind::h, FunctionKind::p, FunctionKind::s}) {
        if (kind == FunctionKind::e && la[0] >= 6) continue;
        ops.push_back(build_function({kind, la}, s));
      }
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j) ASSERT_TRUE(commutator(ops[i], ops[j]).is_zero()) << i << " " << j;
}

TEST(Coefficients, ApplyMatchesOperator) {
  auto s = FockSector::make(6, 3, Boundary::closed);
  for (const auto& nu : s->partitions())
    for (auto spec : {QuantizedFunctionSpec{FunctionKind::s, {2, 1}}, QuantizedFunctionSpec{FunctionKind::h, {2, 1}},
                      QuantizedFunctionSpec{FunctionKind::p, {2, 1}}, QuantizedFunctionSpec{FunctionKind::e, {2}}}) {
      auto v = QState::basis(s, s->index_of(nu));
      EXPECT_EQ(apply_function(spec, v).amp, apply(build_function(spec, s), v).amp);
    }
}

TEST(FominGreene, SuitePasses) {
  for (auto [n, k] : {std::pair{4, 2}, std::pair{6, 3}, std::pair{5, 0}, std::pair{3, 3}})
    for (auto b : {Boundary::open, Boundary::closed}) {
      auto rep = verify_fomin_greene(FockSector::make(n, k, b));
      for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << n << k << " " << c.name << " " << c.witness;
      EXPECT_TRUE(rep.pass());
    }
}

TEST(FominGreene, ClosedIdentityFailsAtOrderN) {
  auto s = FockSector::make(4, 2, Boundary::closed);
  // Sum_{i+j=n} (-1)^j e_i h_j picks up the full wrap term.
  SectorOperator sum(s);
  for (int i = 0; i <= 3; ++i) {
    int j = 4 - i;
    auto term = multiply(build_elementary(i, s), build_complete(j, s));
    sum = j % 2 ? subtract(sum, term) : add(sum, term);
  }
  std::string witness;
  EXPECT_FALSE(is_zero_operator(sum, &witness));
  EXPECT_FALSE(witness.empty());
}

TEST(FunctionKind, Names) {
  for (char c : {'e', 'h', 'p', 's'}) EXPECT_EQ(to_string(function_kind_from(c))[0], c);
  EXPECT_THROW(function_kind_from('x'), Error);
}

}  // namespace
}  // namespace spinchain
