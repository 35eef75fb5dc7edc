// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "spinchain/error.hpp"
#include "spinchain/fock.hpp"
#include "support.hpp"

namespace spinchain {
namespace {

std::uint64_t bits(const char* s) { return BitCode::parse(s).mask; }

QState ket(const SectorPtr& s, const char* b) { return QState::basis(s, s->index_of(bits(b))); }

QPoly amplitude(const QState& v, const char* b) {
  return v.amp[static_cast<std::size_t>(v.sector->index_of(bits(b)))];
}

bool is_zero(const QState& v) {
  for (const auto& a : v.amp)
    if (!a.is_zero()) return false;
  return true;
}

TEST(Sector, BasisAndCache) {
  auto s = FockSector::make(4, 2, Boundary::closed);
  EXPECT_EQ(s->dim(), 6);
  EXPECT_EQ(s, FockSector::make(4, 2, Boundary::closed));
  EXPECT_NE(s, FockSector::make(4, 2, Boundary::open));
  EXPECT_EQ(s->partition(0), Partition{});
  EXPECT_EQ(s->mask(0), bits("1100"));
  EXPECT_EQ(s->index_of(Partition{2, 2}), 5);
  EXPECT_EQ(s->index_of(Partition{3}), -1);
  EXPECT_EQ(s->index_of(bits("1110")), -1);
  EXPECT_THROW(FockSector::make(1, 1, Boundary::closed), Error);
  EXPECT_EQ(FockSector::make(5, 0, Boundary::open)->dim(), 1);
}

TEST(Modes, AnnihilationSigns) {
  auto s1 = FockSector::make(3, 1, Boundary::open);
  auto s2 = FockSector::make(3, 2, Boundary::open);
  auto v = apply_annihilation(1, ket(s1, "100"));
  EXPECT_EQ(v.sector->k(), 0);
  EXPECT_EQ(v.amp[0], QPoly(1));
  auto w = apply_annihilation(2, ket(s2, "110"));
  EXPECT_EQ(amplitude(w, "100"), QPoly(-1));
  EXPECT_TRUE(is_zero(apply_annihilation(1, ket(s2, "011"))));
}

TEST(Modes, CreationSigns) {
  auto s1 = FockSector::make(3, 1, Boundary::open);
  auto v = apply_creation(3, ket(s1, "100"));
  EXPECT_EQ(amplitude(v, "101"), QPoly(-1));
  EXPECT_TRUE(is_zero(apply_creation(1, ket(s1, "100"))));
}

TEST(Hops, Examples) {
  auto s = FockSector::make(3, 1, Boundary::open);
  auto v = apply_hop(1, QPoly::q(), ket(s, "100"));
  EXPECT_EQ(amplitude(v, "010"), QPoly(1));
  auto c = FockSector::make(4, 1, Boundary::closed);
  auto w = apply_hop(4, QPoly::q(), ket(c, "0001"));
  EXPECT_EQ(amplitude(w, "1000"), QPoly::q());
  EXPECT_THROW(apply_hop(3, QPoly::q(), ket(s, "001")), Error);
}

TEST(Hops, WrapSignFollowsSpinChain) {
  // One particle wraps with no string, two particles pick up a minus from
  // the fermion left behind, which the spin form cancels.
  auto one = hop_image(bits("0001"), 4, 4);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->sign, 1);
  EXPECT_EQ(one->qpow, 1);
  std::uint64_t out = 0;
  EXPECT_EQ(jw_bilinear_sign(bits("0101"), 1, 4, &out), -1);
  auto two = hop_image(bits("0101"), 4, 4);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->mask, bits("1100"));
  EXPECT_EQ(two->sign, 1);
  auto three = hop_image(bits("0111"), 4, 4);
  ASSERT_TRUE(three);
  EXPECT_EQ(three->sign, 1);
}

TEST(Hops, MatrixOnSmallSector) {
  auto s = FockSector::make(3, 1, Boundary::open);
  auto op = build_word_operator({Factor::hop(1)}, s);
  EXPECT_EQ(op.nonzeros(), 1u);
  EXPECT_EQ(op.at(s->index_of(bits("010")), s->index_of(bits("100"))), QPoly(1));
  EXPECT_EQ(op, hop_operator(1, s));
}

TEST(Words, FourSiteStrip) {
  auto s = FockSector::make(4, 1, Boundary::open);
  auto op = build_word_operator({Factor::create(4), Factor::number(3), Factor::number(2), Factor::annihilate(1)}, s);
  EXPECT_EQ(op.nonzeros(), 0u);  // nu_3 nu_2 need sites 2, 3 occupied
  auto c = FockSector::make(4, 3, Boundary::closed);
  auto strip = build_word_operator({Factor::create(4), Factor::number(3), Factor::number(2), Factor::annihilate(1)}, c);
  EXPECT_EQ(strip.nonzeros(), 1u);
  EXPECT_EQ(strip.at(c->index_of(bits("0111")), c->index_of(bits("1110"))), QPoly(1));
  auto k1 = build_word_operator({Factor::create(4), Factor::vacancy(3), Factor::vacancy(2), Factor::annihilate(1)}, s);
  EXPECT_EQ(k1.nonzeros(), 1u);
  EXPECT_EQ(k1.at(s->index_of(bits("0001")), s->index_of(bits("1000"))), QPoly(1));
}

TEST(Words, Errors) {
  auto s = FockSector::make(4, 2, Boundary::open);
  try {
    build_word_operator({Factor::annihilate(1)}, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::number_nonconserving);
  }
  try {
    build_word_operator({Factor::hop(4)}, s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::boundary);
  }
  try {
    build_word_operator({Factor::hop(5)}, FockSector::make(4, 2, Boundary::closed));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::site_range);
  }
}

TEST(Words, CanonicalAnticommutation) {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      auto s = FockSector::make(n, k, Boundary::open);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          auto ab = build_word_operator({Factor::annihilate(i), Factor::create(j)}, s);
          auto ba = build_word_operator({Factor::create(j), Factor::annihilate(i)}, s);
          auto sum = add(ab, ba);
          auto want = i == j ? SectorOperator::identity(s) : SectorOperator(s);
          EXPECT_EQ(sum, want) << n << " " << k << " " << i << " " << j;
        }
    }
}

TEST(Modes, AnnihilatorsAnticommute) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 2; k <= n; ++k) {
      auto s = FockSector::make(n, k, Boundary::open);
      for (int idx = 0; idx < s->dim(); ++idx) {
        auto v = QState::basis(s, idx);
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            auto a = apply_annihilation(i, apply_annihilation(j, v));
            auto b = apply_annihilation(j, apply_annihilation(i, v));
            for (std::size_t r = 0; r < a.amp.size(); ++r) ASSERT_EQ(a.amp[r] + b.amp[r], QPoly());
          }
      }
    }
}

TEST(Hops, NilpotentAndFarApartCommute) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto s = FockSector::make(n, k, Boundary::closed);
      std::vector<SectorOperator> x;
      for (int i = 1; i <= n; ++i) x.push_back(hop_operator(i, s));
      for (int i = 0; i < n; ++i) {
        EXPECT_TRUE(multiply(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]).is_zero());
        for (int j = i + 2; j < n; ++j) {
          if (i == 0 && j == n - 1) continue;  // cyclic neighbours
          EXPECT_TRUE(commutator(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]).is_zero());
        }
      }
    }
}

TEST(Hops, LocalRelation) {
  for (int n = 2; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto s = FockSector::make(n, k, Boundary::open);
      for (int i = 1; i + 1 < n; ++i) {
        auto a = hop_operator(i, s), b = hop_operator(i + 1, s);
        auto lhs = multiply(add(a, b), multiply(a, b));
        auto rhs = multiply(multiply(a, b), add(a, b));
        EXPECT_EQ(lhs, rhs);
      }
    }
}

TEST(SparseAlgebra, IdentitiesAndParallelAgreement) {
  testing::Gen g(17);
  auto s = FockSector::make(6, 3, Boundary::closed);
  for (int t = 0; t < 5; ++t) {
    auto a = g.sparse_operator(s, 0.2), b = g.sparse_operator(s, 0.2);
    EXPECT_TRUE(commutator(a, a).is_zero());
    EXPECT_EQ(multiply(a, SectorOperator::identity(s)), a);
    EXPECT_EQ(multiply(SectorOperator::identity(s), a), a);
    EXPECT_EQ(multiply(a, b), multiply_serial(a, b));
    EXPECT_EQ(subtract(add(a, b), b), a);
    EXPECT_EQ(operator_algebra(a, b, AlgebraMode::commutator), subtract(multiply(a, b), multiply(b, a)));
    auto z = std::complex<double>(0.3, -0.4);
    Eigen::MatrixXcd dense = to_dense(a, z) * to_dense(b, z);
    EXPECT_LT((to_dense(multiply(a, b), z) - dense).cwiseAbs().maxCoeff(), 1e-9);
    auto v = QState::basis(s, g.uniform(0, s->dim() - 1));
    auto av = apply(a, v);
    auto idx = static_cast<std::size_t>(std::find_if(v.amp.begin(), v.amp.end(), [](const QPoly& p) { return !p.is_zero(); }) - v.amp.begin());
    for (int r = 0; r < s->dim(); ++r) EXPECT_EQ(av.amp[static_cast<std::size_t>(r)], a.at(r, static_cast<int>(idx)));
  }
}

TEST(SparseAlgebra, SectorMismatch) {
  auto a = SectorOperator::identity(FockSector::make(4, 2, Boundary::closed));
  auto b = SectorOperator::identity(FockSector::make(4, 2, Boundary::open));
  try {
    multiply(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::sector_mismatch);
  }
}

TEST(SparseAlgebra, NumericAdjoint) {
  auto s = FockSector::make(4, 2, Boundary::closed);
  auto x = evaluate(hop_operator(4, s), {0, 1});
  auto xd = adjoint(x);
  EXPECT_LT((to_dense(xd) - to_dense(x).adjoint()).cwiseAbs().maxCoeff(), 1e-15);
}

}  // namespace
}  // namespace spinchain
