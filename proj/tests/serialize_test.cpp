// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "spinchain/error.hpp"
#include "spinchain/quantized.hpp"
#include "spinchain/serialize.hpp"
#include "support.hpp"

namespace spinchain {
namespace {

TEST(Json, QPolyArrays) {
  EXPECT_EQ(qpoly_to_json(QPoly()), "[]");
  EXPECT_EQ(qpoly_to_json(QPoly(std::vector<std::int64_t>{1, 0, -2})), "[1,0,-2]");
  EXPECT_EQ(qpoly_from_json("[0,3]"), QPoly::monomial(3, 1));
  EXPECT_THROW(qpoly_from_json("[1.5]"), Error);
  EXPECT_THROW(qpoly_from_json("{"), Error);
}

TEST(Json, TableSchema) {
  auto s = FockSector::make(4, 2, Boundary::closed);
  auto t = extract_coefficients({FunctionKind::s, {1}}, {2, 1}, s);
  std::string text = table_to_json(t);
  EXPECT_EQ(text,
            R"({"kind":"s","mu":"1","nu":"2,1","n":4,"k":2,"boundary":"closed",)"
            R"("entries":[{"lambda":"","coeff":[0,1]},{"lambda":"2,2","coeff":[1]}]})");
}

TEST(Json, RoundTripEveryTable) {
  for (auto b : {Boundary::open, Boundary::closed}) {
    auto s = FockSector::make(6, 3, b);
    for (const auto& mu : s->partitions()) {
      if (mu.size() > 3) continue;
      for (const auto& nu : s->partitions())
        for (auto kind : {FunctionKind::h, FunctionKind::p, FunctionKind::s}) {
          auto t = extract_coefficients({kind, mu}, nu, s);
          EXPECT_EQ(table_from_json(table_to_json(t)), t);
          EXPECT_EQ(table_from_json(table_to_json(t, 2)), t);
        }
    }
  }
}

TEST(Json, RejectsMalformedTables) {
  EXPECT_THROW(table_from_json(R"({"kind":"s"})"), Error);
  EXPECT_THROW(table_from_json(
                   R"({"kind":"z","mu":"","nu":"","n":2,"k":1,"boundary":"open","entries":[]})"),
               Error);
  EXPECT_THROW(table_from_json(
                   R"({"kind":"s","mu":"1,2","nu":"","n":2,"k":1,"boundary":"open","entries":[]})"),
               Error);
}

}  // namespace
}  // namespace spinchain
