// Copyright 2026 The spinchain Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchain/serialize.hpp"

#include "json.hpp"
#include "spinchain/error.hpp"

namespace spinchain {

namespace {

using json = nlohmann::ordered_json;

json qpoly_json(const QPoly& p) { return json(p.coeffs()); }

QPoly qpoly_value(const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "coefficients must be an array");
  for (const auto& c : j)
    if (!c.is_number_integer()) throw Error(ErrorKind::parse, "coefficients must be integers");
  return QPoly(j.get<std::vector<std::int64_t>>());
}

}  // namespace

std::string qpoly_to_json(const QPoly& p) { return qpoly_json(p).dump(); }

QPoly qpoly_from_json(const std::string& text) {
  try {
    return qpoly_value(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

std::string table_to_json(const CoefficientTable& t, int indent) {
  json j;
  j["kind"] = to_string(t.spec.kind);
  j["mu"] = t.spec.label.to_string();
  j["nu"] = t.nu.to_string();
  j["n"] = t.n;
  j["k"] = t.k;
  j["boundary"] = t.boundary == Boundary::closed ? "closed" : "open";
  j["entries"] = json::array();
  for (const auto& [lam, poly] : t.entries)
    j["entries"].push_back({{"lambda", lam.to_string()}, {"coeff", qpoly_json(poly)}});
  return j.dump(indent);
}

CoefficientTable table_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    CoefficientTable t;
    std::string kind = j.at("kind").get<std::string>();
    if (kind.size() != 1) throw Error(ErrorKind::parse, "bad kind '" + kind + "'");
    t.spec.kind = function_kind_from(kind[0]);
    t.spec.label = Partition::parse(j.at("mu").get<std::string>());
    t.nu = Partition::parse(j.at("nu").get<std::string>());
    t.n = j.at("n").get<int>();
    t.k = j.at("k").get<int>();
    std::string b = j.at("boundary").get<std::string>();
    if (b != "open" && b != "closed") throw Error(ErrorKind::parse, "bad boundary '" + b + "'");
    t.boundary = b == "closed" ? Boundary::closed : Boundary::open;
    for (const auto& e : j.at("entries")) {
      QPoly p = qpoly_value(e.at("coeff"));
      if (!p.is_zero()) t.entries.emplace(Partition::parse(e.at("lambda").get<std::string>()), std::move(p));
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

}  // namespace spinchain
