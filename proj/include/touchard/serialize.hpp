#pragma once

// JSON / CSV encodings shared by the CLI and the Python bindings.
//
//   Rational      "p/q", or "p" when q = 1
//   Poly          ["c0", "c1", ...]                 lowest degree first
//   WeylExpr      [[a, b, "c"], ...]                sorted by (a, b)
//   TouchardPoly  {"m": int, "n": int, "coeffs": [...]}
//   Triangle      {"m": int, "rows": [[...], ...]}  and CSV "n,k,value"
//   Report        {"identity_id", "parameters", "verified_order", "status", "first_mismatch"}

#include "touchard/identities.hpp"
#include "touchard/stirling.hpp"
#include "touchard/touchard.hpp"
#include "touchard/weyl.hpp"

#include <json.hpp>

#include <string>

namespace touchard {

using Json = nlohmann::ordered_json;

Json to_json(const Poly& p);
Json to_json(const WeylExpr& w);
Json to_json(const TouchardPoly& t);
Json to_json(const Triangle& t);
Json to_json(const VerificationReport& r);

Poly poly_from_json(const Json& j);
WeylExpr weyl_from_json(const Json& j);

std::string triangle_to_csv(const Triangle& t);

}  // namespace touchard
