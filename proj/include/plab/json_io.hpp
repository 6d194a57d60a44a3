#pragma once

// JSON encodings. Every number is written as a decimal string.

#include "plab/cubic_field.hpp"
#include "plab/descent.hpp"
#include "plab/dynamics.hpp"
#include "plab/elliptic.hpp"
#include "plab/fp_poly.hpp"
#include "plab/preimage_curves.hpp"

#include <json.hpp>

namespace plab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const Integer& n);
Json to_json(const Rational& q);
/// ["c0", "c1", "c2"]
Json to_json(const KElement& a);
/// {"u": ..., "v": ...} or "infinity"
Json to_json(const ECPoint& P);
Json to_json(const ProjPoint& p);
Json to_json(const UnitClass& u);
Json to_json(const DeltaPair& d);
Json to_json(const CDPoint& p);
Json to_json(const FpFactorization& f, const std::string& var);
Json to_json(const PreimageTree& t);
Json to_json(const DMSolution& s);
Json to_json(const DMSearchResult& r);
Json to_json(const RouteVerdict& v);
Json to_json(const SingularReport& r);

} // namespace plab
