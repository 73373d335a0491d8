#pragma once

// JSON encodings. Rationals are canonical strings ("p" or "p/q"); objects use
// sorted keys, so dumps are byte-deterministic. Every *_from_json throws
// InvalidInput on malformed data.

#include <json.hpp>

#include "rootchar/affine_root.hpp"
#include "rootchar/finite_root.hpp"
#include "rootchar/group_ring.hpp"
#include "rootchar/quadric.hpp"

namespace rootchar {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const Vector& v);
Json to_json(const std::vector<Vector>& vs);
Json to_json(const GroupRingElement& x);
Json to_json(const SupportMap& m);
Json to_json(const SignedSupportMap& m);
Json to_json(const RootSystem& r);
Json to_json(const AffineVector& v);
Json to_json(const std::vector<AffineVector>& vs);
Json to_json(const std::vector<AffineItem>& items);
Json to_json(const AffineSupportSpec& spec);
Json to_json(const SphereFit& f);
Json to_json(const ParaboloidFit& f);
Json to_json(const AxiomReport& a);
Json to_json(const AffineAxiomReport& a);
Json to_json(const FiniteVerdict& v);
Json to_json(const AffineVerdict& v);

Rational rational_from_json(const Json& j);
/// dim = 0 accepts any length >= 1.
Vector vector_from_json(const Json& j, std::size_t dim = 0);
GroupRingElement group_ring_from_json(const Json& j);
SupportMap support_map_from_json(const Json& j);
SignedSupportMap signed_support_map_from_json(const Json& j);
RootSystem root_system_from_json(const Json& j);
AffineVector affine_vector_from_json(const Json& j, std::size_t dim = 0);
AffineSupportSpec affine_spec_from_json(const Json& j);

/// Parses text, turning syntax errors into InvalidInput.
Json parse_json(const std::string& text);

}  // namespace rootchar
