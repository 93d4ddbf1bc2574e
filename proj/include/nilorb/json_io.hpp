#pragma once

// JSON encodings shared by the CLI and the self-test. Keys are emitted in
// sorted order (nlohmann::json default), so output is byte-for-byte stable.

#include <json.hpp>

#include "nilorb/atlas.hpp"
#include "nilorb/delta_check.hpp"
#include "nilorb/exact_linalg.hpp"
#include "nilorb/partitions.hpp"
#include "nilorb/root_system.hpp"

namespace nilorb {

using Json = nlohmann::json;

/// Integers that fit in 64 bits become numbers, larger ones strings.
Json to_json(const Integer& x);
/// Integers as above; proper fractions as "p/q" strings.
Json to_json(const Rational& x);
Json to_json(std::span<const Integer> v);
/// Canonical representative (last coordinate zero).
Json to_json(const QuotientVector& v);
/// The stored representative, unshifted.
Json raw_coords_json(const QuotientVector& v);
Json to_json(const LatticeBasis& b);
Json to_json(const DeltaReport& report);
Json to_json(const ReferenceCheck& check);

Json to_json(const Partition& p);
Json to_json(const ClassicalOrbit& o);
Json to_json(const StepScript& script);
Json to_json(const BirationalSource& s);

Json to_json(const ExceptionalOrbitRecord& record);
Json to_json(const ConsistencyReport& report);

}  // namespace nilorb
