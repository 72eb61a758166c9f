#pragma once

// JSON encodings of lattices, vectors, cone contexts and log pair tables.
// Integers are read from JSON numbers or decimal strings; rationals from
// "p/q" / "n" strings or integer numbers. Output is always canonical:
// rationals in lowest terms, big integers as strings.

#include "symplat/cones.hpp"
#include "symplat/lattice.hpp"
#include "symplat/mld.hpp"

#include <json.hpp>

#include <string_view>

namespace symplat::io {

using Json = nlohmann::ordered_json;

// Throws ErrorCode::parse on malformed text.
Json parse_json(std::string_view text);
// Throws ErrorCode::io when the file cannot be read; "-" reads stdin.
std::string read_input(const std::string& path);

// Field access that throws ErrorCode::schema on missing or mistyped fields.
const Json& field(const Json& object, const char* name);

Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);

Lattice lattice_from_json(const Json& j);          // {"gram": [[...]]}
FramedVector vector_from_json(const Json& j);      // {"frame", "coords"}
ConeContext context_from_json(const Json& j);      // {"lattice","h","primes","walls","monodromy_gens"}
LogPairTable table_from_json(const Json& j);       // {"rows","containment","complete"}

Json to_json(const Integer& a);  // decimal string
Json to_json(const Rational& r);  // "p/q" or "n"
Json to_json(const IntVector& v);  // array of decimal strings
Json to_json(const FramedVector& v);
Json to_json(const MldValue& v);

// JSON number when the value fits in 64 bits, else a decimal string.
Json small_integer_json(const Integer& a);

}  // namespace symplat::io
