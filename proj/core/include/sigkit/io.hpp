#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sigkit/bignum.hpp"
#include "sigkit/realizability.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/system.hpp"

namespace sigkit {

// Accepts an integer, a fraction "p/q", or a plain decimal such as "0.25";
// all of these are exact rationals. Anything else (exponents, stray
// characters) is rejected with std::invalid_argument.
BigRat parse_rational(std::string_view text);

// Comma-separated list of rationals; must be non-empty.
std::vector<BigRat> parse_vector_literal(std::string_view text);

struct LoadedSystem {
  System system;
  // True when the input family had proper inclusions and was reduced to its
  // minimal members on load.
  bool minimized = false;
};

// Reads the {"n": ..., "min_cut_sets": [[...], ...]} interchange document.
// With strict = true a non-antichain family is an error instead of being
// reduced.
LoadedSystem system_from_json(const std::string& text, bool strict);

// Serializers produce compact single-line JSON with fixed key order, sorted
// families, and fractions in lowest terms, so output is byte-stable.
// Integer counts are written as bare numerals even beyond 64 bits.
std::string system_to_json(const System& system);
std::string signature_to_json(const CountVector& counts);
std::string verdict_to_json(const RealizabilityVerdict& verdict);
std::string verify_to_json(const CountVector& expected, const CountVector& actual);
std::string achievable_record_to_json(const CountVector& counts, const System& witness);

}  // namespace sigkit
