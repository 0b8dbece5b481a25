#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "bnum/bitstring.hpp"

namespace bnum {

/// Which bit value encodes the root number zero. Normal puts the sign bit
/// at 1 (a zero digit really is a zero); Flipped is its bitwise-complement
/// world with sign bit 0.
enum class SignConvention : std::uint8_t { Normal, Flipped };

/// How the payload carries the value: Binary by positional digits (the
/// shortest coding), Length by the number of payload bits alone.
enum class EncodingScheme : std::uint8_t { Binary, Length };

/// A natural number together with the scheme and sign convention used to
/// render it. The value domain is 64-bit.
struct BNumber {
    std::uint64_t value = 0;
    EncodingScheme scheme = EncodingScheme::Binary;
    SignConvention convention = SignConvention::Normal;

    friend bool operator==(const BNumber&, const BNumber&) = default;
};

/// Renders n as payload ++ sign under the given scheme and convention.
///
/// Binary/Normal: standard binary payload, sign 1. Binary/Flipped: the
/// complemented payload, sign 0. Length/Normal: n fill bits 0, sign 1.
/// Length/Flipped: n fill bits 1, sign 0.
BitString encode(std::uint64_t n, EncodingScheme scheme,
                 SignConvention convention);

BitString render(const BNumber& b);

/// Reads a value back out of a representation. The sign bit selects the
/// convention; Length decoding uses only the payload length. Throws
/// MalformedRepresentation on empty input or an empty Binary payload, and
/// CapacityError when a Binary payload exceeds the 64-bit value domain.
std::uint64_t decode(const BitString& bits, EncodingScheme scheme);

/// The two representations of n, one per sign convention (Normal first).
/// In the Binary scheme the pair are bitwise complements of each other.
std::pair<BitString, BitString> possible_encodings(std::uint64_t n,
                                                   EncodingScheme scheme);

/// The next b-number: value + 1 with scheme and convention preserved.
/// Throws CapacityError at the top of the 64-bit value domain.
BNumber successor(const BNumber& b);

/// Nested-set rendering of a von Neumann ordinal.
struct SetTerm {
    std::uint64_t n = 0;
    std::string text;
};

inline constexpr std::uint64_t kVonNeumannDisplayLimit = 20;

/// Builds the nested-set display of n via n = (n-1) U {n-1}. The term
/// doubles in size per step, so n is capped at kVonNeumannDisplayLimit
/// (CapacityError above it). `ascii` renders the empty set as "{}" instead
/// of the UTF-8 '∅'.
SetTerm von_neumann(std::uint64_t n, bool ascii = false);

}  // namespace bnum
