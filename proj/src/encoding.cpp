#include "bnum/encoding.hpp"

#include <bit>
#include <limits>

#include "bnum/errors.hpp"

namespace bnum {

namespace {

// Standard binary payload, MSB first; value 0 keeps one explicit digit so
// that "0|1" and "1|0" exist as representations.
BitString binary_payload(std::uint64_t n) {
    BitString out;
    const int width = n == 0 ? 1 : std::bit_width(n);
    for (int i = width; i-- > 0;) out.push_back((n >> i) & 1u);
    return out;
}

}  // namespace

BitString encode(std::uint64_t n, EncodingScheme scheme,
                 SignConvention convention) {
    const bool flipped = convention == SignConvention::Flipped;
    BitString out;
    switch (scheme) {
        case EncodingScheme::Binary:
            out = binary_payload(n);
            if (flipped) out = dual(out);
            break;
        case EncodingScheme::Length:
            // Value carried by length alone; the fill bit is the
            // convention's encoding of zero.
            for (std::uint64_t i = 0; i < n; ++i) out.push_back(flipped);
            break;
    }
    out.push_back(!flipped);  // sign: 1 under Normal, 0 under Flipped
    return out;
}

BitString render(const BNumber& b) {
    return encode(b.value, b.scheme, b.convention);
}

std::uint64_t decode(const BitString& bits, EncodingScheme scheme) {
    if (bits.empty())
        throw MalformedRepresentation("cannot decode an empty bitstring");
    const bool flipped = !bits.sign();
    const std::size_t payload = bits.payload_size();
    if (scheme == EncodingScheme::Length) return payload;

    if (payload == 0)
        throw MalformedRepresentation(
            "binary representation requires at least one payload bit");
    if (payload > 64)
        throw CapacityError("binary payload exceeds the 64-bit value domain");
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < payload; ++i) {
        const bool bit = flipped ? !bits[i] : bits[i];
        if ((value >> 63) & 1u)
            throw CapacityError(
                "binary payload exceeds the 64-bit value domain");
        value = (value << 1) | std::uint64_t{bit};
    }
    return value;
}

std::pair<BitString, BitString> possible_encodings(std::uint64_t n,
                                                   EncodingScheme scheme) {
    return {encode(n, scheme, SignConvention::Normal),
            encode(n, scheme, SignConvention::Flipped)};
}

BNumber successor(const BNumber& b) {
    if (b.value == std::numeric_limits<std::uint64_t>::max())
        throw CapacityError("successor overflows the 64-bit value domain");
    return BNumber{b.value + 1, b.scheme, b.convention};
}

SetTerm von_neumann(std::uint64_t n, bool ascii) {
    if (n > kVonNeumannDisplayLimit)
        throw CapacityError("set term for " + std::to_string(n) +
                            " exceeds the display limit of " +
                            std::to_string(kVonNeumannDisplayLimit));
    const std::string empty_set = ascii ? "{}" : "∅";
    std::string term = empty_set;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (k == 1) {
            term = "{" + term + "}";
        } else {
            // (k-1) U {k-1}: reopen the brace list and append a copy of
            // the previous term as the last element.
            std::string next = term.substr(0, term.size() - 1);
            next += ',';
            next += term;
            next += '}';
            term = std::move(next);
        }
    }
    return SetTerm{n, std::move(term)};
}

}  // namespace bnum
