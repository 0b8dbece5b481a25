#pragma once

#include <cstdint>
#include <utility>

#include "bnum/bitstring.hpp"
#include "bnum/computation.hpp"
#include "bnum/entropy.hpp"

namespace bnum {

/// Values for the padding bits: the sign-consistent encoding of zero
/// (constant 0 under Normal, 1 under Flipped), or a supplied bit pattern
/// cycled over the padding region (e.g. a machine's program code).
enum class FillRule : std::uint8_t { SignZero, Pattern };

/// How many bits the mapping must add, and where the target came from.
struct PaddingPlan {
    EntropyValue target_epsilon;
    Probability p_star;
    std::uint64_t original_length = 0;  // payload bits before padding
    std::uint64_t bits_to_add = 0;
    FillRule fill_pattern = FillRule::SignZero;
};

inline constexpr unsigned kPaddingHeaderBits = 32;

/// A padded representation. Bit layout, MSB first:
///   [original payload length : 32][original payload][padding][sign]
/// Removing the header and the padding recovers the original bit-for-bit.
struct PaddedString {
    BitString bits;

    static PaddedString from_bits(BitString raw) { return PaddedString{std::move(raw)}; }

    /// The header value. Throws MalformedPadding on short strings.
    std::uint64_t original_payload_length() const;
    std::uint64_t padding_count() const;

    friend bool operator==(const PaddedString&, const PaddedString&) = default;
};

/// Minimal k such that a payload of current_payload_length + k bits meets
/// the target: I(1/(L + k + 1)) <= epsilon, solved by direct entropy
/// evaluation over integer lengths. Throws UnreachableTarget when epsilon
/// is 0 (no finite padding reaches certainty) and CapacityError when the
/// required length exceeds 2^62 bits.
std::uint64_t padding_bits_needed(std::uint64_t current_payload_length,
                                  EntropyValue epsilon);

/// Computes the full plan, including p* = inverse of the target entropy.
PaddingPlan plan_padding(std::uint64_t current_payload_length,
                         EntropyValue epsilon,
                         FillRule fill = FillRule::SignZero);

/// Re-encodes bits with enough padding to push the representation's
/// uncertainty strictly below epsilon. The sign bit stays last; the header
/// makes removal of the added bits exact. The header itself lengthens the
/// representation, so the achieved uncertainty is strictly below the
/// target even when no padding bits are required.
PaddedString apply_mapping(const BitString& bits, EntropyValue epsilon,
                           FillRule fill = FillRule::SignZero,
                           const BitString& pattern = BitString());

/// Exact inverse of apply_mapping on its image. Throws MalformedPadding
/// when the header is inconsistent with the string length.
BitString invert_mapping(const PaddedString& padded);

/// Uncertainty of the padded representation: I(1/|bits|).
EntropyValue achieved_uncertainty(const PaddedString& padded);

/// A computation re-encoded by the padding mapping. The machine is
/// unchanged; running it means removing the added bits first, then
/// executing the original machine on the recovered input.
struct ReducedComputation {
    PaddedString padded;  // over the whole combined string, output bit last
};

/// Pads the combined encoding of c until its uncertainty is strictly below
/// epsilon, preserving the output bit in the sign position. The returned
/// plan reports the padding count for the combined payload.
std::pair<ReducedComputation, PaddingPlan> reduce_computation(
    const Computation& c, EntropyValue epsilon,
    FillRule fill = FillRule::SignZero);

/// Recovers the original computation from a reduced one.
Computation recover_computation(const ReducedComputation& reduced);

EntropyValue reduced_uncertainty(const ReducedComputation& reduced);

}  // namespace bnum
