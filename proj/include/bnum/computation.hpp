#pragma once

#include <cstdint>

#include "bnum/bitstring.hpp"
#include "bnum/entropy.hpp"
#include "bnum/machine.hpp"

namespace bnum {

/// A whole computation folded into one bitstring: the machine code, the
/// length-prefixed input payload and the output bit, which sits in the
/// final (sign) position.
///
/// combined = machine_bits ++ [payload length:16] ++ input_payload ++ output
struct Computation {
    BitString machine_bits;
    BitString input_payload;
    bool output_bit = false;
    BitString combined;

    friend bool operator==(const Computation&, const Computation&) = default;
};

inline constexpr std::size_t kMaxInputPayloadBits = 65535;

/// Encodes (machine, input value, output bit) into a Computation. The
/// input payload is the standard binary rendering of the value. The output
/// bit is taken as given; callers wanting a verified bit obtain it from
/// run(). Throws CapacityError when the payload exceeds 16-bit framing.
Computation encode_computation(const TuringMachine& m,
                               std::uint64_t input_value, bool output_bit);

/// Same, but with an explicit payload bitstring as the input.
Computation encode_computation(const TuringMachine& m,
                               const BitString& input_payload,
                               bool output_bit);

/// Splits a combined bitstring back into its parts and validates the
/// machine. Throws MalformedRepresentation when the framing is wrong.
Computation parse_computation(const BitString& combined);

/// Theorem-style uncertainty bounds of the number the combined string
/// denotes under the length reading (its payload length L): the lower,
/// value-form extreme I(1/(L+1)) equals the string's own uncertainty
/// E = I(1/(L+1)), which depends only on the representation length.
UncertaintyBounds computation_uncertainty(const Computation& c);

/// E of the combined representation: I(1/|combined|).
EntropyValue computation_entropy(const Computation& c);

}  // namespace bnum
