#include "bnum/computation.hpp"

#include "bnum/encoding.hpp"
#include "bnum/errors.hpp"

namespace bnum {

namespace {

Computation assemble(BitString machine_bits, BitString input_payload,
                     bool output_bit) {
    if (input_payload.size() > kMaxInputPayloadBits)
        throw CapacityError("input payload exceeds 16-bit length framing");
    BitWriter w;
    w.write_all(machine_bits);
    w.write(input_payload.size(), 16);
    w.write_all(input_payload);
    w.write_bit(output_bit);
    return Computation{std::move(machine_bits), std::move(input_payload),
                       output_bit, w.take()};
}

}  // namespace

Computation encode_computation(const TuringMachine& m,
                               std::uint64_t input_value, bool output_bit) {
    BitString payload = encode(input_value, EncodingScheme::Binary,
                               SignConvention::Normal);
    // encode() appends the sign bit; the computation carries the payload only.
    return encode_computation(m, payload.slice(0, payload.payload_size()),
                              output_bit);
}

Computation encode_computation(const TuringMachine& m,
                               const BitString& input_payload,
                               bool output_bit) {
    return assemble(serialize_machine(m), input_payload, output_bit);
}

Computation parse_computation(const BitString& combined) {
    // The machine code is self-delimiting: header fields give the
    // transition count, and everything after it is length-prefixed.
    BitReader r(combined);
    r.read(8 * 4);
    const auto num_transitions = r.read(16);
    const std::size_t machine_bits = 48 + 22 * num_transitions;
    if (combined.size() < machine_bits + 16 + 1)
        throw MalformedRepresentation("combined string too short");

    BitString machine_part = combined.slice(0, machine_bits);
    deserialize_machine(machine_part);  // validates

    BitReader cursor(combined);
    for (std::size_t i = 0; i < machine_bits; ++i) cursor.read_bit();
    const auto payload_len = cursor.read(16);
    if (combined.size() != machine_bits + 16 + payload_len + 1)
        throw MalformedRepresentation(
            "combined length disagrees with the payload length field");
    BitString payload = combined.slice(machine_bits + 16, payload_len);
    const bool output = combined[combined.size() - 1];
    Computation c{std::move(machine_part), std::move(payload), output,
                  combined};
    return c;
}

UncertaintyBounds computation_uncertainty(const Computation& c) {
    // The string's uncertainty depends only on its payload length L:
    // whichever bit group is taken as uncertain, the flip decision has
    // probability 1/(L+1). Read as a length-coded number the string
    // denotes L itself, so the value-form lower bound coincides with E.
    const std::uint64_t payload_length = c.combined.size() - 1;
    return entropy_bounds(payload_length);
}

EntropyValue computation_entropy(const Computation& c) {
    return representation_uncertainty(c.combined.size());
}

}  // namespace bnum
