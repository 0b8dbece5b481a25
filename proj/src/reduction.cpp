#include "bnum/reduction.hpp"

#include "bnum/errors.hpp"

namespace bnum {

namespace {

// Total representation lengths are capped so the integer search and the
// probability 1/T stay comfortably inside the double range.
constexpr std::uint64_t kMaxTotalBits = std::uint64_t{1} << 62;

// Smallest total length T >= 2 (payload + sign) with I(1/T) <= epsilon.
// I(1/T) is strictly decreasing from I(1/2) = 1 on T >= 2; the degenerate
// one-bit total is excluded so a padded string always keeps a payload.
std::uint64_t required_total_bits(EntropyValue epsilon) {
    if (epsilon.value() <= 0.0)
        throw UnreachableTarget(
            "uncertainty cannot reach zero with finite padding");
    auto meets = [&](std::uint64_t total) {
        return representation_uncertainty(total).value() <= epsilon.value();
    };
    if (meets(2)) return 2;
    if (!meets(kMaxTotalBits))
        throw CapacityError("required padding exceeds 2^62 bits");
    std::uint64_t lo = 2, hi = kMaxTotalBits;  // lo fails, hi meets
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (meets(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

std::uint64_t PaddedString::original_payload_length() const {
    if (bits.size() < kPaddingHeaderBits + 1)
        throw MalformedPadding("padded string shorter than header plus sign");
    BitReader r(bits);
    return r.read(kPaddingHeaderBits);
}

std::uint64_t PaddedString::padding_count() const {
    const std::uint64_t original = original_payload_length();
    const std::uint64_t region = bits.size() - kPaddingHeaderBits - 1;
    if (original > region)
        throw MalformedPadding("header claims more payload bits than present");
    return region - original;
}

std::uint64_t padding_bits_needed(std::uint64_t current_payload_length,
                                  EntropyValue epsilon) {
    const std::uint64_t total = required_total_bits(epsilon);
    const std::uint64_t have = current_payload_length + 1;
    return total > have ? total - have : 0;
}

PaddingPlan plan_padding(std::uint64_t current_payload_length,
                         EntropyValue epsilon, FillRule fill) {
    return PaddingPlan{epsilon, inverse_entropy(epsilon),
                       current_payload_length,
                       padding_bits_needed(current_payload_length, epsilon),
                       fill};
}

PaddedString apply_mapping(const BitString& bits, EntropyValue epsilon,
                           FillRule fill, const BitString& pattern) {
    if (bits.empty())
        throw MalformedRepresentation("cannot pad an empty representation");
    const std::uint64_t original = bits.payload_size();
    const std::uint64_t to_add = padding_bits_needed(original, epsilon);
    const bool sign = bits.sign();
    // Padding carries no value; its bits use the sign-consistent encoding
    // of zero unless a pattern was supplied.
    const bool fill_bit = !sign;

    BitWriter w;
    w.write(original, kPaddingHeaderBits);
    for (std::uint64_t i = 0; i < original; ++i) w.write_bit(bits[i]);
    for (std::uint64_t i = 0; i < to_add; ++i) {
        if (fill == FillRule::Pattern && !pattern.empty())
            w.write_bit(pattern[i % pattern.size()]);
        else
            w.write_bit(fill_bit);
    }
    w.write_bit(sign);
    return PaddedString{w.take()};
}

BitString invert_mapping(const PaddedString& padded) {
    const std::uint64_t original = padded.original_payload_length();
    const std::uint64_t region = padded.bits.size() - kPaddingHeaderBits - 1;
    if (original > region)
        throw MalformedPadding("header claims more payload bits than present");
    BitString out = padded.bits.slice(kPaddingHeaderBits, original);
    out.push_back(padded.bits.sign());
    return out;
}

EntropyValue achieved_uncertainty(const PaddedString& padded) {
    return representation_uncertainty(padded.bits.size());
}

std::pair<ReducedComputation, PaddingPlan> reduce_computation(
    const Computation& c, EntropyValue epsilon, FillRule fill) {
    const BitString pattern =
        fill == FillRule::Pattern ? c.machine_bits : BitString();
    PaddingPlan plan = plan_padding(c.combined.payload_size(), epsilon, fill);
    PaddedString padded = apply_mapping(c.combined, epsilon, fill, pattern);
    return {ReducedComputation{std::move(padded)}, plan};
}

Computation recover_computation(const ReducedComputation& reduced) {
    return parse_computation(invert_mapping(reduced.padded));
}

EntropyValue reduced_uncertainty(const ReducedComputation& reduced) {
    return achieved_uncertainty(reduced.padded);
}

}  // namespace bnum
