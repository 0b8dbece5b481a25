#include "bnum/entropy.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace bnum {

namespace {
constexpr int kMaxBisectionSteps = 200;
}  // namespace

Probability::Probability(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("probability outside [0, 1]");
}

EntropyValue::EntropyValue(double e) : e_(e) {
    // Allow a whisker of floating slack around the mathematical range,
    // then store the clamped value.
    if (!(e >= -1e-9 && e <= 1.0 + 1e-9))
        throw std::domain_error("entropy outside [0, 1] bits");
    if (e < 0.0) e_ = 0.0;
    if (e > 1.0) e_ = 1.0;
}

EntropyValue binary_entropy(Probability p) {
    const double v = p.value();
    if (v == 0.0 || v == 1.0) return EntropyValue(0.0);
    return EntropyValue(-v * std::log2(v) - (1.0 - v) * std::log2(1.0 - v));
}

unsigned payload_length_binary(std::uint64_t b) {
    // ceil(log2(b+1)) == bit_width(b) for b >= 1.
    return static_cast<unsigned>(std::bit_width(b));
}

UncertaintyBounds entropy_bounds(std::uint64_t b) {
    if (b == 0)
        throw std::domain_error("uncertainty bounds require b >= 1");
    const EntropyValue lower =
        binary_entropy(Probability(1.0 / (static_cast<double>(b) + 1.0)));
    const EntropyValue upper = binary_entropy(
        Probability(1.0 / (static_cast<double>(payload_length_binary(b)) + 1.0)));
    return UncertaintyBounds{lower, upper, b};
}

Probability inverse_entropy(EntropyValue e) {
    const double target = e.value();
    if (target == 0.0) return Probability(0.0);
    if (target == 1.0) return Probability(0.5);

    // I is continuous and strictly increasing on [0, 0.5]; plain bisection
    // run to bracket exhaustion, with a hard iteration cap. The result is
    // far inside the documented |I(p*) - e| < 1e-9 tolerance.
    double lo = 0.0;
    double hi = 0.5;
    double mid = 0.25;
    for (int i = 0; i < kMaxBisectionSteps; ++i) {
        mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const double v = binary_entropy(Probability(mid)).value();
        if (v < target)
            lo = mid;
        else
            hi = mid;
    }
    return Probability(mid);
}

EntropyValue split_uncertainty(std::uint64_t certain_bits,
                               std::uint64_t uncertain_group_size) {
    const std::uint64_t total = certain_bits + uncertain_group_size;
    if (total == 0)
        throw std::domain_error("split requires at least one bit");
    return representation_uncertainty(total);
}

EntropyValue representation_uncertainty(std::uint64_t total_bits) {
    if (total_bits == 0)
        throw std::domain_error("a representation has at least one bit");
    return binary_entropy(Probability(1.0 / static_cast<double>(total_bits)));
}

}  // namespace bnum
