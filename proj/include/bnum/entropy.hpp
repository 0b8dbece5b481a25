#pragma once

#include <compare>
#include <cstdint>

namespace bnum {

/// Probability of a two-outcome event, validated to [0, 1].
class Probability {
public:
    explicit Probability(double p);
    double value() const { return p_; }

    friend auto operator<=>(const Probability&, const Probability&) = default;

private:
    double p_;
};

/// Entropy of a two-outcome event in bits, always within [0, 1].
class EntropyValue {
public:
    explicit EntropyValue(double e);
    double value() const { return e_; }

    friend auto operator<=>(const EntropyValue&, const EntropyValue&) = default;

private:
    double e_;
};

/// The two extreme uncertainties of a representation of b: all uncertainty
/// in the payload (lower, value form) versus all uncertainty in the sign
/// (upper, length form).
struct UncertaintyBounds {
    EntropyValue lower;
    EntropyValue upper;
    std::uint64_t b;
};

/// I(p) = -p*log2(p) - (1-p)*log2(1-p), with 0*log2(0) taken as 0.
EntropyValue binary_entropy(Probability p);

/// (I(1/(b+1)), I(1/(ceil(log2(b+1))+1))) for b >= 1. Throws
/// std::domain_error at b = 0.
UncertaintyBounds entropy_bounds(std::uint64_t b);

/// The unique p* in [0, 0.5] with |I(p*) - e| < 1e-9, by bisection.
Probability inverse_entropy(EntropyValue e);

/// Uncertainty of a representation split into a certain and an uncertain
/// bit group: I(1/(certain + uncertain)), the flip-decision probability
/// 1/(payload length + 1). Throws std::domain_error when both are zero.
EntropyValue split_uncertainty(std::uint64_t certain_bits,
                               std::uint64_t uncertain_group_size);

/// Uncertainty carried by a whole representation of total_bits bits
/// (payload plus sign): I(1/total_bits).
EntropyValue representation_uncertainty(std::uint64_t total_bits);

/// ceil(log2(b+1)), the Binary-scheme payload length of b (b >= 1).
unsigned payload_length_binary(std::uint64_t b);

}  // namespace bnum
