#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "bnum/entropy.hpp"

using namespace bnum;

// Reference values computed independently with 30-digit arithmetic.
namespace oracle {
constexpr double kEntropyThird = 0.91829583405448951;    // I(1/3)
constexpr double kEntropyQuarter = 0.81127812445913286;  // I(1/4)
constexpr double kEntropyEighth = 0.54356444319959641;   // I(1/8)
constexpr double kEntropyNinth = 0.5032583347756457;     // I(1/9)
constexpr double kInverseOfHalf = 0.11002786443835955;   // I(p)=0.5
}  // namespace oracle

TEST_CASE("binary entropy hits the anchor values") {
    CHECK(binary_entropy(Probability(0.5)).value() == 1.0);
    CHECK(binary_entropy(Probability(0.0)).value() == 0.0);
    CHECK(binary_entropy(Probability(1.0)).value() == 0.0);
    CHECK(binary_entropy(Probability(1.0 / 3.0)).value() ==
          doctest::Approx(oracle::kEntropyThird).epsilon(1e-12));
    // cross-check identity: I(1/3) = log2(3) - 2/3
    CHECK(binary_entropy(Probability(1.0 / 3.0)).value() ==
          doctest::Approx(std::log2(3.0) - 2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("probability and entropy domains are enforced") {
    CHECK_THROWS_AS(Probability(-0.1), std::domain_error);
    CHECK_THROWS_AS(Probability(1.1), std::domain_error);
    CHECK_THROWS_AS(Probability(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(EntropyValue(-0.5), std::domain_error);
    CHECK_THROWS_AS(EntropyValue(1.5), std::domain_error);
}

TEST_CASE("entropy is symmetric around one half") {
    for (int i = 0; i <= 10000; ++i) {
        const double p = static_cast<double>(i) / 10000.0;
        const double a = binary_entropy(Probability(p)).value();
        const double b = binary_entropy(Probability(1.0 - p)).value();
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("entropy increases strictly on the left half") {
    double prev = binary_entropy(Probability(0.0)).value();
    for (int i = 1; i <= 5000; ++i) {
        const double p = 0.5 * static_cast<double>(i) / 5000.0;
        const double cur = binary_entropy(Probability(p)).value();
        CHECK(cur > prev);
        prev = cur;
    }
    CHECK(prev == 1.0);  // maximum at p = 0.5
}

TEST_CASE("uncertainty bounds match the proof anchors") {
    const auto one = entropy_bounds(1);
    CHECK(one.lower.value() == 1.0);
    CHECK(one.upper.value() == 1.0);

    const auto three = entropy_bounds(3);
    CHECK(three.lower.value() == doctest::Approx(oracle::kEntropyQuarter).epsilon(1e-6));
    CHECK(three.upper.value() == doctest::Approx(oracle::kEntropyThird).epsilon(1e-6));

    const auto seven = entropy_bounds(7);
    CHECK(seven.lower.value() == doctest::Approx(oracle::kEntropyEighth).epsilon(1e-6));
    CHECK(seven.upper.value() == doctest::Approx(oracle::kEntropyQuarter).epsilon(1e-6));

    CHECK_THROWS_AS(entropy_bounds(0), std::domain_error);
}

TEST_CASE("bounds are ordered, with equality exactly at b = 1 and 2") {
    double prev_lower = 2.0;
    for (std::uint64_t b = 1; b <= (1u << 16); ++b) {
        const auto bounds = entropy_bounds(b);
        if (b == 1 || b == 2) {
            CHECK(bounds.lower.value() == bounds.upper.value());
        } else {
            CHECK(bounds.lower.value() < bounds.upper.value());
        }
        // the value-form bound decreases strictly in b
        CHECK(bounds.lower.value() < prev_lower);
        prev_lower = bounds.lower.value();
    }
}

TEST_CASE("inverse entropy solves I(p) = e") {
    CHECK(inverse_entropy(EntropyValue(1.0)).value() == 0.5);
    CHECK(inverse_entropy(EntropyValue(0.0)).value() == 0.0);
    CHECK(inverse_entropy(EntropyValue(0.5)).value() ==
          doctest::Approx(oracle::kInverseOfHalf).epsilon(1e-6));
    CHECK(inverse_entropy(EntropyValue(oracle::kEntropyThird)).value() ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-6));

    for (int i = 0; i <= 1000; ++i) {
        const double e = static_cast<double>(i) / 1000.0;
        const double p = inverse_entropy(EntropyValue(e)).value();
        CHECK(p <= 0.5);
        CHECK(std::abs(binary_entropy(Probability(p)).value() - e) < 1e-9);
    }
}

TEST_CASE("split uncertainty depends only on the total size") {
    CHECK(split_uncertainty(1, 1).value() == 1.0);  // payload length 1
    CHECK(split_uncertainty(2, 1).value() ==
          doctest::Approx(oracle::kEntropyThird).epsilon(1e-6));
    CHECK(split_uncertainty(1, 2).value() ==
          doctest::Approx(oracle::kEntropyThird).epsilon(1e-6));
    CHECK(split_uncertainty(8, 1).value() ==
          doctest::Approx(oracle::kEntropyNinth).epsilon(1e-6));
    CHECK_THROWS_AS(split_uncertainty(0, 0), std::domain_error);
    CHECK(representation_uncertainty(9) == split_uncertainty(8, 1));
}
