#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bnum/entropy.hpp"
#include "bnum/machine.hpp"

namespace bnum {

/// One sweep point: how many bits a representation of the given parameter
/// must grow to reach the uncertainty target.
struct GrowthRecord {
    std::uint64_t parameter = 0;
    std::uint64_t baseline_length = 0;
    std::uint64_t required_length = 0;
    std::uint64_t padding = 0;  // max(0, required - baseline)
    EntropyValue epsilon;
    EntropyValue achieved;
};

enum class GrowthClass : std::uint8_t { Polynomial, Exponential };

struct ExperimentReport {
    std::string label;
    std::vector<GrowthRecord> records;        // sorted by parameter
    GrowthClass growth_class = GrowthClass::Polynomial;
    std::vector<double> fit_evidence;         // successive padding ratios
};

/// For each n in [2, max_n], the padding cost of hitting the two extreme
/// uncertainty targets from the efficient-coding baseline ceil(log2(n+1)):
/// the efficient target is already met (padding 0, polynomial in the bit
/// length of n), the length target needs n - ceil(log2(n+1)) more bits
/// (exponential in the bit length of n). Returns (efficient, length).
std::pair<ExperimentReport, ExperimentReport> theorem3_sweep(
    std::uint64_t max_n);

using BaselineFn = std::function<std::uint64_t(std::uint64_t)>;

inline constexpr std::uint64_t kMaxTheorem4Parameter = 62;
inline constexpr std::uint64_t kMaterializationCutoff = 20;

/// For each b in [1, max_b], the cost of pushing a computation on input b
/// below the target I(1/(2^b + 1)): the payload must reach 2^b bits, so
/// padding = max(0, 2^b - baseline(b)). Counts are exact integers. With
/// this overload nothing is materialized.
ExperimentReport theorem4_sweep(std::uint64_t max_b,
                                const BaselineFn& baseline);

/// Same sweep with the baseline taken from real encoded computations of
/// the given machine on input value b. Up to the materialization cutoff
/// the padded computation is actually built via reduce_computation and its
/// achieved uncertainty is verified against the target.
ExperimentReport theorem4_sweep(std::uint64_t max_b, const TuringMachine& m);

/// The default sweep: the trailing-one acceptor supplies the baseline.
ExperimentReport theorem4_sweep(std::uint64_t max_b);

enum class RatioVerdict : std::uint8_t { Polynomial, Exponential, Unclassified };

struct RatioEvidence {
    std::vector<double> ratios;  // padding(i+1)/padding(i); 0 marks 0/0
    RatioVerdict verdict = RatioVerdict::Unclassified;
    double limit = 0.0;          // mean of the stable tail, 0 if degenerate
};

/// Classifies a report from its successive padding ratios: a stable tail
/// within 1 +- 0.01 reads Polynomial, a stable tail >= 1.5 reads
/// Exponential, anything else stays Unclassified. All-zero padding is the
/// degenerate Polynomial case. Throws InsufficientData below 3 records.
RatioEvidence growth_ratio_check(const ExperimentReport& report);

/// Writes `parameter,baseline_length,required_length,padding,epsilon,achieved`
/// rows; entropies carry 9 significant digits. Byte-deterministic.
void emit_csv(const ExperimentReport& report, std::ostream& out);

/// Fixed 9-significant-digit rendering used for all entropy output.
std::string format_g9(double value);

}  // namespace bnum
