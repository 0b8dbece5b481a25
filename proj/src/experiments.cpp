#include "bnum/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "bnum/computation.hpp"
#include "bnum/encoding.hpp"
#include "bnum/errors.hpp"
#include "bnum/reduction.hpp"

namespace bnum {

namespace {

// Entropy of the padded layout around a payload region of `region` bits:
// header + region + sign.
EntropyValue padded_uncertainty(std::uint64_t region) {
    return representation_uncertainty(region + kPaddingHeaderBits + 1);
}

std::vector<double> successive_ratios(const std::vector<GrowthRecord>& records) {
    std::vector<double> ratios;
    ratios.reserve(records.empty() ? 0 : records.size() - 1);
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        const auto prev = records[i].padding;
        const auto next = records[i + 1].padding;
        if (prev == 0)
            ratios.push_back(next == 0
                                 ? 0.0
                                 : std::numeric_limits<double>::infinity());
        else
            ratios.push_back(static_cast<double>(next) /
                             static_cast<double>(prev));
    }
    return ratios;
}

}  // namespace

std::pair<ExperimentReport, ExperimentReport> theorem3_sweep(
    std::uint64_t max_n) {
    if (max_n < 2)
        throw std::domain_error("sweep needs max_n >= 2");

    ExperimentReport efficient{"theorem3_efficient", {}, GrowthClass::Polynomial, {}};
    ExperimentReport length{"theorem3_length", {}, GrowthClass::Exponential, {}};
    for (std::uint64_t n = 2; n <= max_n; ++n) {
        const std::uint64_t baseline = payload_length_binary(n);
        const EntropyValue eff_target = split_uncertainty(baseline, 1);
        efficient.records.push_back(GrowthRecord{
            n, baseline, baseline, 0, eff_target, padded_uncertainty(baseline)});

        const EntropyValue len_target = split_uncertainty(n, 1);
        length.records.push_back(GrowthRecord{n, baseline, n, n - baseline,
                                              len_target,
                                              padded_uncertainty(n)});
    }
    efficient.fit_evidence = successive_ratios(efficient.records);
    length.fit_evidence = successive_ratios(length.records);
    return {std::move(efficient), std::move(length)};
}

namespace {

ExperimentReport theorem4_impl(std::uint64_t max_b, const BaselineFn& baseline,
                               const TuringMachine* materialize_from) {
    if (max_b < 1)
        throw std::domain_error("sweep needs max_b >= 1");
    if (max_b > kMaxTheorem4Parameter)
        throw CapacityError("2^b counts overflow past b = 62");

    ExperimentReport report{"theorem4", {}, GrowthClass::Exponential, {}};
    for (std::uint64_t b = 1; b <= max_b; ++b) {
        const std::uint64_t required = std::uint64_t{1} << b;
        const std::uint64_t base = baseline(b);
        const std::uint64_t padding = required > base ? required - base : 0;
        const EntropyValue target = split_uncertainty(required, 1);

        EntropyValue achieved = padded_uncertainty(std::max(base, required));
        if (materialize_from != nullptr && b <= kMaterializationCutoff) {
            const BitString payload =
                encode(b, EncodingScheme::Binary, SignConvention::Normal);
            const BitString input = payload.slice(0, payload.payload_size());
            const bool output =
                run(*materialize_from, input).verdict == Verdict::Accept;
            const Computation c =
                encode_computation(*materialize_from, input, output);
            const auto [reduced, plan] = reduce_computation(c, target);
            if (plan.bits_to_add != padding)
                throw std::logic_error(
                    "materialized padding disagrees with the closed form");
            achieved = reduced_uncertainty(reduced);
            if (!(achieved < target))
                throw std::logic_error(
                    "materialized computation missed the uncertainty target");
        }
        report.records.push_back(
            GrowthRecord{b, base, required, padding, target, achieved});
    }
    report.fit_evidence = successive_ratios(report.records);
    return report;
}

}  // namespace

ExperimentReport theorem4_sweep(std::uint64_t max_b,
                                const BaselineFn& baseline) {
    return theorem4_impl(max_b, baseline, nullptr);
}

ExperimentReport theorem4_sweep(std::uint64_t max_b, const TuringMachine& m) {
    const BaselineFn baseline = [&m](std::uint64_t b) {
        const BitString payload =
            encode(b, EncodingScheme::Binary, SignConvention::Normal);
        const BitString input = payload.slice(0, payload.payload_size());
        const bool output = run(m, input).verdict == Verdict::Accept;
        return encode_computation(m, input, output).combined.payload_size();
    };
    return theorem4_impl(max_b, baseline, &m);
}

ExperimentReport theorem4_sweep(std::uint64_t max_b) {
    const TuringMachine m = trailing_one_acceptor();
    return theorem4_sweep(max_b, m);
}

RatioEvidence growth_ratio_check(const ExperimentReport& report) {
    if (report.records.size() < 3)
        throw InsufficientData("growth classification needs at least 3 records");

    RatioEvidence evidence;
    evidence.ratios = successive_ratios(report.records);

    std::vector<double> defined;
    for (std::size_t i = 0; i + 1 < report.records.size(); ++i)
        if (report.records[i].padding > 0)
            defined.push_back(evidence.ratios[i]);

    if (defined.empty()) {
        // Nothing ever needed to grow: degenerate zero sequence.
        evidence.verdict = RatioVerdict::Polynomial;
        return evidence;
    }

    const std::size_t tail = std::min<std::size_t>(3, defined.size());
    const auto first = defined.end() - static_cast<std::ptrdiff_t>(tail);
    const double lo = *std::min_element(first, defined.end());
    const double hi = *std::max_element(first, defined.end());
    double sum = 0.0;
    for (auto it = first; it != defined.end(); ++it) sum += *it;
    evidence.limit = sum / static_cast<double>(tail);

    const bool stable = hi - lo <= 0.01;
    if (stable && std::abs(evidence.limit - 1.0) <= 0.01)
        evidence.verdict = RatioVerdict::Polynomial;
    else if (stable && evidence.limit >= 1.5)
        evidence.verdict = RatioVerdict::Exponential;
    else
        evidence.verdict = RatioVerdict::Unclassified;
    return evidence;
}

std::string format_g9(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

void emit_csv(const ExperimentReport& report, std::ostream& out) {
    out << "parameter,baseline_length,required_length,padding,epsilon,achieved\n";
    for (const auto& r : report.records) {
        out << r.parameter << ',' << r.baseline_length << ','
            << r.required_length << ',' << r.padding << ','
            << format_g9(r.epsilon.value()) << ','
            << format_g9(r.achieved.value()) << '\n';
    }
}

}  // namespace bnum
