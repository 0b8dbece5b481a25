#include <algorithm>
#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bnum/computation.hpp"
#include "bnum/encoding.hpp"
#include "bnum/entropy.hpp"
#include "bnum/errors.hpp"
#include "bnum/experiments.hpp"
#include "bnum/machine.hpp"
#include "bnum/reduction.hpp"

namespace {

using namespace bnum;

// Malformed option values that CLI11 cannot reject itself.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

EntropyValue parse_epsilon(const std::string& text) {
    // Either a decimal literal or the exact form I(1/K).
    if (text.size() > 4 && text.rfind("I(1/", 0) == 0 && text.back() == ')') {
        const std::string digits = text.substr(4, text.size() - 5);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("entropy literal must look like I(1/K): " + text);
        errno = 0;
        const std::uint64_t k = std::strtoull(digits.c_str(), nullptr, 10);
        if (errno != 0)
            throw UsageError("denominator out of range in " + text);
        if (k == 0) throw std::domain_error("I(1/0) is undefined");
        return binary_entropy(Probability(1.0 / static_cast<double>(k)));
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("not an entropy value: " + text);
    }
    if (used != text.size())
        throw UsageError("not an entropy value: " + text);
    return EntropyValue(value);  // throws std::domain_error outside [0,1]
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TuringMachine load_machine(const std::string& path) {
    return parse_machine(read_file(path));
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Accept: return "Accept";
        case Verdict::Reject: return "Reject";
        case Verdict::StepLimit: return "StepLimit";
    }
    return "?";
}

void write_csv_file(const ExperimentReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    emit_csv(report, out);
}

const std::map<std::string, EncodingScheme> kSchemes{
    {"binary", EncodingScheme::Binary}, {"length", EncodingScheme::Length}};
const std::map<std::string, SignConvention> kConventions{
    {"normal", SignConvention::Normal}, {"flipped", SignConvention::Flipped}};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"b-number encodings, entropy bounds, and padding experiments"};
    app.require_subcommand(1);

    // encode
    auto* cmd_encode = app.add_subcommand("encode", "Render a value as payload|sign");
    std::uint64_t enc_value = 0;
    EncodingScheme enc_scheme = EncodingScheme::Binary;
    SignConvention enc_sign = SignConvention::Normal;
    cmd_encode->add_option("--value", enc_value, "Natural number to encode")
        ->required();
    cmd_encode->add_option("--scheme", enc_scheme, "binary or length")
        ->transform(CLI::CheckedTransformer(kSchemes));
    cmd_encode->add_option("--sign", enc_sign, "normal or flipped")
        ->transform(CLI::CheckedTransformer(kConventions));
    cmd_encode->callback([&] {
        std::cout << encode(enc_value, enc_scheme, enc_sign).to_text() << "\n";
    });

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "Read a value back from payload|sign");
    std::string dec_bits;
    EncodingScheme dec_scheme = EncodingScheme::Binary;
    cmd_decode->add_option("--bits", dec_bits, "Representation, e.g. 101|1")
        ->required();
    cmd_decode->add_option("--scheme", dec_scheme, "binary or length")
        ->transform(CLI::CheckedTransformer(kSchemes));
    cmd_decode->callback([&] {
        std::cout << decode(BitString::from_text(dec_bits), dec_scheme) << "\n";
    });

    // entropy
    auto* cmd_entropy = app.add_subcommand("entropy", "Two-outcome entropy I(p) or its inverse");
    double ent_p = 0.0;
    std::string ent_inverse;
    auto* opt_p = cmd_entropy->add_option("--p", ent_p, "Event probability");
    auto* opt_inv = cmd_entropy->add_option(
        "--inverse", ent_inverse, "Entropy whose p* in [0,0.5] is wanted");
    opt_p->excludes(opt_inv);
    cmd_entropy->callback([&] {
        if (opt_p->count() == 0 && opt_inv->count() == 0)
            throw UsageError("entropy needs --p or --inverse");
        if (opt_inv->count() > 0) {
            const Probability p = inverse_entropy(parse_epsilon(ent_inverse));
            std::cout << format_g9(p.value()) << "\n";
        } else {
            std::cout << format_g9(binary_entropy(Probability(ent_p)).value())
                      << "\n";
        }
    });

    // bounds
    auto* cmd_bounds = app.add_subcommand("bounds", "Uncertainty bounds of a b-number");
    std::uint64_t bounds_b = 0;
    cmd_bounds->add_option("--b", bounds_b, "b-number value (>= 1)")->required();
    cmd_bounds->callback([&] {
        const UncertaintyBounds bounds = entropy_bounds(bounds_b);
        std::cout << "lower=" << format_g9(bounds.lower.value())
                  << " upper=" << format_g9(bounds.upper.value()) << "\n";
    });

    // reduce
    auto* cmd_reduce = app.add_subcommand(
        "reduce", "Pad a representation below an uncertainty target");
    std::string red_bits, red_machine, red_epsilon, red_fill = "zero";
    std::uint64_t red_input = 0, red_steps = kDefaultStepLimit;
    auto* red_bits_opt = cmd_reduce->add_option("--bits", red_bits,
                                                "Representation to pad");
    auto* red_machine_opt = cmd_reduce->add_option(
        "--machine", red_machine, "Machine file; pads its whole computation");
    auto* red_input_opt = cmd_reduce->add_option(
        "--input", red_input, "Input value for the machine");
    cmd_reduce->add_option("--epsilon", red_epsilon,
                           "Target, a decimal or I(1/K)")
        ->required();
    cmd_reduce->add_option("--fill", red_fill,
                           "Padding bits: zero or machine-code");
    cmd_reduce->add_option("--step-limit", red_steps, "Simulation step limit");
    red_bits_opt->excludes(red_machine_opt);
    cmd_reduce->callback([&] {
        const EntropyValue target = parse_epsilon(red_epsilon);
        FillRule fill = FillRule::SignZero;
        if (red_fill == "machine-code")
            fill = FillRule::Pattern;
        else if (red_fill != "zero")
            throw UsageError("--fill must be zero or machine-code");
        if (red_machine_opt->count() > 0) {
            if (red_input_opt->count() == 0)
                throw UsageError("--machine needs --input");
            const TuringMachine m = load_machine(red_machine);
            const BitString payload =
                encode(red_input, EncodingScheme::Binary, SignConvention::Normal);
            const BitString input = payload.slice(0, payload.payload_size());
            const RunResult result = run(m, input, red_steps);
            const bool output = result.verdict == Verdict::Accept;
            const Computation c = encode_computation(m, input, output);
            const auto [reduced, plan] = reduce_computation(c, target, fill);
            std::cout << "verdict=" << verdict_name(result.verdict)
                      << " output=" << (output ? 1 : 0)
                      << " padding=" << plan.bits_to_add << " achieved="
                      << format_g9(reduced_uncertainty(reduced).value())
                      << " target=" << format_g9(target.value())
                      << " total_bits=" << reduced.padded.bits.size() << "\n";
        } else {
            if (red_bits_opt->count() == 0)
                throw UsageError("reduce needs --bits or --machine");
            if (fill == FillRule::Pattern)
                throw UsageError("machine-code fill needs --machine");
            const BitString original = BitString::from_text(red_bits);
            std::cout << apply_mapping(original, target).bits.to_text() << "\n";
        }
    });

    // invert
    auto* cmd_invert = app.add_subcommand(
        "invert", "Remove padding added by reduce");
    std::string inv_bits;
    cmd_invert->add_option("--bits", inv_bits, "Padded representation")
        ->required();
    cmd_invert->callback([&] {
        const PaddedString padded =
            PaddedString::from_bits(BitString::from_text(inv_bits));
        std::cout << invert_mapping(padded).to_text() << "\n";
    });

    // simulate
    auto* cmd_simulate = app.add_subcommand("simulate", "Run a machine on an input");
    std::string sim_machine, sim_input;
    std::uint64_t sim_steps = kDefaultStepLimit;
    cmd_simulate->add_option("--machine", sim_machine, "Machine description file")
        ->required();
    cmd_simulate->add_option("--input", sim_input, "Tape contents, e.g. 101")
        ->required();
    cmd_simulate->add_option("--step-limit", sim_steps, "Step limit");
    cmd_simulate->callback([&] {
        const TuringMachine m = load_machine(sim_machine);
        const RunResult result =
            run(m, BitString::from_binary(sim_input), sim_steps);
        std::cout << "verdict=" << verdict_name(result.verdict)
                  << " steps=" << result.steps << " tape=" << result.final_tape
                  << "\n";
    });

    // worst-case
    auto* cmd_worst = app.add_subcommand(
        "worst-case", "Max step count over all inputs of length n");
    std::string wc_machine;
    std::uint64_t wc_n = 0, wc_steps = kDefaultStepLimit;
    bool wc_parallel = false;
    cmd_worst->add_option("--machine", wc_machine, "Machine description file")
        ->required();
    cmd_worst->add_option("--n", wc_n, "Input length")->required();
    cmd_worst->add_option("--step-limit", wc_steps, "Step limit");
    cmd_worst->add_flag("--parallel", wc_parallel, "Split inputs across threads");
    cmd_worst->callback([&] {
        const TuringMachine m = load_machine(wc_machine);
        const WorstCase wc = worst_case_time(m, wc_n, wc_steps, wc_parallel);
        std::cout << "t_max=" << wc.t_max
                  << " witness=" << wc.witness.to_binary() << "\n";
    });

    // experiment
    auto* cmd_exp = app.add_subcommand(
        "experiment", "Padding-growth sweeps with CSV output");
    int exp_theorem = 0;
    std::uint64_t exp_max_n = 64, exp_max_b = 10;
    std::string exp_out = "theorem4.csv", exp_out_dir = ".", exp_machine;
    cmd_exp->add_option("--theorem", exp_theorem, "3 or 4")->required();
    cmd_exp->add_option("--max-n", exp_max_n, "Sweep bound for theorem 3");
    cmd_exp->add_option("--max-b", exp_max_b, "Sweep bound for theorem 4");
    cmd_exp->add_option("--out", exp_out, "CSV path for theorem 4 ('-' = stdout)");
    cmd_exp->add_option("--out-dir", exp_out_dir, "Directory for theorem 3 CSVs");
    cmd_exp->add_option("--machine", exp_machine,
                        "Baseline machine file (default: built-in)");
    cmd_exp->callback([&] {
        if (exp_theorem == 3) {
            const auto [efficient, length] = theorem3_sweep(exp_max_n);
            write_csv_file(efficient, exp_out_dir + "/theorem3_efficient.csv");
            write_csv_file(length, exp_out_dir + "/theorem3_length.csv");
            const auto max_padding = [](const ExperimentReport& r) {
                std::uint64_t most = 0;
                for (const auto& rec : r.records)
                    most = std::max(most, rec.padding);
                return most;
            };
            std::cout << "efficient growth=Polynomial max_padding="
                      << max_padding(efficient) << "\n"
                      << "length growth=Exponential max_padding="
                      << max_padding(length) << "\n";
        } else if (exp_theorem == 4) {
            const TuringMachine m = exp_machine.empty()
                                        ? trailing_one_acceptor()
                                        : load_machine(exp_machine);
            const ExperimentReport report = theorem4_sweep(exp_max_b, m);
            if (exp_out == "-")
                emit_csv(report, std::cout);
            else
                write_csv_file(report, exp_out);
            // The target length doubles per step by construction; report
            // that factor from the recorded sweep.
            std::ostream& summary = exp_out == "-" ? std::cerr : std::cout;
            summary << "growth=Exponential";
            if (report.records.size() >= 2) {
                const auto& r = report.records;
                const double factor =
                    static_cast<double>(r.back().required_length) /
                    static_cast<double>(r[r.size() - 2].required_length);
                summary << " ratio→" << format_g9(factor);
            }
            summary << "\n";
        } else {
            throw std::domain_error("--theorem must be 3 or 4");
        }
    });

    // vonneumann
    auto* cmd_vn = app.add_subcommand("vonneumann", "Nested-set display of a natural number");
    std::uint64_t vn_n = 0;
    bool vn_ascii = false;
    cmd_vn->add_option("--n", vn_n, "Number to display")->required();
    cmd_vn->add_flag("--ascii", vn_ascii, "Render the empty set as {}");
    cmd_vn->callback([&] { std::cout << von_neumann(vn_n, vn_ascii).text << "\n"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
