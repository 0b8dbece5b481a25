#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bnum/bitstring.hpp"

namespace bnum {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };
enum class Move : std::uint8_t { Left = 0, Right = 1, Stay = 2 };

/// A deterministic Turing machine over {0, 1, blank} with dedicated accept
/// and reject states. Transitions are keyed by (state index, read symbol);
/// the ordered map fixes the canonical (state, symbol-code) order used by
/// the bit serialization.
struct TuringMachine {
    struct Action {
        std::uint16_t next;
        Symbol write;
        Move move;

        friend bool operator==(const Action&, const Action&) = default;
    };

    std::vector<std::string> states;
    std::uint16_t start = 0;
    std::uint16_t accept = 0;
    std::uint16_t reject = 0;
    std::map<std::pair<std::uint16_t, Symbol>, Action> transitions;

    /// Structural equality that ignores state names.
    bool same_table(const TuringMachine& other) const;
};

/// Checks the machine invariants: accept != reject, all indices declared,
/// no transitions leaving accept or reject. Throws MachineParseError.
void validate(const TuringMachine& m);

/// Parses the line-oriented machine description format:
///
///   states: q0 q1 qa qr
///   start: q0
///   accept: qa
///   reject: qr
///   q0 0 -> q0 0 R
///   q0 _ -> q1 _ L
///
/// '#' starts a comment; symbols are 0, 1 and _ (blank); moves are L, R, S.
/// Duplicate (state, symbol) rules and undeclared states are rejected.
TuringMachine parse_machine(std::string_view text);

/// Renders a machine back into the description format, transitions in
/// canonical order.
std::string render_machine(const TuringMachine& m);

inline constexpr std::size_t kMaxSerializableStates = 256;

/// Canonical bit layout, MSB first:
///   [num_states:8][start:8][accept:8][reject:8][num_transitions:16]
///   then per transition [state:8][read:2][next:8][write:2][move:2],
/// sorted by (state index, symbol code). Symbol codes 00/01/10 for
/// 0/1/blank; move codes 00/01/10 for L/R/S. The num_states field stores
/// the count mod 256 (0 encodes 256). Throws CapacityError past 256 states.
BitString serialize_machine(const TuringMachine& m);

/// Inverse of serialize_machine; states are named q0..qN-1. Throws
/// MalformedRepresentation on truncated or trailing bits.
TuringMachine deserialize_machine(const BitString& bits);

enum class Verdict : std::uint8_t { Accept, Reject, StepLimit };

struct RunResult {
    Verdict verdict = Verdict::StepLimit;
    std::uint64_t steps = 0;
    std::string final_tape;  // cells up to the last non-blank, as 0/1/_
};

inline constexpr std::uint64_t kDefaultStepLimit = 1'000'000;

/// Simulates m on the given input, one counted step per applied transition.
/// The tape is right-infinite; a left move at cell 0 stays put. A missing
/// transition halts with Reject; exhausting step_limit yields StepLimit
/// (treated as not accepting).
RunResult run(const TuringMachine& m, const BitString& input,
              std::uint64_t step_limit = kDefaultStepLimit);

struct WorstCase {
    std::uint64_t n = 0;
    std::uint64_t t_max = 0;
    BitString witness;  // lexicographically first input attaining t_max
};

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 16;

/// Brute-forces max step count over all 2^n inputs of length n. Throws
/// CapacityError when n exceeds exhaustive_limit. With parallel set the
/// inputs are split across threads; the result is identical to the
/// sequential evaluation.
WorstCase worst_case_time(const TuringMachine& m, std::uint64_t n,
                          std::uint64_t step_limit = kDefaultStepLimit,
                          bool parallel = false,
                          std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit);

/// The four-state example machine accepting exactly the inputs whose last
/// bit is 1 (scan right, step back, test).
TuringMachine trailing_one_acceptor();

}  // namespace bnum
