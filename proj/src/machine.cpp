#include "bnum/machine.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "bnum/errors.hpp"

namespace bnum {

namespace {

char symbol_char(Symbol s) {
    switch (s) {
        case Symbol::Zero: return '0';
        case Symbol::One: return '1';
        case Symbol::Blank: return '_';
    }
    return '?';
}

char move_char(Move m) {
    switch (m) {
        case Move::Left: return 'L';
        case Move::Right: return 'R';
        case Move::Stay: return 'S';
    }
    return '?';
}

Symbol parse_symbol(const std::string& tok, int line) {
    if (tok == "0") return Symbol::Zero;
    if (tok == "1") return Symbol::One;
    if (tok == "_") return Symbol::Blank;
    throw MachineParseError(line, "unknown tape symbol '" + tok + "'");
}

Move parse_move(const std::string& tok, int line) {
    if (tok == "L") return Move::Left;
    if (tok == "R") return Move::Right;
    if (tok == "S") return Move::Stay;
    throw MachineParseError(line, "unknown move '" + tok + "'");
}

}  // namespace

bool TuringMachine::same_table(const TuringMachine& other) const {
    return states.size() == other.states.size() && start == other.start &&
           accept == other.accept && reject == other.reject &&
           transitions == other.transitions;
}

void validate(const TuringMachine& m) {
    const auto n = m.states.size();
    if (n == 0) throw MachineParseError(0, "machine declares no states");
    if (m.start >= n || m.accept >= n || m.reject >= n)
        throw MachineParseError(0, "start/accept/reject state out of range");
    if (m.accept == m.reject)
        throw MachineParseError(0, "accept and reject must be distinct");
    for (const auto& [key, action] : m.transitions) {
        if (key.first >= n || action.next >= n)
            throw MachineParseError(0, "transition references an undeclared state");
        if (key.first == m.accept || key.first == m.reject)
            throw MachineParseError(0, "no transitions may leave accept or reject");
    }
}

TuringMachine parse_machine(std::string_view text) {
    TuringMachine m;
    std::unordered_map<std::string, std::uint16_t> index;
    bool have_start = false, have_accept = false, have_reject = false;

    auto state_index = [&](const std::string& name, int line) {
        auto it = index.find(name);
        if (it == index.end())
            throw MachineParseError(line, "undeclared state '" + name + "'");
        return it->second;
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream line(raw);
        std::string first;
        if (!(line >> first)) continue;  // blank line

        if (first == "states:") {
            std::string name;
            while (line >> name) {
                if (index.count(name))
                    throw MachineParseError(line_no,
                                            "duplicate state '" + name + "'");
                if (m.states.size() >= kMaxSerializableStates)
                    throw CapacityError("more than 256 states");
                index[name] = static_cast<std::uint16_t>(m.states.size());
                m.states.push_back(name);
            }
            continue;
        }
        if (first == "start:" || first == "accept:" || first == "reject:") {
            std::string name;
            if (!(line >> name))
                throw MachineParseError(line_no, "missing state name");
            const auto idx = state_index(name, line_no);
            if (first == "start:") m.start = idx, have_start = true;
            if (first == "accept:") m.accept = idx, have_accept = true;
            if (first == "reject:") m.reject = idx, have_reject = true;
            continue;
        }

        // transition: <state> <symbol> -> <state> <symbol> <move>
        std::string read_tok, arrow, next_tok, write_tok, move_tok;
        if (!(line >> read_tok >> arrow >> next_tok >> write_tok >> move_tok) ||
            arrow != "->")
            throw MachineParseError(line_no, "malformed transition rule");
        std::string extra;
        if (line >> extra)
            throw MachineParseError(line_no, "trailing tokens after rule");
        const auto from = state_index(first, line_no);
        const auto read = parse_symbol(read_tok, line_no);
        const TuringMachine::Action action{state_index(next_tok, line_no),
                                           parse_symbol(write_tok, line_no),
                                           parse_move(move_tok, line_no)};
        if (!m.transitions.emplace(std::make_pair(from, read), action).second)
            throw MachineParseError(line_no, "duplicate rule for (" + first +
                                                 ", " + read_tok +
                                                 "): machine must be deterministic");
    }

    if (!have_start) throw MachineParseError(line_no, "missing start: line");
    if (!have_accept) throw MachineParseError(line_no, "missing accept: line");
    if (!have_reject) throw MachineParseError(line_no, "missing reject: line");
    validate(m);
    return m;
}

std::string render_machine(const TuringMachine& m) {
    std::string out = "states:";
    for (const auto& s : m.states) out += " " + s;
    out += "\nstart: " + m.states[m.start];
    out += "\naccept: " + m.states[m.accept];
    out += "\nreject: " + m.states[m.reject];
    out += "\n";
    for (const auto& [key, action] : m.transitions) {
        out += m.states[key.first];
        out += ' ';
        out += symbol_char(key.second);
        out += " -> ";
        out += m.states[action.next];
        out += ' ';
        out += symbol_char(action.write);
        out += ' ';
        out += move_char(action.move);
        out += '\n';
    }
    return out;
}

BitString serialize_machine(const TuringMachine& m) {
    validate(m);
    if (m.states.size() > kMaxSerializableStates)
        throw CapacityError("machine has more than 256 states");
    BitWriter w;
    w.write(m.states.size() % 256, 8);  // 0 encodes 256
    w.write(m.start, 8);
    w.write(m.accept, 8);
    w.write(m.reject, 8);
    w.write(m.transitions.size(), 16);
    for (const auto& [key, action] : m.transitions) {
        w.write(key.first, 8);
        w.write(static_cast<std::uint64_t>(key.second), 2);
        w.write(action.next, 8);
        w.write(static_cast<std::uint64_t>(action.write), 2);
        w.write(static_cast<std::uint64_t>(action.move), 2);
    }
    return w.take();
}

TuringMachine deserialize_machine(const BitString& bits) {
    BitReader r(bits);
    TuringMachine m = {};
    const auto raw_states = r.read(8);
    const std::size_t num_states = raw_states == 0 ? 256 : raw_states;
    m.start = static_cast<std::uint16_t>(r.read(8));
    m.accept = static_cast<std::uint16_t>(r.read(8));
    m.reject = static_cast<std::uint16_t>(r.read(8));
    const auto num_transitions = r.read(16);
    for (std::size_t i = 0; i < num_states; ++i)
        m.states.push_back("q" + std::to_string(i));
    for (std::uint64_t i = 0; i < num_transitions; ++i) {
        const auto from = static_cast<std::uint16_t>(r.read(8));
        const auto read = r.read(2);
        const auto next = static_cast<std::uint16_t>(r.read(8));
        const auto write = r.read(2);
        const auto move = r.read(2);
        if (read > 2 || write > 2 || move > 2)
            throw MalformedRepresentation("invalid symbol or move code");
        m.transitions[{from, static_cast<Symbol>(read)}] =
            TuringMachine::Action{next, static_cast<Symbol>(write),
                                  static_cast<Move>(move)};
    }
    if (r.remaining() != 0)
        throw MalformedRepresentation("trailing bits after machine code");
    validate(m);
    return m;
}

RunResult run(const TuringMachine& m, const BitString& input,
              std::uint64_t step_limit) {
    std::vector<Symbol> tape;
    tape.reserve(input.size() + 1);
    for (std::size_t i = 0; i < input.size(); ++i)
        tape.push_back(input[i] ? Symbol::One : Symbol::Zero);

    std::uint16_t state = m.start;
    std::size_t pos = 0;
    std::uint64_t steps = 0;
    Verdict verdict;
    for (;;) {
        if (state == m.accept) {
            verdict = Verdict::Accept;
            break;
        }
        if (state == m.reject) {
            verdict = Verdict::Reject;
            break;
        }
        if (steps == step_limit) {
            verdict = Verdict::StepLimit;
            break;
        }
        if (pos == tape.size()) tape.push_back(Symbol::Blank);
        const auto it = m.transitions.find({state, tape[pos]});
        if (it == m.transitions.end()) {
            // Total semantics: an unspecified configuration rejects.
            verdict = Verdict::Reject;
            break;
        }
        tape[pos] = it->second.write;
        switch (it->second.move) {
            case Move::Left:
                if (pos > 0) --pos;  // left edge: stay
                break;
            case Move::Right: ++pos; break;
            case Move::Stay: break;
        }
        state = it->second.next;
        ++steps;
    }

    std::size_t end = tape.size();
    while (end > 0 && tape[end - 1] == Symbol::Blank) --end;
    std::string snapshot;
    snapshot.reserve(end);
    for (std::size_t i = 0; i < end; ++i) snapshot.push_back(symbol_char(tape[i]));
    return RunResult{verdict, steps, std::move(snapshot)};
}

namespace {

BitString input_for_index(std::uint64_t index, std::uint64_t n) {
    BitString bits;
    for (std::uint64_t i = n; i-- > 0;) bits.push_back((index >> i) & 1u);
    return bits;
}

struct Best {
    std::uint64_t steps = 0;
    std::uint64_t index = 0;
    bool any = false;
};

Best scan_range(const TuringMachine& m, std::uint64_t n, std::uint64_t first,
                std::uint64_t last, std::uint64_t step_limit) {
    Best best;
    for (std::uint64_t i = first; i < last; ++i) {
        const auto result = run(m, input_for_index(i, n), step_limit);
        if (!best.any || result.steps > best.steps) {
            best = Best{result.steps, i, true};
        }
    }
    return best;
}

}  // namespace

WorstCase worst_case_time(const TuringMachine& m, std::uint64_t n,
                          std::uint64_t step_limit, bool parallel,
                          std::uint64_t exhaustive_limit) {
    if (n > exhaustive_limit)
        throw CapacityError("worst-case search over 2^" + std::to_string(n) +
                            " inputs exceeds the exhaustive limit of 2^" +
                            std::to_string(exhaustive_limit));
    const std::uint64_t total = std::uint64_t{1} << n;

    Best best;
    if (!parallel || total < 64) {
        best = scan_range(m, n, 0, total, step_limit);
    } else {
        const unsigned workers =
            std::max(2u, std::min(8u, std::thread::hardware_concurrency()));
        const std::uint64_t chunk = (total + workers - 1) / workers;
        std::vector<std::future<Best>> parts;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = std::min<std::uint64_t>(w * chunk, total);
            const std::uint64_t last =
                std::min<std::uint64_t>(first + chunk, total);
            if (first == last) continue;
            parts.push_back(std::async(std::launch::async, scan_range,
                                       std::cref(m), n, first, last,
                                       step_limit));
        }
        for (auto& part : parts) {
            const Best b = part.get();
            if (!b.any) continue;
            // Ties resolve to the smallest index, matching sequential order.
            if (!best.any || b.steps > best.steps ||
                (b.steps == best.steps && b.index < best.index))
                best = b;
        }
    }
    return WorstCase{n, best.steps, input_for_index(best.index, n)};
}

TuringMachine trailing_one_acceptor() {
    return parse_machine(
        "states: q0 q1 qa qr\n"
        "start: q0\n"
        "accept: qa\n"
        "reject: qr\n"
        "q0 0 -> q0 0 R\n"
        "q0 1 -> q0 1 R\n"
        "q0 _ -> q1 _ L\n"
        "q1 1 -> qa 1 S\n"
        "q1 0 -> qr 0 S\n"
        "q1 _ -> qr _ S\n");
}

}  // namespace bnum
