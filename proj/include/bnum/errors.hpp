#pragma once

#include <stdexcept>
#include <string>

namespace bnum {

// Input is not a well-formed b-number bitstring.
struct MalformedRepresentation : std::runtime_error {
    explicit MalformedRepresentation(const std::string& what)
        : std::runtime_error(what) {}
};

// Padded-string framing is inconsistent (bad header, truncated region).
struct MalformedPadding : std::runtime_error {
    explicit MalformedPadding(const std::string& what)
        : std::runtime_error(what) {}
};

// The requested uncertainty target cannot be met by finite padding.
struct UnreachableTarget : std::runtime_error {
    explicit UnreachableTarget(const std::string& what)
        : std::runtime_error(what) {}
};

// A declared size limit was exceeded.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what)
        : std::runtime_error(what) {}
};

// Machine description text could not be parsed or validated.
struct MachineParseError : std::runtime_error {
    MachineParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_number(line) {}
    int line_number;
};

// Too few records to classify a growth sequence.
struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace bnum
