#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bnum {

/// An ordered sequence of bits, most significant first. When the string
/// represents a b-number the final bit is the sign and the text form
/// separates it with '|' (e.g. "101|1"; an empty payload renders "|1").
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<bool> bits) : bits_(std::move(bits)) {}

    /// Parses the "payload|sign" text form. The '|' is required and must
    /// precede exactly one final digit. Throws MalformedRepresentation.
    static BitString from_text(std::string_view text);

    /// Parses a raw digit string ("0101"). Empty input yields an empty string.
    static BitString from_binary(std::string_view digits);

    void push_back(bool bit) { bits_.push_back(bit); }
    void append(const BitString& other);

    bool operator[](std::size_t i) const { return bits_[i]; }
    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    /// The final bit. Throws MalformedRepresentation on an empty string.
    bool sign() const;

    /// Number of bits before the sign.
    std::size_t payload_size() const;

    /// Bits [first, first + count) as a new string.
    BitString slice(std::size_t first, std::size_t count) const;

    /// "payload|sign" rendering. Throws MalformedRepresentation when empty.
    std::string to_text() const;

    /// Raw digit rendering without the separator.
    std::string to_binary() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<bool> bits_;
};

/// Bitwise complement of every bit, sign included. An involution; maps a
/// representation onto its opposite-convention counterpart.
BitString dual(const BitString& bits);

/// Appends fixed-width big-endian fields to a BitString.
class BitWriter {
public:
    void write(std::uint64_t value, unsigned width);
    void write_bit(bool bit) { out_.push_back(bit); }
    void write_all(const BitString& bits) { out_.append(bits); }
    BitString take() { return std::move(out_); }
    const BitString& bits() const { return out_; }

private:
    BitString out_;
};

/// Reads fixed-width big-endian fields from a BitString.
class BitReader {
public:
    explicit BitReader(const BitString& bits) : bits_(&bits) {}

    std::uint64_t read(unsigned width);
    bool read_bit();
    std::size_t remaining() const { return bits_->size() - pos_; }
    std::size_t position() const { return pos_; }

private:
    const BitString* bits_;
    std::size_t pos_ = 0;
};

}  // namespace bnum
