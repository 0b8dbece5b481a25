#include "bnum/bitstring.hpp"

#include "bnum/errors.hpp"

namespace bnum {

BitString BitString::from_text(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw MalformedRepresentation("missing '|' separator in \"" +
                                      std::string(text) + "\"");
    if (bar + 2 != text.size())
        throw MalformedRepresentation(
            "expected exactly one sign digit after '|'");
    BitString out = from_binary(text.substr(0, bar));
    const char s = text[bar + 1];
    if (s != '0' && s != '1')
        throw MalformedRepresentation("sign digit must be 0 or 1");
    out.push_back(s == '1');
    return out;
}

BitString BitString::from_binary(std::string_view digits) {
    BitString out;
    out.bits_.reserve(digits.size());
    for (char c : digits) {
        if (c != '0' && c != '1')
            throw MalformedRepresentation(std::string("invalid digit '") + c +
                                          "'");
        out.bits_.push_back(c == '1');
    }
    return out;
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

bool BitString::sign() const {
    if (bits_.empty())
        throw MalformedRepresentation("empty bitstring has no sign");
    return bits_.back();
}

std::size_t BitString::payload_size() const {
    if (bits_.empty())
        throw MalformedRepresentation("empty bitstring has no payload");
    return bits_.size() - 1;
}

BitString BitString::slice(std::size_t first, std::size_t count) const {
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(first),
                     bits_.begin() + static_cast<std::ptrdiff_t>(first + count));
    return out;
}

std::string BitString::to_text() const {
    if (bits_.empty())
        throw MalformedRepresentation("empty bitstring has no text form");
    std::string out;
    out.reserve(bits_.size() + 1);
    for (std::size_t i = 0; i + 1 < bits_.size(); ++i)
        out.push_back(bits_[i] ? '1' : '0');
    out.push_back('|');
    out.push_back(bits_.back() ? '1' : '0');
    return out;
}

std::string BitString::to_binary() const {
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_) out.push_back(b ? '1' : '0');
    return out;
}

BitString dual(const BitString& bits) {
    std::vector<bool> flipped;
    flipped.reserve(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) flipped.push_back(!bits[i]);
    return BitString(std::move(flipped));
}

void BitWriter::write(std::uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;)
        out_.push_back((value >> i) & std::uint64_t{1});
}

std::uint64_t BitReader::read(unsigned width) {
    if (remaining() < width)
        throw MalformedRepresentation("bitstring truncated");
    std::uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i)
        value = (value << 1) | std::uint64_t{(*bits_)[pos_++]};
    return value;
}

bool BitReader::read_bit() {
    if (remaining() == 0)
        throw MalformedRepresentation("bitstring truncated");
    return (*bits_)[pos_++];
}

}  // namespace bnum
