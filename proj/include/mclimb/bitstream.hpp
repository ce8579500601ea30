#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mclimb/rational.hpp"

namespace mclimb {

// Bits packed most-significant-bit first.
class BitString {
public:
    BitString() = default;
    static BitString from_string(const std::string& bits);  // "0110..."
    static BitString from_bytes(std::vector<std::uint8_t> bytes, std::size_t bit_count);

    std::size_t size() const noexcept { return size_; }
    bool operator[](std::size_t i) const { return bytes_[i >> 3] >> (7 - (i & 7)) & 1u; }
    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    void push_back(bool bit);
    void append_unary(std::uint64_t count);                    // count ones, then a zero
    void append_fixed(const BigInt& value, std::uint64_t width);  // big-endian, value < 2^width

    bool starts_with(const BitString& prefix) const;
    std::string to_string() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t size_ = 0;
};

// Failure while parsing a bit stream; carries the offending bit offset.
class DecodeError : public std::runtime_error {
public:
    DecodeError(const std::string& what, std::size_t bit_offset);
    std::size_t bit_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class BitReader {
public:
    explicit BitReader(const BitString& bits) : bits_(bits) {}
    explicit BitReader(BitString&&) = delete;  // holds a reference

    std::size_t position() const noexcept { return pos_; }
    bool exhausted() const noexcept { return pos_ >= bits_.size(); }

    bool read_bit();
    std::uint64_t read_unary(std::uint64_t limit);  // fails beyond `limit` ones
    BigInt read_fixed(std::uint64_t width);

private:
    const BitString& bits_;
    std::size_t pos_ = 0;
};

}  // namespace mclimb
