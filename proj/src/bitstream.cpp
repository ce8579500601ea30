#include "mclimb/bitstream.hpp"

namespace mclimb {

BitString BitString::from_string(const std::string& bits) {
    BitString out;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') throw std::invalid_argument("BitString: expected only '0' and '1'");
        out.push_back(ch == '1');
    }
    return out;
}

BitString BitString::from_bytes(std::vector<std::uint8_t> bytes, std::size_t bit_count) {
    if (bit_count > bytes.size() * 8 || bytes.size() != (bit_count + 7) / 8)
        throw std::invalid_argument("BitString: byte count does not match bit count");
    BitString out;
    out.bytes_ = std::move(bytes);
    out.size_ = bit_count;
    if (bit_count % 8) out.bytes_.back() &= static_cast<std::uint8_t>(0xff << (8 - bit_count % 8));
    return out;
}

void BitString::push_back(bool bit) {
    if (size_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80 >> (size_ % 8));
    ++size_;
}

void BitString::append_unary(std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) push_back(true);
    push_back(false);
}

void BitString::append_fixed(const BigInt& value, std::uint64_t width) {
    if (value < 0 || (value > 0 && mpz_sizeinbase(value.get_mpz_t(), 2) > width))
        throw std::logic_error("BitString::append_fixed: value does not fit in the field width");
    for (std::uint64_t b = width; b-- > 0;) push_back(mpz_tstbit(value.get_mpz_t(), b));
}

bool BitString::starts_with(const BitString& prefix) const {
    if (prefix.size_ > size_) return false;
    for (std::size_t i = 0; i < prefix.size_; ++i)
        if ((*this)[i] != prefix[i]) return false;
    return true;
}

std::string BitString::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

DecodeError::DecodeError(const std::string& what, std::size_t bit_offset)
    : std::runtime_error(what + " at bit " + std::to_string(bit_offset)), offset_(bit_offset) {}

bool BitReader::read_bit() {
    if (exhausted()) throw DecodeError("unexpected end of stream", pos_);
    return bits_[pos_++];
}

std::uint64_t BitReader::read_unary(std::uint64_t limit) {
    const std::size_t start = pos_;
    std::uint64_t count = 0;
    while (read_bit()) {
        if (++count > limit) throw DecodeError("unary field exceeds " + std::to_string(limit), start);
    }
    return count;
}

BigInt BitReader::read_fixed(std::uint64_t width) {
    if (width > bits_.size() - pos_) throw DecodeError("fixed-width field runs past the end of stream", pos_);
    BigInt value = 0;
    for (std::uint64_t b = 0; b < width; ++b) {
        value <<= 1;
        if (bits_[pos_++]) value += 1;
    }
    return value;
}

}  // namespace mclimb
