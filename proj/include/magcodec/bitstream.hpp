#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <vector>

#include "magcodec/errors.hpp"

namespace magcodec {

// Packed bit sequence, MSB-first within each byte. Bit i lives at
// bytes()[i >> 3], mask 0x80 >> (i & 7). Trailing pad bits are zero.
class BitBuffer {
  public:
    BitBuffer() = default;
    explicit BitBuffer(std::uint64_t nbits) : bytes_((nbits + 7) / 8, 0), nbits_(nbits) {}

    static BitBuffer from_bytes(std::vector<std::uint8_t> bytes, std::uint64_t nbits) {
        if (bytes.size() != (nbits + 7) / 8)
            throw ValidationError("byte count does not match bit length");
        BitBuffer b;
        b.bytes_ = std::move(bytes);
        b.nbits_ = nbits;
        if (nbits & 7) b.bytes_.back() &= std::uint8_t(0xFF00u >> (nbits & 7)); // clear pad
        return b;
    }

    static BitBuffer from_string(std::string_view s01) {
        BitBuffer b;
        b.reserve_bits(s01.size());
        for (char c : s01) {
            if (c != '0' && c != '1') throw ValidationError("bit string must contain only 0/1");
            b.push_back(c == '1');
        }
        return b;
    }

    std::uint64_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool test(std::uint64_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u; }

    void set(std::uint64_t i, bool v = true) {
        const std::uint8_t mask = std::uint8_t(0x80u >> (i & 7));
        if (v)
            bytes_[i >> 3] |= mask;
        else
            bytes_[i >> 3] &= std::uint8_t(~mask);
    }

    void push_back(bool v) {
        if ((nbits_ & 7) == 0) bytes_.push_back(0);
        if (v) bytes_[nbits_ >> 3] |= std::uint8_t(0x80u >> (nbits_ & 7));
        ++nbits_;
    }

    void reserve_bits(std::uint64_t n) { bytes_.reserve((n + 7) / 8); }

    std::uint64_t count_ones() const {
        std::uint64_t c = 0;
        for (std::uint8_t b : bytes_) c += std::uint64_t(__builtin_popcount(b));
        return c;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(nbits_);
        for (std::uint64_t i = 0; i < nbits_; ++i) s.push_back(test(i) ? '1' : '0');
        return s;
    }

    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t>&& take_bytes() && { return std::move(bytes_); }

    friend bool operator==(const BitBuffer& a, const BitBuffer& b) {
        return a.nbits_ == b.nbits_ && a.bytes_ == b.bytes_;
    }

  private:
    friend class BitWriter;
    std::vector<std::uint8_t> bytes_;
    std::uint64_t nbits_ = 0;
};

// Append-only writer with a 64-bit accumulator; produces a BitBuffer.
class BitWriter {
  public:
    void put_bit(bool v) { put_bits(v ? 1u : 0u, 1); }

    // Appends the low `n` bits of `value`, most significant first. n <= 57.
    void put_bits(std::uint64_t value, unsigned n) {
        acc_ |= value << (64 - fill_ - n);
        fill_ += n;
        while (fill_ >= 8) {
            out_.push_back(std::uint8_t(acc_ >> 56));
            acc_ <<= 8;
            fill_ -= 8;
        }
        nbits_ += n;
    }

    // Elias gamma: bit_width(n)-1 zeros, then n in binary. Requires n >= 1.
    void put_gamma(std::uint64_t n) {
        if (n == 0) throw ValidationError("gamma code requires n >= 1");
        const unsigned width = 64 - unsigned(__builtin_clzll(n));
        if (width <= 29) { // leading zeros and value fit one accumulator push
            put_bits(n, 2 * width - 1);
            return;
        }
        unsigned zeros = width - 1;
        while (zeros > 32) {
            put_bits(0, 32);
            zeros -= 32;
        }
        put_bits(0, zeros);
        if (width > 32) {
            put_bits(n >> 32, width - 32);
            put_bits(n & 0xffffffffu, 32);
        } else {
            put_bits(n, width);
        }
    }

    void append(const BitBuffer& b) {
        for (std::uint64_t i = 0; i < b.size(); ++i) put_bit(b.test(i));
    }

    std::uint64_t bit_count() const { return nbits_; }

    // Pads with zeros to a byte boundary and returns the buffer.
    BitBuffer finish() {
        if (fill_ > 0) {
            out_.push_back(std::uint8_t(acc_ >> 56));
            acc_ = 0;
            fill_ = 0;
        }
        BitBuffer b;
        b.bytes_ = std::move(out_);
        b.nbits_ = nbits_;
        out_.clear();
        nbits_ = 0;
        return b;
    }

  private:
    std::vector<std::uint8_t> out_;
    std::uint64_t acc_ = 0;
    unsigned fill_ = 0;
    std::uint64_t nbits_ = 0;
};

class BitReader {
  public:
    BitReader(const std::uint8_t* data, std::uint64_t nbits) : data_(data), nbits_(nbits) {}
    explicit BitReader(const BitBuffer& b) : BitReader(b.bytes().data(), b.size()) {}

    bool read_bit() {
        if (pos_ >= nbits_) throw DecodeError("bit stream truncated");
        const bool v = (data_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
        ++pos_;
        return v;
    }

    std::uint64_t read_bits(unsigned n) {
        std::uint64_t v = 0;
        for (unsigned i = 0; i < n; ++i) v = (v << 1) | std::uint64_t(read_bit());
        return v;
    }

    std::uint64_t read_gamma() {
        unsigned zeros = 0;
        while (!read_bit()) {
            if (++zeros > 63) throw DecodeError("gamma code too long");
        }
        std::uint64_t v = 1;
        for (unsigned i = 0; i < zeros; ++i) v = (v << 1) | std::uint64_t(read_bit());
        return v;
    }

    std::uint64_t position() const { return pos_; }
    std::uint64_t remaining() const { return nbits_ - pos_; }

  private:
    const std::uint8_t* data_;
    std::uint64_t nbits_;
    std::uint64_t pos_ = 0;
};

// Self-delimiting code for a single positive integer.
inline BitBuffer encode_int_prefix_free(std::uint64_t n) {
    BitWriter w;
    w.put_gamma(n);
    return w.finish();
}

} // namespace magcodec
