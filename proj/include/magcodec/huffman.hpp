#pragma once

#include <cstdint>
#include <vector>

#include "magcodec/bitstream.hpp"

namespace magcodec {

// Canonical Huffman over a small alphabet. Codes are assigned by
// (length, symbol) order; length 0 means the symbol is unused.

// Code lengths from symbol frequencies (zero frequency -> length 0).
// A single used symbol gets length 1.
std::vector<std::uint8_t> huffman_code_lengths(const std::vector<std::uint64_t>& freqs);

struct HuffmanEncoder {
    std::vector<std::uint32_t> codes;
    std::vector<std::uint8_t> lengths;

    explicit HuffmanEncoder(std::vector<std::uint8_t> lens);

    void put(BitWriter& w, std::size_t symbol) const {
        w.put_bits(codes[symbol], lengths[symbol]);
    }
};

class HuffmanDecoder {
  public:
    explicit HuffmanDecoder(const std::vector<std::uint8_t>& lens);

    std::size_t read(BitReader& r) const;

  private:
    // Per code length: the first canonical code value and the offset of its
    // first symbol in symbols_.
    std::vector<std::uint32_t> first_code_;
    std::vector<std::uint32_t> first_index_;
    std::vector<std::uint32_t> symbols_;
    unsigned max_len_ = 0;
};

// Code lengths serialized as gamma(len + 1) per symbol.
void write_code_lengths(BitWriter& w, const std::vector<std::uint8_t>& lens);
std::vector<std::uint8_t> read_code_lengths(BitReader& r, std::size_t count);

} // namespace magcodec
