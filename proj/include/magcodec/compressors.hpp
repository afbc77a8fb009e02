#pragma once

#include "magcodec/complexity.hpp"

namespace magcodec {

// LZ77 with greedy hash-chain matching (1 MiB window, unbounded match
// length) and per-block canonical Huffman coding of literal/length and
// distance symbols. Small blocks fall back to stored form when that is
// shorter.
class Lz77Compressor final : public Compressor {
  public:
    std::string_view name() const override { return "lz"; }
    Bytes compress(ByteView data) const override;
    Bytes decompress(ByteView data) const override;
};

// Byte run-length tokens (value, run length) with an order-0 Huffman coder
// over the run values; run lengths are gamma coded. Baseline compressor.
class RleCompressor final : public Compressor {
  public:
    std::string_view name() const override { return "rle"; }
    Bytes compress(ByteView data) const override;
    Bytes decompress(ByteView data) const override;
};

} // namespace magcodec
