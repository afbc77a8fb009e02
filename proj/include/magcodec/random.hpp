#pragma once

#include <array>
#include <cstdint>

#include "magcodec/bitstream.hpp"

namespace magcodec {

// Deterministic ChaCha20 keystream generator. The 64-bit seed fills the key;
// the stream id selects an independent substream (used to make experiment
// rows independent of sweep composition). Cryptographic-strength output is
// the declared stand-in for 1-random bits.
class ChaChaBits {
  public:
    explicit ChaChaBits(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint8_t next_byte();
    std::uint64_t next_u64();
    bool next_bit();

    // Uniform in [0, 1) with 53 bits of precision.
    double next_unit();

    BitBuffer next_bits(std::uint64_t count);

  private:
    void refill();

    std::array<std::uint32_t, 16> state_;
    std::array<std::uint8_t, 64> block_;
    std::size_t block_pos_ = 64;
    std::uint8_t bit_byte_ = 0;
    unsigned bit_fill_ = 0;
};

} // namespace magcodec
