#include "magcodec/random.hpp"

#include <cstring>

namespace magcodec {

namespace {

inline std::uint32_t rotl(std::uint32_t x, int n) { return (x << n) | (x >> (32 - n)); }

inline void quarter_round(std::uint32_t& a, std::uint32_t& b, std::uint32_t& c,
                          std::uint32_t& d) {
    a += b; d ^= a; d = rotl(d, 16);
    c += d; b ^= c; b = rotl(b, 12);
    a += b; d ^= a; d = rotl(d, 8);
    c += d; b ^= c; b = rotl(b, 7);
}

} // namespace

ChaChaBits::ChaChaBits(std::uint64_t seed, std::uint64_t stream) {
    // "expand 32-byte k" constants, key = seed repeated, counter 0, nonce = stream.
    state_ = {0x61707865u, 0x3320646eu, 0x79622d32u, 0x6b206574u,
              std::uint32_t(seed), std::uint32_t(seed >> 32),
              std::uint32_t(~seed), std::uint32_t(~seed >> 32),
              std::uint32_t(seed) ^ 0x9e3779b9u, std::uint32_t(seed >> 32) ^ 0x7f4a7c15u,
              std::uint32_t(~seed) ^ 0xf39cc060u, std::uint32_t(~seed >> 32) ^ 0x5cedc834u,
              0u, 0u,
              std::uint32_t(stream), std::uint32_t(stream >> 32)};
}

void ChaChaBits::refill() {
    std::array<std::uint32_t, 16> x = state_;
    for (int round = 0; round < 10; ++round) {
        quarter_round(x[0], x[4], x[8], x[12]);
        quarter_round(x[1], x[5], x[9], x[13]);
        quarter_round(x[2], x[6], x[10], x[14]);
        quarter_round(x[3], x[7], x[11], x[15]);
        quarter_round(x[0], x[5], x[10], x[15]);
        quarter_round(x[1], x[6], x[11], x[12]);
        quarter_round(x[2], x[7], x[8], x[13]);
        quarter_round(x[3], x[4], x[9], x[14]);
    }
    for (int i = 0; i < 16; ++i) x[i] += state_[i];
    for (int i = 0; i < 16; ++i) std::memcpy(block_.data() + 4 * i, &x[i], 4);
    block_pos_ = 0;
    if (++state_[12] == 0) ++state_[13];
}

std::uint8_t ChaChaBits::next_byte() {
    if (block_pos_ >= 64) refill();
    return block_[block_pos_++];
}

std::uint64_t ChaChaBits::next_u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | next_byte();
    return v;
}

bool ChaChaBits::next_bit() {
    if (bit_fill_ == 0) {
        bit_byte_ = next_byte();
        bit_fill_ = 8;
    }
    const bool v = (bit_byte_ >> (bit_fill_ - 1)) & 1u;
    --bit_fill_;
    return v;
}

double ChaChaBits::next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

BitBuffer ChaChaBits::next_bits(std::uint64_t count) {
    BitBuffer b;
    b.reserve_bits(count);
    for (std::uint64_t i = 0; i < count; ++i) b.push_back(next_bit());
    return b;
}

} // namespace magcodec
