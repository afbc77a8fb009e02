#include "magcodec/compressors.hpp"

#include "magcodec/bitstream.hpp"
#include "magcodec/huffman.hpp"

namespace magcodec {

namespace {

constexpr std::uint64_t kBlockSrcBytes = std::uint64_t(1) << 20;

inline unsigned bit_width_u64(std::uint64_t v) { return 64 - unsigned(__builtin_clzll(v)); }

struct Run {
    std::uint8_t value;
    std::uint64_t length;
};

void emit_block(BitWriter& w, const std::vector<Run>& runs, const std::uint8_t* src,
                std::uint64_t src_begin, std::uint64_t src_len) {
    std::vector<std::uint64_t> freq(256, 0);
    std::uint64_t run_bits = 0;
    for (const Run& r : runs) {
        ++freq[r.value];
        run_bits += 2 * std::uint64_t(bit_width_u64(r.length)) - 1; // gamma
    }
    const auto lens = huffman_code_lengths(freq);
    const HuffmanEncoder coder(lens);

    std::uint64_t bits = run_bits;
    for (std::size_t s = 0; s < 256; ++s) {
        bits += 2 * std::uint64_t(bit_width_u64(lens[s] + 1)) - 1;
        bits += lens[s] * freq[s];
    }
    if (8 * src_len < bits) {
        w.put_bit(false);
        w.put_gamma(src_len);
        for (std::uint64_t i = 0; i < src_len; ++i) w.put_bits(src[src_begin + i], 8);
        return;
    }
    w.put_bit(true);
    w.put_gamma(runs.size());
    write_code_lengths(w, lens);
    for (const Run& r : runs) {
        coder.put(w, r.value);
        w.put_gamma(r.length);
    }
}

} // namespace

Bytes RleCompressor::compress(ByteView data) const {
    const std::uint64_t n = data.size();
    BitWriter w;
    w.put_gamma(n + 1);

    std::vector<Run> runs;
    std::uint64_t pos = 0;
    std::uint64_t block_begin = 0;
    while (pos < n) {
        const std::uint8_t v = data[pos];
        std::uint64_t len = 1;
        while (pos + len < n && data[pos + len] == v) ++len;
        runs.push_back({v, len});
        pos += len;
        if (pos - block_begin >= kBlockSrcBytes) {
            emit_block(w, runs, data.data(), block_begin, pos - block_begin);
            runs.clear();
            block_begin = pos;
        }
    }
    if (!runs.empty()) emit_block(w, runs, data.data(), block_begin, pos - block_begin);
    return std::move(w.finish()).take_bytes();
}

Bytes RleCompressor::decompress(ByteView data) const {
    BitReader r(data.data(), 8 * std::uint64_t(data.size()));
    const std::uint64_t n = r.read_gamma() - 1;
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        const bool encoded = r.read_bit();
        if (!encoded) {
            const std::uint64_t len = r.read_gamma();
            if (out.size() + len > n) throw DecodeError("rle: stored block overruns output");
            for (std::uint64_t i = 0; i < len; ++i) out.push_back(std::uint8_t(r.read_bits(8)));
            continue;
        }
        const std::uint64_t n_runs = r.read_gamma();
        const HuffmanDecoder coder(read_code_lengths(r, 256));
        for (std::uint64_t i = 0; i < n_runs; ++i) {
            const std::uint8_t v = std::uint8_t(coder.read(r));
            const std::uint64_t len = r.read_gamma();
            if (out.size() + len > n) throw DecodeError("rle: run overruns output");
            out.insert(out.end(), len, v);
        }
    }
    return out;
}

} // namespace magcodec
