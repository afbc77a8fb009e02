#include "magcodec/compressors.hpp"

#include <cstring>

#include "magcodec/bitstream.hpp"
#include "magcodec/huffman.hpp"

namespace magcodec {

namespace {

constexpr unsigned kWindowLog = 20; // 1 MiB
constexpr std::uint32_t kWindow = 1u << kWindowLog;
constexpr std::uint32_t kWindowMask = kWindow - 1;
constexpr std::uint32_t kHashLog = 17;
constexpr std::uint32_t kHashSize = 1u << kHashLog;
constexpr std::uint32_t kNil = 0xFFFFFFFFu;
constexpr unsigned kMinMatch = 4;
constexpr unsigned kMaxChainDepth = 32;
constexpr std::size_t kMaxTokensPerBlock = std::size_t(1) << 17;
constexpr std::size_t kNumLenBuckets = 41; // lengths are unbounded
constexpr std::size_t kLitLenSyms = 256 + kNumLenBuckets;
constexpr std::size_t kDistSyms = kWindowLog + 1;

inline std::uint32_t load32(const std::uint8_t* p) {
    std::uint32_t v;
    std::memcpy(&v, p, 4);
    return v;
}

inline std::uint32_t hash4(std::uint32_t v) {
    return (v * 2654435761u) >> (32 - kHashLog);
}

inline unsigned bucket_of(std::uint64_t value) { // value >= 1
    return 63 - unsigned(__builtin_clzll(value));
}

struct Token {
    std::uint64_t length; // 0 -> literal
    std::uint32_t dist;
    std::uint8_t literal;
};

std::uint64_t match_length(const std::uint8_t* data, std::uint64_t a, std::uint64_t b,
                           std::uint64_t end) {
    std::uint64_t len = 0;
    while (b + 8 <= end) {
        std::uint64_t x, y;
        std::memcpy(&x, data + a, 8);
        std::memcpy(&y, data + b, 8);
        if (x != y) {
            const std::uint64_t diff = x ^ y;
            return len + unsigned(__builtin_ctzll(diff)) / 8;
        }
        a += 8;
        b += 8;
        len += 8;
    }
    while (b < end && data[a] == data[b]) {
        ++a;
        ++b;
        ++len;
    }
    return len;
}

void emit_block(BitWriter& w, const std::vector<Token>& tokens, const std::uint8_t* src,
                std::uint64_t src_begin, std::uint64_t src_len) {
    std::vector<std::uint64_t> litlen_freq(kLitLenSyms, 0), dist_freq(kDistSyms, 0);
    for (const Token& t : tokens) {
        if (t.length == 0) {
            ++litlen_freq[t.literal];
        } else {
            ++litlen_freq[256 + bucket_of(t.length - kMinMatch + 1)];
            ++dist_freq[bucket_of(t.dist)];
        }
    }
    const auto litlen_lens = huffman_code_lengths(litlen_freq);
    const auto dist_lens = huffman_code_lengths(dist_freq);
    const HuffmanEncoder litlen(litlen_lens), dist(dist_lens);

    // Predicted size of the compressed form, to decide against stored form.
    std::uint64_t bits = 0;
    for (std::size_t s = 0; s < kLitLenSyms; ++s) {
        bits += 2 * std::uint64_t(bucket_of(litlen_lens[s] + 1)) + 1; // gamma(len+1)
        bits += litlen_lens[s] * litlen_freq[s];
        if (s >= 256) bits += (s - 256) * litlen_freq[s]; // length extra bits
    }
    for (std::size_t s = 0; s < kDistSyms; ++s) {
        bits += 2 * std::uint64_t(bucket_of(dist_lens[s] + 1)) + 1;
        bits += (dist_lens[s] + s) * dist_freq[s]; // code plus extra bits
    }
    const std::uint64_t stored_bits = 8 * src_len;
    if (stored_bits < bits) {
        w.put_bit(false);
        w.put_gamma(src_len);
        for (std::uint64_t i = 0; i < src_len; ++i) w.put_bits(src[src_begin + i], 8);
        return;
    }

    w.put_bit(true);
    w.put_gamma(tokens.size());
    write_code_lengths(w, litlen_lens);
    write_code_lengths(w, dist_lens);
    for (const Token& t : tokens) {
        if (t.length == 0) {
            litlen.put(w, t.literal);
        } else {
            const std::uint64_t m = t.length - kMinMatch + 1;
            const unsigned lb = bucket_of(m);
            litlen.put(w, 256 + lb);
            if (lb > 0) w.put_bits(m - (std::uint64_t(1) << lb), lb);
            const unsigned db = bucket_of(t.dist);
            dist.put(w, db);
            if (db > 0) w.put_bits(t.dist - (std::uint64_t(1) << db), db);
        }
    }
}

} // namespace

Bytes Lz77Compressor::compress(ByteView data) const {
    const std::uint64_t n = data.size();
    if (n >= (std::uint64_t(1) << 32))
        throw Error("lz: inputs above 4 GiB are not supported");
    BitWriter w;
    w.put_gamma(n + 1);

    std::vector<std::uint32_t> head(kHashSize, kNil);
    std::vector<std::uint32_t> prev(kWindow, kNil);
    auto insert = [&](std::uint64_t pos) {
        const std::uint32_t h = hash4(load32(data.data() + pos));
        prev[pos & kWindowMask] = head[h];
        head[h] = std::uint32_t(pos);
    };

    std::vector<Token> tokens;
    tokens.reserve(kMaxTokensPerBlock);
    std::uint64_t pos = 0;
    std::uint64_t block_begin = 0;

    auto flush = [&](std::uint64_t upto) {
        if (tokens.empty()) return;
        emit_block(w, tokens, data.data(), block_begin, upto - block_begin);
        tokens.clear();
        block_begin = upto;
    };

    while (pos < n) {
        std::uint64_t best_len = 0;
        std::uint32_t best_dist = 0;
        if (pos + kMinMatch <= n) {
            const std::uint32_t cur = load32(data.data() + pos);
            std::uint32_t cand = head[hash4(cur)];
            unsigned depth = 0;
            while (cand != kNil && depth < kMaxChainDepth) {
                const std::uint64_t dist = pos - cand;
                if (dist == 0 || dist > kWindow) break;
                if (load32(data.data() + cand) == cur) {
                    const std::uint64_t len = match_length(data.data(), cand, pos, n);
                    if (len > best_len) {
                        best_len = len;
                        best_dist = std::uint32_t(dist);
                        if (len >= 4096) break; // long enough, stop searching
                    }
                }
                const std::uint32_t nxt = prev[cand & kWindowMask];
                if (nxt >= cand) break; // ring slot overwritten by a newer position
                cand = nxt;
                ++depth;
            }
        }
        if (best_len >= kMinMatch) {
            tokens.push_back({best_len, best_dist, 0});
            // Sparse insertion inside long matches keeps tokenization O(n).
            const std::uint64_t end_pos = pos + best_len;
            const std::uint64_t dense_end = std::min(end_pos, pos + 32);
            for (std::uint64_t i = pos; i < dense_end && i + kMinMatch <= n; ++i) insert(i);
            for (std::uint64_t i = dense_end; i < end_pos && i + kMinMatch <= n; i += 8)
                insert(i);
            pos = end_pos;
        } else {
            tokens.push_back({0, 0, data[pos]});
            if (pos + kMinMatch <= n) insert(pos);
            ++pos;
        }
        if (tokens.size() >= kMaxTokensPerBlock) flush(pos);
    }
    flush(n);
    return std::move(w.finish()).take_bytes();
}

Bytes Lz77Compressor::decompress(ByteView data) const {
    BitReader r(data.data(), 8 * std::uint64_t(data.size()));
    const std::uint64_t n = r.read_gamma() - 1;
    Bytes out;
    out.reserve(n);
    while (out.size() < n) {
        const bool compressed = r.read_bit();
        if (!compressed) {
            const std::uint64_t len = r.read_gamma();
            if (out.size() + len > n) throw DecodeError("lz: stored block overruns output");
            for (std::uint64_t i = 0; i < len; ++i) out.push_back(std::uint8_t(r.read_bits(8)));
            continue;
        }
        const std::uint64_t n_tokens = r.read_gamma();
        const HuffmanDecoder litlen(read_code_lengths(r, kLitLenSyms));
        const HuffmanDecoder dist(read_code_lengths(r, kDistSyms));
        for (std::uint64_t t = 0; t < n_tokens; ++t) {
            const std::size_t sym = litlen.read(r);
            if (sym < 256) {
                out.push_back(std::uint8_t(sym));
            } else {
                const unsigned lb = unsigned(sym - 256);
                const std::uint64_t m = (std::uint64_t(1) << lb) + (lb ? r.read_bits(lb) : 0);
                const std::uint64_t len = m + kMinMatch - 1;
                const unsigned db = unsigned(dist.read(r));
                const std::uint64_t d = (std::uint64_t(1) << db) + (db ? r.read_bits(db) : 0);
                if (d > out.size()) throw DecodeError("lz: match distance before stream start");
                if (out.size() + len > n) throw DecodeError("lz: match overruns output");
                const std::uint64_t start = out.size() - d;
                for (std::uint64_t i = 0; i < len; ++i) out.push_back(out[start + i]);
            }
        }
    }
    return out;
}

} // namespace magcodec
