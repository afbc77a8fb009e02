#include "magcodec/huffman.hpp"

#include <algorithm>
#include <queue>

namespace magcodec {

std::vector<std::uint8_t> huffman_code_lengths(const std::vector<std::uint64_t>& freqs) {
    const std::size_t n = freqs.size();
    struct Node {
        std::uint64_t freq;
        std::uint32_t order; // deterministic tie break
        std::int32_t left = -1, right = -1;
        std::int32_t symbol = -1;
    };
    std::vector<Node> nodes;
    nodes.reserve(2 * n);
    auto cmp = [&](std::uint32_t a, std::uint32_t b) {
        if (nodes[a].freq != nodes[b].freq) return nodes[a].freq > nodes[b].freq;
        return nodes[a].order > nodes[b].order;
    };
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, decltype(cmp)> heap(cmp);
    for (std::size_t s = 0; s < n; ++s) {
        if (freqs[s] == 0) continue;
        nodes.push_back({freqs[s], std::uint32_t(nodes.size()), -1, -1, std::int32_t(s)});
        heap.push(std::uint32_t(nodes.size() - 1));
    }
    std::vector<std::uint8_t> lens(n, 0);
    if (heap.empty()) return lens;
    if (heap.size() == 1) {
        lens[std::size_t(nodes[heap.top()].symbol)] = 1;
        return lens;
    }
    while (heap.size() > 1) {
        const std::uint32_t a = heap.top();
        heap.pop();
        const std::uint32_t b = heap.top();
        heap.pop();
        nodes.push_back({nodes[a].freq + nodes[b].freq, std::uint32_t(nodes.size()),
                         std::int32_t(a), std::int32_t(b), -1});
        heap.push(std::uint32_t(nodes.size() - 1));
    }
    // Depth-first walk assigning depths as code lengths.
    std::vector<std::pair<std::uint32_t, std::uint8_t>> stack{{heap.top(), 0}};
    while (!stack.empty()) {
        auto [idx, depth] = stack.back();
        stack.pop_back();
        const Node& nd = nodes[idx];
        if (nd.symbol >= 0) {
            lens[std::size_t(nd.symbol)] = depth;
        } else {
            stack.push_back({std::uint32_t(nd.left), std::uint8_t(depth + 1)});
            stack.push_back({std::uint32_t(nd.right), std::uint8_t(depth + 1)});
        }
    }
    return lens;
}

namespace {

unsigned max_length(const std::vector<std::uint8_t>& lens) {
    unsigned m = 0;
    for (std::uint8_t l : lens) m = std::max<unsigned>(m, l);
    return m;
}

} // namespace

HuffmanEncoder::HuffmanEncoder(std::vector<std::uint8_t> lens) : lengths(std::move(lens)) {
    const unsigned maxl = max_length(lengths);
    std::vector<std::uint32_t> count(maxl + 1, 0);
    for (std::uint8_t l : lengths)
        if (l) ++count[l];
    std::vector<std::uint32_t> next(maxl + 1, 0);
    std::uint32_t code = 0;
    for (unsigned l = 1; l <= maxl; ++l) {
        code = (code + count[l - 1]) << 1;
        next[l] = code;
    }
    codes.assign(lengths.size(), 0);
    for (std::size_t s = 0; s < lengths.size(); ++s)
        if (lengths[s]) codes[s] = next[lengths[s]]++;
}

HuffmanDecoder::HuffmanDecoder(const std::vector<std::uint8_t>& lens) {
    max_len_ = max_length(lens);
    first_code_.assign(max_len_ + 2, 0);
    first_index_.assign(max_len_ + 2, 0);
    std::vector<std::uint32_t> count(max_len_ + 1, 0);
    for (std::uint8_t l : lens)
        if (l) ++count[l];
    std::uint32_t code = 0, index = 0;
    for (unsigned l = 1; l <= max_len_; ++l) {
        code = (code + (l > 1 ? count[l - 1] : 0)) << 1;
        first_code_[l] = code;
        first_index_[l] = index;
        index += count[l];
    }
    symbols_.resize(index);
    std::vector<std::uint32_t> next(max_len_ + 1);
    for (unsigned l = 1; l <= max_len_; ++l) next[l] = first_index_[l];
    for (std::size_t s = 0; s < lens.size(); ++s)
        if (lens[s]) symbols_[next[lens[s]]++] = std::uint32_t(s);
}

std::size_t HuffmanDecoder::read(BitReader& r) const {
    std::uint32_t code = 0;
    for (unsigned l = 1; l <= max_len_; ++l) {
        code = (code << 1) | std::uint32_t(r.read_bit());
        const std::uint32_t first = first_code_[l];
        const std::uint32_t n_at_len =
            (l + 1 <= max_len_ ? first_index_[l + 1] : std::uint32_t(symbols_.size())) -
            first_index_[l];
        if (code >= first && code < first + n_at_len)
            return symbols_[first_index_[l] + (code - first)];
    }
    throw DecodeError("invalid Huffman code");
}

void write_code_lengths(BitWriter& w, const std::vector<std::uint8_t>& lens) {
    for (std::uint8_t l : lens) w.put_gamma(std::uint64_t(l) + 1);
}

std::vector<std::uint8_t> read_code_lengths(BitReader& r, std::size_t count) {
    std::vector<std::uint8_t> lens(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t v = r.read_gamma() - 1;
        if (v > 60) throw DecodeError("implausible Huffman code length");
        lens[i] = std::uint8_t(v);
    }
    return lens;
}

} // namespace magcodec
