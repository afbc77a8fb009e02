#include "magcodec/mag.hpp"

#include <cstdlib>
#include <string>

namespace magcodec {

namespace {

constexpr std::uint64_t kDefaultCapBits = std::uint64_t(1) << 33;

std::uint64_t read_cap_env() {
    if (const char* s = std::getenv("MAGCODEC_SIZE_CAP_BITS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ValidationError("MAGCODEC_SIZE_CAP_BITS must be a positive integer");
    }
    return kDefaultCapBits;
}

} // namespace

std::uint64_t size_cap_bits() {
    static const std::uint64_t cap = read_cap_env();
    return cap;
}

CompanionTuple::CompanionTuple(std::vector<std::uint64_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw ValidationError("companion tuple must have order >= 1");
    unsigned __int128 n = 1;
    for (std::uint64_t s : sizes_) {
        if (s < 1) throw ValidationError("aspect size must be >= 1");
        n *= s;
        // n(n-1)/2 <= cap implies n stays far below 2^64
        if (n > (unsigned __int128)(std::uint64_t(1) << 62))
            throw SizeCapError("composite vertex count exceeds the size cap");
    }
    const unsigned __int128 edges = n * (n - 1) / 2;
    if (edges > (unsigned __int128)size_cap_bits())
        throw SizeCapError("possible-edge count " + std::to_string(std::uint64_t(edges > (unsigned __int128)UINT64_MAX ? UINT64_MAX : edges)) +
                           " exceeds the size cap of " + std::to_string(size_cap_bits()) + " bits");
    n_vertices_ = std::uint64_t(n);
    n_edges_ = std::uint64_t(edges);
}

void validate_vertex(const CompanionTuple& tau, const CompositeVertex& v) {
    if (v.coords.size() != tau.order())
        throw ValidationError("composite vertex arity does not match the companion tuple order");
    for (std::size_t i = 0; i < tau.order(); ++i) {
        if (v.coords[i] < 1 || v.coords[i] > tau.size(i))
            throw ValidationError("coordinate " + std::to_string(i + 1) + " out of range [1, " +
                                  std::to_string(tau.size(i)) + "]");
    }
}

SimpleMag::SimpleMag(CompanionTuple tau, BitBuffer edges)
    : tau_(std::move(tau)), edges_(std::move(edges)) {
    if (edges_.size() != tau_.num_possible_edges())
        throw ValidationError("edge bitset length " + std::to_string(edges_.size()) +
                              " does not match the possible-edge count " +
                              std::to_string(tau_.num_possible_edges()));
}

std::vector<std::uint64_t> SimpleMag::edge_indices() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t j = 0; j < edges_.size(); ++j)
        if (edges_.test(j)) out.push_back(j);
    return out;
}

SimpleMag make_mag(const CompanionTuple& tau, std::span<const std::uint64_t> edge_indices) {
    BitBuffer bits(tau.num_possible_edges());
    for (std::uint64_t j : edge_indices) {
        if (j >= tau.num_possible_edges())
            throw ValidationError("edge index " + std::to_string(j) + " out of range [0, " +
                                  std::to_string(tau.num_possible_edges()) + ")");
        bits.set(j);
    }
    return SimpleMag(tau, std::move(bits));
}

SimpleMag make_mag(const CompanionTuple& tau, std::initializer_list<std::uint64_t> edge_indices) {
    return make_mag(tau, std::span<const std::uint64_t>(edge_indices.begin(), edge_indices.size()));
}

CompanionTuple tau_from_bitstring(const BitBuffer& w) {
    if (w.empty()) throw ValidationError("bitstring w must be non-empty");
    std::vector<std::uint64_t> sizes(w.size());
    for (std::uint64_t i = 0; i < w.size(); ++i) sizes[i] = w.test(i) ? 2 : 1;
    return CompanionTuple(std::move(sizes));
}

CompanionTuple tau_from_bitstring_general(const BitBuffer& w, std::uint64_t f1, std::int64_t f2) {
    if (w.empty()) throw ValidationError("bitstring w must be non-empty");
    if (f1 < 1) throw ValidationError("f1(p) must be >= 1");
    if (f2 == 0) throw ValidationError("f2(p) must be non-zero (aspect sizes would coincide)");
    const std::int64_t on = std::int64_t(f1) + f2;
    if (on < 1) throw ValidationError("f1(p) + f2(p) must be >= 1");
    std::vector<std::uint64_t> sizes(w.size());
    for (std::uint64_t i = 0; i < w.size(); ++i)
        sizes[i] = w.test(i) ? std::uint64_t(on) : f1;
    return CompanionTuple(std::move(sizes));
}

BinarySignature signature_of(const CompanionTuple& tau) {
    BinarySignature s(tau.order());
    for (std::size_t i = 0; i < tau.order(); ++i)
        if (tau.size(i) >= 2) s.set(i);
    return s;
}

} // namespace magcodec
