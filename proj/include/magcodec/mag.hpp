#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "magcodec/bitstream.hpp"
#include "magcodec/errors.hpp"

namespace magcodec {

// Default cap on the possible-edge bitset: 2^33 bits (1 GiB). Overridable
// via the MAGCODEC_SIZE_CAP_BITS environment variable.
std::uint64_t size_cap_bits();

// Ordered list of aspect sizes. Immutable; fully determines the
// multidimensional space (vertex count, possible-edge count).
class CompanionTuple {
  public:
    explicit CompanionTuple(std::vector<std::uint64_t> sizes);
    CompanionTuple(std::initializer_list<std::uint64_t> sizes)
        : CompanionTuple(std::vector<std::uint64_t>(sizes)) {}

    std::size_t order() const { return sizes_.size(); }
    const std::vector<std::uint64_t>& sizes() const { return sizes_; }
    std::uint64_t size(std::size_t i) const { return sizes_[i]; }

    std::uint64_t num_composite_vertices() const { return n_vertices_; }
    std::uint64_t num_possible_edges() const { return n_edges_; }

    friend bool operator==(const CompanionTuple&, const CompanionTuple&) = default;

  private:
    std::vector<std::uint64_t> sizes_;
    std::uint64_t n_vertices_;
    std::uint64_t n_edges_;
};

// A p-tuple of 1-based coordinates.
struct CompositeVertex {
    std::vector<std::uint64_t> coords;

    friend bool operator==(const CompositeVertex&, const CompositeVertex&) = default;
};

// Throws ValidationError unless 1 <= coords[i] <= sizes[i] for all i.
void validate_vertex(const CompanionTuple& tau, const CompositeVertex& v);

// Unordered non-loop pair; canonical form keeps the endpoint with the
// smaller linear index first (canonicalized by module indexing).
struct CompositeEdge {
    CompositeVertex u;
    CompositeVertex v;

    friend bool operator==(const CompositeEdge&, const CompositeEdge&) = default;
};

// Per-aspect signature: bit i = 1 iff aspect i has at least two elements.
using BinarySignature = BitBuffer;

// Companion tuple plus a presence bitset over all possible composite edges.
class SimpleMag {
  public:
    SimpleMag(CompanionTuple tau, BitBuffer edges);

    const CompanionTuple& tau() const { return tau_; }
    const BitBuffer& edges() const { return edges_; }
    std::uint64_t num_edges() const { return edges_.count_ones(); }

    bool has_edge(std::uint64_t edge_index) const { return edges_.test(edge_index); }

    // Ascending indices of present edges.
    std::vector<std::uint64_t> edge_indices() const;

    friend bool operator==(const SimpleMag&, const SimpleMag&) = default;

  private:
    CompanionTuple tau_;
    BitBuffer edges_;
};

SimpleMag make_mag(const CompanionTuple& tau, std::span<const std::uint64_t> edge_indices);
SimpleMag make_mag(const CompanionTuple& tau, std::initializer_list<std::uint64_t> edge_indices);

// Aspect sizes 2 on w=1 positions, 1 elsewhere.
CompanionTuple tau_from_bitstring(const BitBuffer& w);

// Generalized construction: size f1+f2 on w=1 positions, f1 elsewhere.
// f1 and f2 are the evaluations at p = w.size(); f2 may be negative but
// not zero, and both resulting sizes must be >= 1.
CompanionTuple tau_from_bitstring_general(const BitBuffer& w, std::uint64_t f1, std::int64_t f2);

BinarySignature signature_of(const CompanionTuple& tau);

} // namespace magcodec
