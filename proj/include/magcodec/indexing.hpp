#pragma once

#include <cstdint>

#include "magcodec/mag.hpp"

namespace magcodec {

// Canonical linearizations used by every encoding in this library.
//
// Vertices: mixed radix with the first aspect varying fastest,
//   index = sum_i (coords[i]-1) * prod_{j<i} sizes[j].
// Edges: strict lower triangle, with a = min(index), b = max(index),
//   index = b(b-1)/2 + a.

std::uint64_t vertex_to_index(const CompanionTuple& tau, const CompositeVertex& v);
CompositeVertex index_to_vertex(const CompanionTuple& tau, std::uint64_t index);

std::uint64_t edge_to_index(const CompanionTuple& tau, const CompositeEdge& e);
CompositeEdge index_to_edge(const CompanionTuple& tau, std::uint64_t edge_index);

// Pair index over vertex indices a != b, both < n.
std::uint64_t pair_to_index(std::uint64_t a, std::uint64_t b);
// Inverse; returns (a, b) with a < b.
void index_to_pair(std::uint64_t edge_index, std::uint64_t& a, std::uint64_t& b);

// Canonical form: endpoint with the smaller linear index first.
CompositeEdge canonical_edge(const CompanionTuple& tau, const CompositeEdge& e);

// floor(sqrt(x)) in pure integer arithmetic.
std::uint64_t isqrt(std::uint64_t x);

} // namespace magcodec
