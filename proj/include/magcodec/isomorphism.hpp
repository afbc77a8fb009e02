#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "magcodec/mag.hpp"

namespace magcodec {

// Simple undirected graph on vertices {1,...,n}; edges share the
// triangular-index bitset convention of module indexing.
class ClassicalGraph {
  public:
    ClassicalGraph(std::uint64_t n, BitBuffer edges);

    std::uint64_t vertex_count() const { return n_; }
    const BitBuffer& edges() const { return edges_; }
    bool has_edge(std::uint64_t edge_index) const { return edges_.test(edge_index); }
    std::uint64_t num_possible_edges() const { return edges_.size(); }

    // A classical graph is the order-1 simple MAG with tau = (n).
    SimpleMag as_mag() const;

    friend bool operator==(const ClassicalGraph&, const ClassicalGraph&) = default;

  private:
    std::uint64_t n_;
    BitBuffer edges_;
};

// Canonical direction: the unique (up to graph isomorphism) classical graph
// MAG-graph-isomorphic to the MAG under the canonical vertex linearization.
// The edge bitset carries over verbatim.
ClassicalGraph mag_to_graph(const SimpleMag& mag);

// Inverse lift for a compatible companion tuple (product of sizes = n).
SimpleMag graph_to_mag(const ClassicalGraph& g, const CompanionTuple& tau);

// True iff f (a permutation of [0, n) over vertex indices) witnesses the
// MAG-graph isomorphism: e in E(mag) <=> (f(u), f(v)) in E(g) for every
// possible composite edge.
bool check_mag_graph_isomorphism(const SimpleMag& mag, const ClassicalGraph& g,
                                 std::span<const std::uint64_t> f);

} // namespace magcodec
