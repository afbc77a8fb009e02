#include "magcodec/isomorphism.hpp"

#include <string>

#include "magcodec/indexing.hpp"

namespace magcodec {

ClassicalGraph::ClassicalGraph(std::uint64_t n, BitBuffer edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw ValidationError("classical graph needs at least one vertex");
    if (edges_.size() != n_ * (n_ - 1) / 2)
        throw ValidationError("edge bitset length " + std::to_string(edges_.size()) +
                              " does not match n(n-1)/2 = " + std::to_string(n_ * (n_ - 1) / 2));
}

SimpleMag ClassicalGraph::as_mag() const { return SimpleMag(CompanionTuple({n_}), edges_); }

ClassicalGraph mag_to_graph(const SimpleMag& mag) {
    return ClassicalGraph(mag.tau().num_composite_vertices(), mag.edges());
}

SimpleMag graph_to_mag(const ClassicalGraph& g, const CompanionTuple& tau) {
    if (tau.num_composite_vertices() != g.vertex_count())
        throw ValidationError("companion tuple spans " +
                              std::to_string(tau.num_composite_vertices()) +
                              " composite vertices, graph has " +
                              std::to_string(g.vertex_count()));
    return SimpleMag(tau, g.edges());
}

bool check_mag_graph_isomorphism(const SimpleMag& mag, const ClassicalGraph& g,
                                 std::span<const std::uint64_t> f) {
    const std::uint64_t n = mag.tau().num_composite_vertices();
    if (n != g.vertex_count())
        throw ValidationError("vertex counts differ; no bijection exists");
    if (f.size() != n) throw ValidationError("f must map all composite vertex indices");
    std::vector<bool> seen(n, false);
    for (std::uint64_t v : f) {
        if (v >= n || seen[v]) throw ValidationError("f is not a permutation of [0, n)");
        seen[v] = true;
    }
    for (std::uint64_t j = 0; j < mag.tau().num_possible_edges(); ++j) {
        std::uint64_t a = 0, b = 0;
        index_to_pair(j, a, b);
        if (mag.has_edge(j) != g.has_edge(pair_to_index(f[a], f[b]))) return false;
    }
    return true;
}

} // namespace magcodec
