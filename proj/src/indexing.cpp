#include "magcodec/indexing.hpp"

#include <string>
#include <utility>

namespace magcodec {

std::uint64_t vertex_to_index(const CompanionTuple& tau, const CompositeVertex& v) {
    validate_vertex(tau, v);
    std::uint64_t index = 0;
    std::uint64_t stride = 1;
    for (std::size_t i = 0; i < tau.order(); ++i) {
        index += (v.coords[i] - 1) * stride;
        stride *= tau.size(i);
    }
    return index;
}

CompositeVertex index_to_vertex(const CompanionTuple& tau, std::uint64_t index) {
    if (index >= tau.num_composite_vertices())
        throw ValidationError("vertex index " + std::to_string(index) + " out of range [0, " +
                              std::to_string(tau.num_composite_vertices()) + ")");
    CompositeVertex v;
    v.coords.resize(tau.order());
    for (std::size_t i = 0; i < tau.order(); ++i) {
        v.coords[i] = index % tau.size(i) + 1;
        index /= tau.size(i);
    }
    return v;
}

std::uint64_t pair_to_index(std::uint64_t a, std::uint64_t b) {
    if (a == b) throw ValidationError("self-loops have no edge index");
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
}

std::uint64_t isqrt(std::uint64_t x) {
    if (x < 2) return x;
    // Newton iteration on integers, then a correction loop. The seed
    // x/2 + 1 >= sqrt(x) keeps r + x/r below 2^64 for every input.
    std::uint64_t r = x / 2 + 1;
    std::uint64_t next = (r + x / r) / 2;
    while (next < r) {
        r = next;
        next = (r + x / r) / 2;
    }
    while (r > 0 && r > x / r) --r;
    while ((r + 1) <= x / (r + 1)) ++r;
    return r;
}

void index_to_pair(std::uint64_t edge_index, std::uint64_t& a, std::uint64_t& b) {
    // b is the largest integer with b(b-1)/2 <= edge_index.
    b = (1 + isqrt(1 + 8 * edge_index)) / 2;
    while (b * (b - 1) / 2 > edge_index) --b;
    while ((b + 1) * b / 2 <= edge_index) ++b;
    a = edge_index - b * (b - 1) / 2;
}

std::uint64_t edge_to_index(const CompanionTuple& tau, const CompositeEdge& e) {
    const std::uint64_t iu = vertex_to_index(tau, e.u);
    const std::uint64_t iv = vertex_to_index(tau, e.v);
    if (iu == iv) throw ValidationError("composite edge endpoints must be distinct");
    return pair_to_index(iu, iv);
}

CompositeEdge index_to_edge(const CompanionTuple& tau, std::uint64_t edge_index) {
    if (edge_index >= tau.num_possible_edges())
        throw ValidationError("edge index " + std::to_string(edge_index) + " out of range [0, " +
                              std::to_string(tau.num_possible_edges()) + ")");
    std::uint64_t a = 0, b = 0;
    index_to_pair(edge_index, a, b);
    return CompositeEdge{index_to_vertex(tau, a), index_to_vertex(tau, b)};
}

CompositeEdge canonical_edge(const CompanionTuple& tau, const CompositeEdge& e) {
    const std::uint64_t iu = vertex_to_index(tau, e.u);
    const std::uint64_t iv = vertex_to_index(tau, e.v);
    if (iu == iv) throw ValidationError("composite edge endpoints must be distinct");
    return iu < iv ? e : CompositeEdge{e.v, e.u};
}

} // namespace magcodec
