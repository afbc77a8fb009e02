#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "magcodec/codec.hpp"
#include "magcodec/indexing.hpp"
#include "magcodec/isomorphism.hpp"

using namespace magcodec;

namespace {

SimpleMag random_mag(std::mt19937_64& rng) {
    for (;;) {
        const std::size_t p = 1 + rng() % 4;
        std::vector<std::uint64_t> sizes(p);
        for (auto& s : sizes) s = 1 + rng() % 5;
        CompanionTuple tau(std::move(sizes));
        if (tau.num_composite_vertices() > 64) continue;
        BitBuffer edges(tau.num_possible_edges());
        for (std::uint64_t j = 0; j < edges.size(); ++j) edges.set(j, rng() & 1);
        return SimpleMag(std::move(tau), std::move(edges));
    }
}

} // namespace

TEST_CASE("mag_to_graph carries the edge bitset verbatim") {
    const SimpleMag m = make_mag(CompanionTuple({2, 1, 2}), {0, 3});
    const ClassicalGraph g = mag_to_graph(m);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == m.edges());
    CHECK(g.has_edge(0));
    CHECK(g.has_edge(3));
    CHECK(g.num_possible_edges() == 6);
}

TEST_CASE("order-1 MAGs map to the identical graph") {
    const SimpleMag m = make_mag(CompanionTuple({5}), {0, 2, 9});
    const ClassicalGraph g = mag_to_graph(m);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edges() == m.edges());
    CHECK(g.as_mag() == m);
}

TEST_CASE("vertex count of the graph is the product of aspect sizes") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const SimpleMag m = random_mag(rng);
        std::uint64_t prod = 1;
        for (std::uint64_t s : m.tau().sizes()) prod *= s;
        CHECK(mag_to_graph(m).vertex_count() == prod);
    }
}

TEST_CASE("characteristic strings of MAG and graph are bit-identical") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        const SimpleMag m = random_mag(rng);
        const ClassicalGraph g = mag_to_graph(m);
        CHECK(encode_characteristic(m) == encode_characteristic(g.as_mag()));
    }
}

TEST_CASE("graph_to_mag inverts mag_to_graph") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const SimpleMag m = random_mag(rng);
        const ClassicalGraph g = mag_to_graph(m);
        CHECK(graph_to_mag(g, m.tau()) == m);
        CHECK(mag_to_graph(graph_to_mag(g, m.tau())) == g);
    }
}

TEST_CASE("same graph lifted to different tuples yields different edge set strings") {
    // Seed of the distortion: both lifts are MAG-graph-isomorphic to g but
    // their edge set strings differ.
    const ClassicalGraph g(4, BitBuffer::from_string("101001"));
    const SimpleMag flat = graph_to_mag(g, CompanionTuple({4}));
    const SimpleMag square = graph_to_mag(g, CompanionTuple({2, 2}));
    CHECK(encode_characteristic(flat) == encode_characteristic(square));
    CHECK(encode_edge_set_string(flat) != encode_edge_set_string(square));
}

TEST_CASE("graph_to_mag rejects mismatched vertex counts") {
    const ClassicalGraph g(5, BitBuffer(10));
    CHECK_THROWS_AS(graph_to_mag(g, CompanionTuple({2, 2})), ValidationError);
}

TEST_CASE("identity witnesses the canonical isomorphism") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 200; ++i) {
        const SimpleMag m = random_mag(rng);
        const ClassicalGraph g = mag_to_graph(m);
        std::vector<std::uint64_t> id(g.vertex_count());
        std::iota(id.begin(), id.end(), 0);
        CHECK(check_mag_graph_isomorphism(m, g, id));
    }
}

TEST_CASE("conjugating both sides by a permutation preserves the relation") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        const SimpleMag m = random_mag(rng);
        const ClassicalGraph base = mag_to_graph(m);
        const std::uint64_t n = base.vertex_count();
        std::vector<std::uint64_t> f(n);
        std::iota(f.begin(), f.end(), 0);
        std::shuffle(f.begin(), f.end(), rng);
        // Relabel the graph by f: edge (a, b) becomes (f(a), f(b)).
        BitBuffer edges(base.num_possible_edges());
        for (std::uint64_t j = 0; j < edges.size(); ++j) {
            if (!base.has_edge(j)) continue;
            std::uint64_t a, b;
            index_to_pair(j, a, b);
            edges.set(pair_to_index(f[a], f[b]));
        }
        const ClassicalGraph relabeled(n, std::move(edges));
        CHECK(check_mag_graph_isomorphism(m, relabeled, f));
    }
}

TEST_CASE("a non-isomorphism witness is rejected") {
    // Path 1-2-3 as a MAG on tau=(3): edges (0,1) and (1,2).
    const SimpleMag path = make_mag(CompanionTuple({3}), {0, 2});
    const ClassicalGraph g = mag_to_graph(path);
    // Swapping the middle vertex with an endpoint breaks edge membership.
    const std::vector<std::uint64_t> bad{1, 0, 2};
    CHECK_FALSE(check_mag_graph_isomorphism(path, g, bad));
}

TEST_CASE("check_mag_graph_isomorphism validates the permutation") {
    const SimpleMag m = make_mag(CompanionTuple({2, 2}), {});
    const ClassicalGraph g = mag_to_graph(m);
    const std::vector<std::uint64_t> not_a_permutation{0, 0, 1, 2};
    CHECK_THROWS_AS(check_mag_graph_isomorphism(m, g, not_a_permutation), ValidationError);
    const std::vector<std::uint64_t> wrong_length{0, 1, 2};
    CHECK_THROWS_AS(check_mag_graph_isomorphism(m, g, wrong_length), ValidationError);
}

TEST_CASE("ClassicalGraph validates its bitset length") {
    CHECK_THROWS_AS(ClassicalGraph(4, BitBuffer(5)), ValidationError);
    CHECK_NOTHROW(ClassicalGraph(4, BitBuffer(6)));
}
