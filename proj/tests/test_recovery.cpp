#include <doctest.h>

#include <random>

#include "magcodec/codec.hpp"
#include "magcodec/recovery.hpp"

using namespace magcodec;

namespace {

BitBuffer bits_of(std::uint64_t value, unsigned len) {
    BitBuffer w(len);
    for (unsigned i = 0; i < len; ++i) w.set(i, (value >> i) & 1);
    return w;
}

BitBuffer random_topology(const CompanionTuple& tau, double density, std::mt19937_64& rng) {
    BitBuffer edges(tau.num_possible_edges());
    std::bernoulli_distribution coin(density);
    for (std::uint64_t j = 0; j < edges.size(); ++j) edges.set(j, coin(rng));
    return edges;
}

} // namespace

TEST_CASE("recovery inverts the base construction for known tuples") {
    const SimpleMag m = make_mag(tau_from_bitstring(BitBuffer::from_string("101")), {0, 5});
    const RecoveryResult r = recover_signature(encode_edge_set_string(m));
    CHECK(r.signature.to_string() == "101");
    CHECK(r.sizes == std::vector<std::uint64_t>{2, 1, 2});
    CHECK_FALSE(r.degenerate);

    const SimpleMag m2 = make_mag(CompanionTuple({2, 2, 2, 2}), {});
    const RecoveryResult r2 = recover_signature(encode_edge_set_string(m2));
    CHECK(r2.signature.to_string() == "1111");
    CHECK(r2.sizes == std::vector<std::uint64_t>{2, 2, 2, 2});
}

TEST_CASE("recovery on the generalized construction") {
    const CompanionTuple tau = tau_from_bitstring_general(BitBuffer::from_string("10"), 3, 2);
    REQUIRE(tau == CompanionTuple({5, 3}));
    const RecoveryResult r = recover_signature(encode_edge_set_string(make_mag(tau, {})));
    CHECK(r.sizes == std::vector<std::uint64_t>{5, 3});
    CHECK(r.signature.to_string() == "11");
}

TEST_CASE("recovery is exact for every topology over all w of length <= 8") {
    std::mt19937_64 rng(99);
    for (unsigned len = 1; len <= 8; ++len) {
        for (std::uint64_t bits = 1; bits < (1ull << len); ++bits) {
            const BitBuffer w = bits_of(bits, len);
            const CompanionTuple tau = tau_from_bitstring(w);

            // Empty, trivial, and three random densities.
            std::vector<BitBuffer> topologies;
            topologies.emplace_back(tau.num_possible_edges());
            BitBuffer trivial(tau.num_possible_edges());
            trivial.set(0);
            topologies.push_back(std::move(trivial));
            for (double rho : {0.1, 0.5, 0.9})
                topologies.push_back(random_topology(tau, rho, rng));

            for (auto& topology : topologies) {
                const SimpleMag m(tau, std::move(topology));
                const RecoveryResult r = recover_signature(encode_edge_set_string(m));
                CHECK(r.signature == w);
                CHECK(r.sizes == tau.sizes());
                CHECK_FALSE(r.degenerate);
            }
        }
    }
}

TEST_CASE("recovery is exact for 100 seeded w of length <= 24") {
    std::mt19937_64 rng(7);
    int tested = 0;
    while (tested < 100) {
        const unsigned len = 2 + unsigned(rng() % 23);
        const std::uint64_t bits = rng() & ((1ull << len) - 1);
        if (bits == 0) continue;
        const BitBuffer w = bits_of(bits, len);
        if (w.count_ones() > 10) continue; // keep |E_c| desk-sized
        const SimpleMag m = make_mag(tau_from_bitstring(w), {});
        const RecoveryResult r = recover_signature(encode_edge_set_string(m));
        CHECK(r.signature == w);
        ++tested;
    }
}

TEST_CASE("recovery ignores the presence flags (z-flip invariance)") {
    const CompanionTuple tau = tau_from_bitstring(BitBuffer::from_string("1101"));
    const SimpleMag empty = make_mag(tau, {});
    BitBuffer all(tau.num_possible_edges());
    for (std::uint64_t j = 0; j < all.size(); ++j) all.set(j);
    const SimpleMag full(tau, std::move(all));

    const RecoveryResult a = recover_signature(encode_edge_set_string(empty));
    const RecoveryResult b = recover_signature(encode_edge_set_string(full));
    CHECK(a.signature == b.signature);
    CHECK(a.sizes == b.sizes);
}

TEST_CASE("zero-record streams return the all-zero convention with a warning flag") {
    const SimpleMag degenerate = make_mag(tau_from_bitstring(BitBuffer::from_string("000")), {});
    const RecoveryResult r = recover_signature(encode_edge_set_string(degenerate));
    CHECK(r.degenerate);
    CHECK(r.signature.to_string() == "000");
    CHECK(r.sizes == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("malformed streams are rejected") {
    CHECK_THROWS_AS(recover_signature(BitBuffer::from_string("0")), DecodeError);
}
