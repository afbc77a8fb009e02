#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "magcodec/bitstream.hpp"
#include "magcodec/mag.hpp"

namespace magcodec {

using BigInt = boost::multiprecision::cpp_int;

// Cantor pairing pi(x, y) = (x+y)(x+y+1)/2 + y.
BigInt pair(const BigInt& x, const BigInt& y);
std::pair<BigInt, BigInt> unpair(const BigInt& z);

// Right-nested tuple encoding: <a, b, c> = pi(a, pi(b, c)).
BigInt encode_tuple(const std::vector<BigInt>& values);
std::vector<BigInt> decode_tuple(const BigInt& z, std::size_t arity);

// --- characteristic string (bit j = presence of edge j) -------------------

using CharacteristicString = BitBuffer;

CharacteristicString encode_characteristic(const SimpleMag& mag);
SimpleMag decode_characteristic(const CompanionTuple& tau, const CharacteristicString& x);

// --- composite edge set string ---------------------------------------------
//
// Self-delimiting stream: gamma(p), gamma(record_count + 1), then for each
// possible edge index j in ascending order a record holding the 2p
// coordinates of the two canonical endpoints (each gamma coded) followed by
// one presence flag bit. Decodable with no side information.

using EdgeSetString = BitBuffer;

EdgeSetString encode_edge_set_string(const SimpleMag& mag);

// The companion tuple is reconstructed from the records themselves
// (per-coordinate maxima); the record sequence must be the exhaustive
// canonical enumeration of all possible edges.
SimpleMag decode_edge_set_string(const EdgeSetString& s);

struct EdgeRecord {
    CompositeVertex u;
    CompositeVertex v;
    bool present;
};

// Incremental record reader over an edge set string; O(p) state.
class EdgeSetStringReader {
  public:
    explicit EdgeSetStringReader(const EdgeSetString& s);
    // The reader borrows the stream's storage; a temporary would dangle.
    explicit EdgeSetStringReader(EdgeSetString&&) = delete;

    std::size_t order() const { return order_; }
    std::uint64_t record_count() const { return n_records_; }
    std::uint64_t records_read() const { return read_; }

    // False once all records have been consumed.
    bool next(EdgeRecord& out);

    // Call after the last record: rejects anything but zero padding.
    void finish();

  private:
    BitReader reader_;
    std::size_t order_;
    std::uint64_t n_records_;
    std::uint64_t read_ = 0;
};

// --- encoded companion tuple ------------------------------------------------

using EncodedTau = BitBuffer;

EncodedTau encode_tau(const CompanionTuple& tau);
CompanionTuple decode_tau(const EncodedTau& bits);

} // namespace magcodec
