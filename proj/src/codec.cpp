#include "magcodec/codec.hpp"

#include <string>

#include "magcodec/indexing.hpp"

namespace magcodec {

BigInt pair(const BigInt& x, const BigInt& y) {
    if (x < 0 || y < 0) throw ValidationError("pairing function requires non-negative inputs");
    const BigInt s = x + y;
    return s * (s + 1) / 2 + y;
}

std::pair<BigInt, BigInt> unpair(const BigInt& z) {
    if (z < 0) throw ValidationError("pairing function requires non-negative inputs");
    const BigInt disc = 8 * z + 1;
    BigInt s = boost::multiprecision::sqrt(disc);
    s = (s - 1) / 2;
    while (s * (s + 1) / 2 > z) --s;
    while ((s + 1) * (s + 2) / 2 <= z) ++s;
    const BigInt y = z - s * (s + 1) / 2;
    return {s - y, y};
}

BigInt encode_tuple(const std::vector<BigInt>& values) {
    if (values.empty()) throw ValidationError("cannot encode an empty tuple");
    BigInt acc = values.back();
    for (std::size_t i = values.size() - 1; i-- > 0;) acc = pair(values[i], acc);
    return acc;
}

std::vector<BigInt> decode_tuple(const BigInt& z, std::size_t arity) {
    if (arity == 0) throw ValidationError("tuple arity must be >= 1");
    std::vector<BigInt> out;
    out.reserve(arity);
    BigInt acc = z;
    for (std::size_t i = 0; i + 1 < arity; ++i) {
        auto [x, rest] = unpair(acc);
        out.push_back(x);
        acc = rest;
    }
    out.push_back(acc);
    return out;
}

CharacteristicString encode_characteristic(const SimpleMag& mag) { return mag.edges(); }

SimpleMag decode_characteristic(const CompanionTuple& tau, const CharacteristicString& x) {
    if (x.size() != tau.num_possible_edges())
        throw ValidationError("characteristic string length " + std::to_string(x.size()) +
                              " does not match the possible-edge count " +
                              std::to_string(tau.num_possible_edges()) +
                              " (the string alone does not determine the space)");
    return SimpleMag(tau, x);
}

namespace {

// Advances 1-based mixed-radix coordinates, first aspect fastest.
void advance_coords(const CompanionTuple& tau, std::vector<std::uint64_t>& coords) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < tau.size(i)) {
            ++coords[i];
            return;
        }
        coords[i] = 1;
    }
}

void put_coords(BitWriter& w, const std::vector<std::uint64_t>& coords) {
    for (std::uint64_t c : coords) w.put_gamma(c);
}

// Requires trailing padding (at most 7 zero bits) and nothing else.
void check_padding(BitReader& r, const char* what) {
    if (r.remaining() >= 8) throw DecodeError(std::string(what) + ": trailing data after stream");
    while (r.remaining() > 0)
        if (r.read_bit()) throw DecodeError(std::string(what) + ": non-zero padding");
}

} // namespace

EdgeSetString encode_edge_set_string(const SimpleMag& mag) {
    const CompanionTuple& tau = mag.tau();
    const std::size_t p = tau.order();
    const std::uint64_t n = tau.num_composite_vertices();
    const std::uint64_t m = tau.num_possible_edges();

    BitWriter w;
    w.put_gamma(p);
    w.put_gamma(m + 1);

    std::vector<std::uint64_t> a_coords(p, 1), b_coords(p, 1);
    std::uint64_t j = 0;
    for (std::uint64_t b = 1; b < n; ++b) {
        advance_coords(tau, b_coords);
        for (std::size_t i = 0; i < p; ++i) a_coords[i] = 1;
        for (std::uint64_t a = 0; a < b; ++a) {
            if (a > 0) advance_coords(tau, a_coords);
            put_coords(w, a_coords);
            put_coords(w, b_coords);
            w.put_bit(mag.has_edge(j));
            ++j;
        }
    }
    return w.finish();
}

EdgeSetStringReader::EdgeSetStringReader(const EdgeSetString& s) : reader_(s) {
    const std::uint64_t p = reader_.read_gamma();
    const std::uint64_t count_plus_one = reader_.read_gamma();
    if (count_plus_one < 1) throw DecodeError("edge set string: bad record count");
    order_ = std::size_t(p);
    n_records_ = count_plus_one - 1;
}

void EdgeSetStringReader::finish() {
    if (read_ != n_records_) throw DecodeError("edge set string: not all records consumed");
    check_padding(reader_, "edge set string");
}

bool EdgeSetStringReader::next(EdgeRecord& out) {
    if (read_ >= n_records_) return false;
    out.u.coords.resize(order_);
    out.v.coords.resize(order_);
    for (std::size_t i = 0; i < order_; ++i) out.u.coords[i] = reader_.read_gamma();
    for (std::size_t i = 0; i < order_; ++i) out.v.coords[i] = reader_.read_gamma();
    out.present = reader_.read_bit();
    ++read_;
    return true;
}

SimpleMag decode_edge_set_string(const EdgeSetString& s) {
    // Pass 1: coordinate maxima and presence flags.
    EdgeSetStringReader reader(s);
    const std::size_t p = reader.order();
    std::vector<std::uint64_t> maxima(p, 1);
    BitBuffer flags;
    flags.reserve_bits(reader.record_count());
    EdgeRecord rec;
    while (reader.next(rec)) {
        for (std::size_t i = 0; i < p; ++i) {
            if (rec.u.coords[i] > maxima[i]) maxima[i] = rec.u.coords[i];
            if (rec.v.coords[i] > maxima[i]) maxima[i] = rec.v.coords[i];
        }
        flags.push_back(rec.present);
    }

    CompanionTuple tau(std::move(maxima));
    if (reader.record_count() != tau.num_possible_edges())
        throw DecodeError("edge set string: record count " + std::to_string(reader.record_count()) +
                          " inconsistent with reconstructed vertex count " +
                          std::to_string(tau.num_composite_vertices()));

    // Pass 2: the records must be the exact canonical enumeration of E_c.
    EdgeSetStringReader check(s);
    std::uint64_t j = 0;
    while (check.next(rec)) {
        const CompositeEdge expected = index_to_edge(tau, j);
        if (rec.u != expected.u || rec.v != expected.v)
            throw DecodeError("edge set string: record " + std::to_string(j) +
                              " is not the canonical enumeration of possible edges");
        ++j;
    }
    check.finish();
    return SimpleMag(std::move(tau), std::move(flags));
}

EncodedTau encode_tau(const CompanionTuple& tau) {
    BitWriter w;
    w.put_gamma(tau.order());
    for (std::uint64_t s : tau.sizes()) w.put_gamma(s);
    return w.finish();
}

CompanionTuple decode_tau(const EncodedTau& bits) {
    BitReader r(bits);
    const std::uint64_t p = r.read_gamma();
    std::vector<std::uint64_t> sizes(p);
    for (std::uint64_t i = 0; i < p; ++i) sizes[i] = r.read_gamma();
    check_padding(r, "encoded companion tuple");
    return CompanionTuple(std::move(sizes));
}

} // namespace magcodec
