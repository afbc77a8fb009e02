#include "magcodec/recovery.hpp"

#include <algorithm>

namespace magcodec {

namespace {

void mark(std::vector<std::vector<bool>>& seen, std::size_t aspect, std::uint64_t coord) {
    auto& s = seen[aspect];
    if (coord > s.size()) s.resize(coord, false);
    s[coord - 1] = true;
}

} // namespace

RecoveryResult recover_signature(const EdgeSetString& s) {
    EdgeSetStringReader reader(s);
    const std::size_t p = reader.order();
    if (p < 1) throw DecodeError("edge set string declares order 0");

    // A_i as membership bitmaps over observed coordinate values.
    std::vector<std::vector<bool>> seen(p);
    EdgeRecord rec;
    while (reader.next(rec)) {
        for (std::size_t i = 0; i < p; ++i) {
            mark(seen, i, rec.u.coords[i]);
            mark(seen, i, rec.v.coords[i]);
        }
    }
    reader.finish();

    RecoveryResult result;
    result.sizes.resize(p);
    result.signature = BinarySignature(p);
    if (reader.record_count() == 0) {
        // Single composite vertex: E_c is empty and no endpoints exist.
        std::fill(result.sizes.begin(), result.sizes.end(), 1);
        result.degenerate = true;
        return result;
    }
    for (std::size_t i = 0; i < p; ++i) {
        result.sizes[i] =
            std::uint64_t(std::count(seen[i].begin(), seen[i].end(), true));
        if (result.sizes[i] >= 2) result.signature.set(i);
    }
    return result;
}

} // namespace magcodec
