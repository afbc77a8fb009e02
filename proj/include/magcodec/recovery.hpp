#pragma once

#include <cstdint>
#include <vector>

#include "magcodec/codec.hpp"
#include "magcodec/mag.hpp"

namespace magcodec {

struct RecoveryResult {
    std::vector<std::uint64_t> sizes; // z_i = |A_i|, per aspect
    BinarySignature signature;        // bit i = 1 iff sizes[i] >= 2
    // True for zero-record streams (single composite vertex): no aspect
    // information exists in the records, so the all-zero signature is a
    // convention, not a recovery.
    bool degenerate = false;
};

// Recovers the companion-tuple signature (and aspect sizes) from a
// composite edge set string alone: collect all endpoints, take the set of
// i-th coordinates per aspect, report its cardinality. Depends only on the
// exhaustive enumeration of possible edges, never on the presence flags.
RecoveryResult recover_signature(const EdgeSetString& s);

} // namespace magcodec
