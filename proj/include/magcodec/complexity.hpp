#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magcodec {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// Deterministic lossless compressor. Compressed size is the computable
// proxy C(.) for prefix algorithmic complexity; estimates are always
// compressor-relative.
class Compressor {
  public:
    virtual ~Compressor() = default;
    virtual std::string_view name() const = 0;
    virtual Bytes compress(ByteView data) const = 0;
    virtual Bytes decompress(ByteView data) const = 0;
};

struct ComplexityEstimate {
    std::uint64_t raw_bits = 0;
    std::uint64_t compressed_bits = 0;
    std::string compressor;
};

ComplexityEstimate estimate(const Compressor& c, ByteView data);

// max(0, C(given || target) - C(given)), in bits.
std::uint64_t estimate_conditional(const Compressor& c, ByteView target, ByteView given);

// Registry of compressors selectable by name ("lz" and "rle" built in).
const Compressor& get_compressor(std::string_view name);
std::vector<std::string> compressor_names();
void register_compressor(std::unique_ptr<Compressor> c);

} // namespace magcodec
