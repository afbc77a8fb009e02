#include "magcodec/complexity.hpp"

#include <map>
#include <mutex>

#include "magcodec/compressors.hpp"
#include "magcodec/errors.hpp"

namespace magcodec {

ComplexityEstimate estimate(const Compressor& c, ByteView data) {
    ComplexityEstimate e;
    e.raw_bits = 8 * std::uint64_t(data.size());
    e.compressed_bits = 8 * std::uint64_t(c.compress(data).size());
    e.compressor = std::string(c.name());
    return e;
}

std::uint64_t estimate_conditional(const Compressor& c, ByteView target, ByteView given) {
    Bytes joined;
    joined.reserve(given.size() + target.size());
    joined.insert(joined.end(), given.begin(), given.end());
    joined.insert(joined.end(), target.begin(), target.end());
    const std::uint64_t joint = estimate(c, joined).compressed_bits;
    const std::uint64_t base = estimate(c, given).compressed_bits;
    return joint > base ? joint - base : 0;
}

namespace {

std::map<std::string, std::unique_ptr<Compressor>, std::less<>>& registry() {
    static auto* m = [] {
        auto* r = new std::map<std::string, std::unique_ptr<Compressor>, std::less<>>();
        (*r)["lz"] = std::make_unique<Lz77Compressor>();
        (*r)["rle"] = std::make_unique<RleCompressor>();
        return r;
    }();
    return *m;
}

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

const Compressor& get_compressor(std::string_view name) {
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(name);
    if (it == registry().end())
        throw ValidationError("unknown compressor '" + std::string(name) + "'");
    return *it->second;
}

std::vector<std::string> compressor_names() {
    std::lock_guard lock(registry_mutex());
    std::vector<std::string> names;
    for (const auto& [name, _] : registry()) names.push_back(name);
    return names;
}

void register_compressor(std::unique_ptr<Compressor> c) {
    std::lock_guard lock(registry_mutex());
    registry()[std::string(c->name())] = std::move(c);
}

} // namespace magcodec
