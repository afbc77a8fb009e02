#include "magcodec/textio.hpp"

#include <fstream>
#include <sstream>

namespace magcodec {

namespace {

std::vector<std::uint64_t> parse_uints(std::istringstream& in, const char* what) {
    std::vector<std::uint64_t> out;
    std::uint64_t v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw ValidationError(std::string("bad integer in ") + what);
    return out;
}

std::string edges_line(const BitBuffer& edges) {
    std::string s = "edges:";
    for (std::uint64_t j = 0; j < edges.size(); ++j)
        if (edges.test(j)) s += " " + std::to_string(j);
    return s;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> parse_lines(
    const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("tau:", 0) != 0)
        throw ValidationError("magtxt: first line must start with 'tau:'");
    std::istringstream tau_in(line.substr(4));
    auto sizes = parse_uints(tau_in, "tau line");
    if (!std::getline(in, line) || line.rfind("edges:", 0) != 0)
        throw ValidationError("magtxt: second line must start with 'edges:'");
    std::istringstream edge_in(line.substr(6));
    auto edges = parse_uints(edge_in, "edges line");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] <= edges[i - 1])
            throw ValidationError("magtxt: edge indices must be strictly ascending");
    return {std::move(sizes), std::move(edges)};
}

} // namespace

std::string to_magtxt(const SimpleMag& mag) {
    std::string s = "tau:";
    for (std::uint64_t sz : mag.tau().sizes()) s += " " + std::to_string(sz);
    s += "\n" + edges_line(mag.edges()) + "\n";
    return s;
}

SimpleMag from_magtxt(const std::string& text) {
    auto [sizes, edges] = parse_lines(text);
    return make_mag(CompanionTuple(std::move(sizes)), edges);
}

std::string to_magtxt(const ClassicalGraph& g) {
    std::string s = "tau: " + std::to_string(g.vertex_count());
    s += "\n" + edges_line(g.edges()) + "\n";
    return s;
}

ClassicalGraph graph_from_magtxt(const std::string& text) {
    auto [sizes, edges] = parse_lines(text);
    if (sizes.size() != 1)
        throw ValidationError("graph text must declare a single vertex count");
    const SimpleMag mag = make_mag(CompanionTuple(std::move(sizes)), edges);
    return ClassicalGraph(mag.tau().num_composite_vertices(), mag.edges());
}

void write_charbits(const std::filesystem::path& path, const BitBuffer& bits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    std::uint8_t header[8];
    for (int i = 0; i < 8; ++i) header[i] = std::uint8_t(bits.size() >> (56 - 8 * i));
    out.write(reinterpret_cast<const char*>(header), 8);
    out.write(reinterpret_cast<const char*>(bits.bytes().data()),
              std::streamsize(bits.bytes().size()));
    if (!out) throw IoError("write failed for " + path.string());
}

BitBuffer read_charbits(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::uint8_t header[8];
    if (!in.read(reinterpret_cast<char*>(header), 8))
        throw DecodeError("charbits: missing header in " + path.string());
    std::uint64_t nbits = 0;
    for (int i = 0; i < 8; ++i) nbits = (nbits << 8) | header[i];
    std::vector<std::uint8_t> bytes((nbits + 7) / 8);
    if (nbits > 0 &&
        !in.read(reinterpret_cast<char*>(bytes.data()), std::streamsize(bytes.size())))
        throw DecodeError("charbits: truncated payload in " + path.string());
    return BitBuffer::from_bytes(std::move(bytes), nbits);
}

void write_bitstream(const std::filesystem::path& path, const BitBuffer& bits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bits.bytes().data()),
              std::streamsize(bits.bytes().size()));
    if (!out) throw IoError("write failed for " + path.string());
}

BitBuffer read_bitstream(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw IoError("cannot open " + path.string());
    const auto size = in.tellg();
    in.seekg(0);
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size), 0);
    if (size > 0 && !in.read(reinterpret_cast<char*>(bytes.data()), size))
        throw IoError("read failed for " + path.string());
    const std::uint64_t nbits = 8 * std::uint64_t(bytes.size());
    return BitBuffer::from_bytes(std::move(bytes), nbits);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoError("write failed for " + path.string());
}

} // namespace magcodec
