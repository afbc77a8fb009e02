#include <doctest.h>

#include <filesystem>
#include <random>

#include "magcodec/codec.hpp"
#include "magcodec/textio.hpp"

using namespace magcodec;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("magcodec-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

} // namespace

TEST_CASE("magtxt round trip for MAGs") {
    const SimpleMag m = make_mag(CompanionTuple({3, 2}), {0, 7, 14});
    const std::string text = to_magtxt(m);
    CHECK(text == "tau: 3 2\nedges: 0 7 14\n");
    CHECK(from_magtxt(text) == m);
}

TEST_CASE("magtxt round trip for empty edge sets") {
    const SimpleMag m = make_mag(CompanionTuple({2, 1, 2}), {});
    CHECK(to_magtxt(m) == "tau: 2 1 2\nedges:\n");
    CHECK(from_magtxt(to_magtxt(m)) == m);
}

TEST_CASE("magtxt round trip for classical graphs") {
    const ClassicalGraph g(4, BitBuffer::from_string("101001"));
    CHECK(to_magtxt(g) == "tau: 4\nedges: 0 2 5\n");
    CHECK(graph_from_magtxt(to_magtxt(g)) == g);
}

TEST_CASE("magtxt parsing rejects malformed input") {
    CHECK_THROWS_AS(from_magtxt("edges: 0\n"), ValidationError);
    CHECK_THROWS_AS(from_magtxt("tau: 2 1\n"), ValidationError);
    CHECK_THROWS_AS(from_magtxt("tau: 2 x\nedges:\n"), ValidationError);
    CHECK_THROWS_AS(from_magtxt("tau: 2 2\nedges: 3 1\n"), ValidationError);  // not ascending
    CHECK_THROWS_AS(from_magtxt("tau: 2 2\nedges: 1 1\n"), ValidationError);  // duplicate
    CHECK_THROWS_AS(from_magtxt("tau: 2 2\nedges: 9\n"), ValidationError);    // out of range
    CHECK_THROWS_AS(graph_from_magtxt("tau: 2 2\nedges:\n"), ValidationError); // not order 1
}

TEST_CASE("charbits files carry an 8-byte big-endian bit length header") {
    TempDir tmp;
    const fs::path file = tmp.path / "x.charbits";
    const BitBuffer bits = BitBuffer::from_string("10100000001");
    write_charbits(file, bits);

    CHECK(fs::file_size(file) == 8 + 2);
    const std::string raw = read_text_file(file);
    CHECK(raw.substr(0, 8) == std::string("\0\0\0\0\0\0\0\x0B", 8));
    CHECK(read_charbits(file) == bits);
}

TEST_CASE("charbits round trips odd and empty lengths") {
    TempDir tmp;
    for (const char* s : {"", "1", "0110", "111111110"}) {
        const fs::path file = tmp.path / "t.charbits";
        const BitBuffer bits = BitBuffer::from_string(s);
        write_charbits(file, bits);
        CHECK(read_charbits(file) == bits);
    }
}

TEST_CASE("truncated charbits files are rejected") {
    TempDir tmp;
    const fs::path file = tmp.path / "cut.charbits";
    write_text_file(file, std::string("\0\0\0\0\0\0\0\x20", 8)); // claims 32 bits, no payload
    CHECK_THROWS_AS(read_charbits(file), DecodeError);
    write_text_file(file, "abc"); // not even a header
    CHECK_THROWS_AS(read_charbits(file), DecodeError);
}

TEST_CASE("bitstream files round trip self-delimiting streams") {
    TempDir tmp;
    const SimpleMag m = make_mag(CompanionTuple({2, 2}), {2, 3});
    const fs::path file = tmp.path / "m.mages";
    write_bitstream(file, encode_edge_set_string(m));
    // Reading returns whole bytes; the stream is self-delimiting, so the
    // decoder ignores the trailing pad bits.
    CHECK(decode_edge_set_string(read_bitstream(file)) == m);

    const fs::path tfile = tmp.path / "m.taubits";
    write_bitstream(tfile, encode_tau(m.tau()));
    CHECK(decode_tau(read_bitstream(tfile)) == m.tau());
}

TEST_CASE("missing files raise IoError") {
    CHECK_THROWS_AS(read_charbits("/nonexistent/path/x.charbits"), IoError);
    CHECK_THROWS_AS(read_bitstream("/nonexistent/path/x.mages"), IoError);
    CHECK_THROWS_AS(read_text_file("/nonexistent/path/x.magtxt"), IoError);
    CHECK_THROWS_AS(write_charbits("/nonexistent/path/x.charbits", BitBuffer()), IoError);
}

TEST_CASE("text files round trip") {
    TempDir tmp;
    const fs::path file = tmp.path / "t.txt";
    const std::string text = "tau: 2 1\nedges: 0\n";
    write_text_file(file, text);
    CHECK(read_text_file(file) == text);
}
