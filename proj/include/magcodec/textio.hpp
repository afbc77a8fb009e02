#pragma once

#include <filesystem>
#include <string>

#include "magcodec/bitstream.hpp"
#include "magcodec/isomorphism.hpp"
#include "magcodec/mag.hpp"

namespace magcodec {

// Canonical text format (".magtxt"):
//   line 1: "tau: n1 n2 ... np"
//   line 2: "edges: j1 j2 ... jk"   (ascending decimal linear edge indices)
// A classical graph uses the same format with a single size "tau: n".

std::string to_magtxt(const SimpleMag& mag);
SimpleMag from_magtxt(const std::string& text);

std::string to_magtxt(const ClassicalGraph& g);
ClassicalGraph graph_from_magtxt(const std::string& text);

// Binary containers. ".charbits": 8-byte big-endian bit length, then the
// packed bits. ".mages" and ".taubits": the self-delimiting streams, byte
// padded with zeros.

void write_charbits(const std::filesystem::path& path, const BitBuffer& bits);
BitBuffer read_charbits(const std::filesystem::path& path);

void write_bitstream(const std::filesystem::path& path, const BitBuffer& bits);
// Returns the file's bytes as a bit buffer of 8 * size bits; the streams
// are self-delimiting, so trailing pad bits are ignored by the decoders.
BitBuffer read_bitstream(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace magcodec
