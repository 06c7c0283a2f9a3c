#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spheretri/triangulation.hpp"

namespace spheretri {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

/// One graph record: size byte n (4..255), then for each vertex its clockwise
/// neighbor list as 1-based bytes, 0-terminated. Record length is always
/// 1 + (6n-12) + n bytes.
std::string encode_planar_record(const Triangulation& t);

/// Decodes exactly one record; the bytes must contain nothing else.
Triangulation decode_planar_record(std::string_view record);

/// Whole-file encoding, optionally prefixed with ">>planar_code<<".
std::string encode_planar_code(std::span<const Triangulation> graphs, bool with_header);

/// Decodes a planar_code byte stream (optional header, any number of
/// records). Every graph is validated; errors carry the record index.
std::vector<Triangulation> decode_planar_code(std::string_view bytes);

} // namespace spheretri
