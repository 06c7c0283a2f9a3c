#include "spheretri/planar_code.hpp"

#include <string>

namespace spheretri {

namespace {

// Reads one record starting at bytes[offset]. Advances offset past it.
Triangulation read_record(std::string_view bytes, size_t& offset, long index) {
    const size_t size = bytes.size();
    const int n = static_cast<unsigned char>(bytes[offset]);
    if (n == 0)
        throw FormatError(FormatErrorKind::UnsupportedVariant,
                          "multi-byte planar_code sizes are not supported", index);
    ++offset;

    std::vector<std::vector<int>> raw(n);
    for (int v = 0; v < n; ++v) {
        for (;;) {
            if (offset >= size)
                throw FormatError(FormatErrorKind::TruncatedRecord,
                                  "record ends inside neighbor list of vertex " +
                                      std::to_string(v + 1),
                                  index);
            const int b = static_cast<unsigned char>(bytes[offset++]);
            if (b == 0) break;
            raw[v].push_back(b - 1); // to 0-based
        }
    }

    long listed = 0;
    for (const auto& r : raw)
        listed += static_cast<long>(r.size());
    if (listed != 6L * n - 12)
        throw FormatError(FormatErrorKind::ValidationFailed,
                          "record has " + std::to_string(listed) +
                              " neighbor entries, expected 6n-12 = " + std::to_string(6L * n - 12),
                          index);

    try {
        return Triangulation::validate(raw);
    } catch (const ValidationError& e) {
        throw FormatError(FormatErrorKind::ValidationFailed,
                          "record " + std::to_string(index) + ": " + e.what(), index);
    }
}

} // namespace

std::string encode_planar_record(const Triangulation& t) {
    if (t.n() > 255)
        throw FormatError(FormatErrorKind::TooManyVertices,
                          "planar_code records hold at most 255 vertices");
    std::string out;
    out.reserve(1 + 7 * t.n());
    out.push_back(static_cast<char>(t.n()));
    for (int v = 0; v < t.n(); ++v) {
        for (int u : t.rotation(v))
            out.push_back(static_cast<char>(u + 1));
        out.push_back('\0');
    }
    return out;
}

Triangulation decode_planar_record(std::string_view record) {
    if (record.empty())
        throw FormatError(FormatErrorKind::TruncatedRecord, "empty record");
    size_t offset = 0;
    Triangulation t = read_record(record, offset, 0);
    if (offset != record.size())
        throw FormatError(FormatErrorKind::TruncatedRecord, "trailing bytes after record");
    return t;
}

std::string encode_planar_code(std::span<const Triangulation> graphs, bool with_header) {
    std::string out;
    if (with_header) out.append(kPlanarCodeHeader);
    for (const auto& t : graphs)
        out.append(encode_planar_record(t));
    return out;
}

std::vector<Triangulation> decode_planar_code(std::string_view bytes) {
    size_t offset = 0;
    // the header is optional but must be exact when a '>' leads the stream
    if (!bytes.empty() && bytes.front() == '>') {
        if (bytes.substr(0, kPlanarCodeHeader.size()) != kPlanarCodeHeader)
            throw FormatError(FormatErrorKind::BadHeader, "malformed planar_code header");
        offset = kPlanarCodeHeader.size();
    }
    std::vector<Triangulation> graphs;
    while (offset < bytes.size())
        graphs.push_back(read_record(bytes, offset, static_cast<long>(graphs.size())));
    return graphs;
}

} // namespace spheretri
