#include <string>
#include <vector>

#include "doctest.h"
#include "spheretri/generate.hpp"
#include "spheretri/graph6.hpp"
#include "spheretri/planar_code.hpp"
#include "test_util.hpp"

using namespace spheretri;

namespace {

// Minimal independent graph6 reader for n <= 62: returns the adjacency
// matrix encoded by one line.
std::vector<std::vector<bool>> decode_graph6_line(const std::string& line) {
    REQUIRE(!line.empty());
    const int n = line[0] - 63;
    REQUIRE(n >= 0);
    REQUIRE(n <= 62);
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    std::size_t bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit) {
            const std::size_t byte = 1 + bit / 6;
            REQUIRE(byte < line.size());
            const int chunk = line[byte] - 63;
            REQUIRE(chunk >= 0);
            REQUIRE(chunk < 64);
            if ((chunk >> (5 - bit % 6)) & 1) {
                adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
                adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
            }
        }
    REQUIRE(line.size() == 1 + (bit + 5) / 6);
    return adj;
}

std::string bytes(std::initializer_list<int> values) {
    std::string s;
    for (int b : values) s.push_back(static_cast<char>(b));
    return s;
}

const std::string k4_record = bytes({4,
                                     2, 3, 4, 0,
                                     3, 1, 4, 0,
                                     1, 2, 4, 0,
                                     1, 3, 2, 0});

} // namespace

TEST_CASE("planar_code record bytes for k4") {
    const std::string rec = encode_planar_record(k4());
    CHECK(rec.size() == 17); // 1 + (6n-12) + n
    CHECK(rec == k4_record);
    CHECK(decode_planar_record(rec).rotation_lists() == test::k4_lists());
}

TEST_CASE("record round trip for every class up to n=8") {
    for (int n = 4; n <= 8; ++n)
        for (const Triangulation& t : enumerate(n)) {
            const std::string rec = encode_planar_record(t);
            CHECK(rec.size() == 1 + 7 * static_cast<std::size_t>(n) - 12);
            CHECK(decode_planar_record(rec).rotation_lists() ==
                  t.rotation_lists());
        }
}

TEST_CASE("whole-file encoding with and without header") {
    const auto level = enumerate(7);
    const std::string with = encode_planar_code(level, true);
    const std::string without = encode_planar_code(level, false);
    CHECK(with == std::string(kPlanarCodeHeader) + without);
    for (const std::string* file : {&with, &without}) {
        const auto back = decode_planar_code(*file);
        REQUIRE(back.size() == level.size());
        for (std::size_t i = 0; i < back.size(); ++i)
            CHECK(back[i].rotation_lists() == level[i].rotation_lists());
    }
    CHECK(decode_planar_code("").empty());
    CHECK(decode_planar_code(kPlanarCodeHeader).empty());
}

TEST_CASE("format error taxonomy") {
    SUBCASE("bad header") {
        try {
            decode_planar_code(">>planar_kode<<" + k4_record);
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.kind() == FormatErrorKind::BadHeader);
        }
    }
    SUBCASE("truncated record") {
        try {
            decode_planar_code(k4_record.substr(0, k4_record.size() - 1));
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.kind() == FormatErrorKind::TruncatedRecord);
            CHECK(e.record_index() == 0);
        }
        CHECK_THROWS_AS(decode_planar_record(""), FormatError);
        CHECK_THROWS_AS(decode_planar_record(k4_record + k4_record),
                        FormatError); // trailing bytes
    }
    SUBCASE("multi-byte size variant") {
        try {
            decode_planar_code(std::string(1, '\0') + k4_record);
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.kind() == FormatErrorKind::UnsupportedVariant);
        }
    }
    SUBCASE("record that is no triangulation") {
        // 4 vertices arranged as a square: symmetric but not a triangulation
        const std::string square =
            bytes({4, 2, 4, 0, 1, 3, 0, 2, 4, 0, 3, 1, 0});
        try {
            decode_planar_code(k4_record + square);
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.kind() == FormatErrorKind::ValidationFailed);
            CHECK(e.record_index() == 1);
        }
    }
    SUBCASE("too many vertices to encode") {
        CHECK_THROWS_AS(encode_planar_record(stacked_triangulation(300)),
                        FormatError);
    }
}

TEST_CASE("graph6 encoding") {
    CHECK(encode_graph6(k4()) == "C~");
    for (int n = 4; n <= 7; ++n)
        for (const Triangulation& t : enumerate(n)) {
            const auto adj = decode_graph6_line(encode_graph6(t));
            REQUIRE(static_cast<int>(adj.size()) == t.n());
            for (int u = 0; u < t.n(); ++u)
                for (int v = 0; v < t.n(); ++v)
                    CHECK(adj[static_cast<std::size_t>(u)]
                             [static_cast<std::size_t>(v)] == t.adjacent(u, v));
        }
    const std::string oct = encode_graph6(test::octahedron());
    CHECK(oct.front() == 'E'); // 63 + 6
    CHECK(oct.size() == 1 + (15 + 5) / 6);
}
