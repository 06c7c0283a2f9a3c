#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "spheretri/canonical.hpp"
#include "spheretri/triangulation.hpp"

namespace spheretri {

/// A 4-cycle, identified by its edge set: the vertex sequence around the
/// cycle, normalized to start at the smallest vertex with the smaller of its
/// two cycle neighbors second. Chords do not matter; the same four vertices
/// can carry up to three distinct cycles.
struct FourCycle {
    std::array<int, 4> vertices;

    auto operator<=>(const FourCycle&) const = default;
    bool contains(int v) const {
        return vertices[0] == v || vertices[1] == v || vertices[2] == v ||
               vertices[3] == v;
    }
};

/// The normalized cycle u-x-v-y ({u,v} and {x,y} are its diagonals).
FourCycle four_cycle_from_diagonals(int u, int v, int x, int y);

/// Every 4-cycle exactly once, sorted. A cycle is found at its diagonal pair
/// {u,v} and a 2-subset {x,y} of the common neighborhood N(u) ∩ N(v).
std::vector<FourCycle> four_cycles(const Triangulation& t);

/// Number of 4-cycles: half of Σ over unordered vertex pairs {u,v} of
/// C(|N(u) ∩ N(v)|, 2), since each cycle is seen from both of its diagonals.
std::int64_t count_4cycles(const Triangulation& t);

/// Number of triangles (facial or not): Σ over edges of the common
/// neighborhood size, divided by 3.
std::int64_t count_3cycles(const Triangulation& t);

/// Independent counting oracle: scans all k-subsets (k = 3 or 4) and counts
/// the spanning k-cycles inside each one (a 4-subset carries up to three).
/// Throws std::invalid_argument for other k.
std::int64_t count_cycles_brute(const Triangulation& t, int k);

/// Number of 4-cycles whose vertex set contains v.
std::int64_t cycles_through_vertex(const Triangulation& t, int v);

/// The cycle u-a-v-b where a, b are the apexes of the two faces on edge uv
/// (uv itself becomes a chord). Engaged for every edge of a valid
/// triangulation — the apexes never coincide; nullopt only if uv is not an
/// edge. The map edge -> diamond is injective for n >= 5; in K4 opposite
/// edges share their diamond, so its 6 edges yield 3 distinct cycles.
std::optional<FourCycle> edge_diamond(const Triangulation& t, int u, int v);

/// The 4-cycles whose vertex set is a vertex cut, sorted. Subset of
/// four_cycles(t); empty whenever n <= 5 (too few vertices remain).
std::vector<FourCycle> separating_4cycles(const Triangulation& t);

/// Vertex counts per degree. count[k] = number of vertices of degree k;
/// entries below 3 are always zero.
struct DegreeProfile {
    int n = 0;
    std::vector<int> count; // indexed by degree, size n

    int at(int k) const {
        return (k >= 0 && k < static_cast<int>(count.size())) ? count[k] : 0;
    }
    bool operator==(const DegreeProfile&) const = default;
};

DegreeProfile degree_profile(const Triangulation& t);

/// Full cycle census of one triangulation.
struct CycleCensus {
    std::int64_t c3 = 0;
    std::int64_t c4 = 0;
    std::int64_t c4_diamond = 0;    // 4-cycles that are a diamond of >= 1 edge
    std::int64_t c4_separating = 0; // 4-cycles whose vertex set is a cut
    std::vector<std::int64_t> per_vertex_c4;
};

CycleCensus census(const Triangulation& t);

/// Minimum 4-cycle count over all n-vertex triangulations, with every
/// minimizer's canonical code.
struct ExtremalRecord {
    int n = 0;
    std::int64_t g_value = 0;
    std::int64_t minimizer_count = 0;
    std::vector<CanonicalCode> minimizer_codes;
};

} // namespace spheretri
