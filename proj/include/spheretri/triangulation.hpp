#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spheretri/errors.hpp"

namespace spheretri {

/// A sphere triangulation (maximal planar graph) stored as a rotation system:
/// for every vertex, the cyclic clockwise order of its neighbors. Instances
/// are immutable; `validate` is the only way to construct one, so every
/// Triangulation in the program satisfies
///   - symmetric, simple adjacency
///   - every face orbit of the rotation system is a triangle, 2n-4 of them
///   - connected, e = 3n-6.
class Triangulation {
public:
    /// Checks all invariants of `raw` (per-vertex neighbor sequences) and
    /// returns the triangulation. Throws ValidationError otherwise.
    static Triangulation validate(const std::vector<std::vector<int>>& raw);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(data_.size()) / 2; }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
    std::span<const int> rotation(int v) const {
        return {data_.data() + offsets_[v], static_cast<size_t>(degree(v))};
    }

    bool adjacent(int u, int v) const {
        for (int x : rotation(u))
            if (x == v) return true;
        return false;
    }

    /// Position of `v` in the rotation of `u`; -1 if not adjacent.
    int rotation_index(int u, int v) const {
        auto rot = rotation(u);
        for (size_t i = 0; i < rot.size(); ++i)
            if (rot[i] == v) return static_cast<int>(i);
        return -1;
    }

    /// Neighbor after / before `v` in the cyclic rotation of `u`.
    int next_neighbor(int u, int v) const;
    int prev_neighbor(int u, int v) const;

    /// Copy with vertex i renamed perm[i] (cyclic orders kept).
    Triangulation relabeled(const std::vector<int>& perm) const;
    /// Reflected embedding: every rotation reversed.
    Triangulation mirrored() const;

    std::vector<std::vector<int>> rotation_lists() const;

    int min_degree() const;
    int max_degree() const;

private:
    Triangulation() = default;

    int n_ = 0;
    std::vector<int32_t> offsets_; // n+1 entries into data_
    std::vector<int32_t> data_;    // concatenated rotations, length 2e
};

/// One triangular face, vertices in traversal order, normalized to start at
/// the smallest vertex (cyclic order preserved).
struct Face {
    std::array<int, 3> vertices;
    bool operator==(const Face&) const = default;
};

/// All 2n-4 faces via the successor rule: from directed edge (u,v) the next
/// edge is (v,w) with w immediately preceding u in the rotation of v.
std::vector<Face> faces(const Triangulation& t);

/// The rotation sequence of v, checked to be a cycle in t (consecutive
/// entries adjacent, wraparound included). Throws InducedCycleBroken if not;
/// cannot happen for a validated triangulation.
std::vector<int> neighborhood_cycle(const Triangulation& t, int v);

/// 256-bit adjacency rows for fast set operations; row(v) bit u <=> u ~ v.
class AdjacencyMasks {
public:
    using Row = std::array<uint64_t, 4>;

    explicit AdjacencyMasks(const Triangulation& t);

    const Row& row(int v) const { return rows_[v]; }
    static int intersection_size(const Row& a, const Row& b);
    bool get(int u, int v) const {
        return (rows_[u][v >> 6] >> (v & 63)) & 1u;
    }

private:
    std::vector<Row> rows_;
};

} // namespace spheretri
