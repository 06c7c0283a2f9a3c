#include "spheretri/census.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "spheretri/connectivity.hpp"

namespace spheretri {

namespace {

FourCycle normalize_cycle(std::array<int, 4> c) {
    int mi = 0;
    for (int i = 1; i < 4; ++i)
        if (c[i] < c[mi]) mi = i;
    FourCycle f{{c[mi], c[(mi + 1) % 4], c[(mi + 2) % 4], c[(mi + 3) % 4]}};
    if (f.vertices[3] < f.vertices[1]) std::swap(f.vertices[1], f.vertices[3]);
    return f;
}

// Bits of row(u) & row(v) that are strictly greater than u, in ascending
// order. A cycle is emitted only at the diagonal holding its smallest
// vertex, so each cycle appears exactly once.
void common_neighbors_above(const AdjacencyMasks& masks, int u, int v,
                            std::vector<int>& out) {
    out.clear();
    const auto& ru = masks.row(u);
    const auto& rv = masks.row(v);
    AdjacencyMasks::Row both;
    for (int w = 0; w < 4; ++w) both[w] = ru[w] & rv[w];
    for (int w = 0; w < u >> 6; ++w) both[w] = 0;
    both[u >> 6] &= ~((uint64_t{2} << (u & 63)) - 1);
    for (int w = 0; w < 4; ++w) {
        uint64_t bits = both[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
}

} // namespace

FourCycle four_cycle_from_diagonals(int u, int v, int x, int y) {
    return normalize_cycle({u, x, v, y});
}

std::vector<FourCycle> four_cycles(const Triangulation& t) {
    const int n = t.n();
    AdjacencyMasks masks(t);
    std::vector<FourCycle> out;
    std::vector<int> common;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            common_neighbors_above(masks, u, v, common);
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    // u is the smallest vertex and common[i] < common[j],
                    // so the sequence is already normalized.
                    FourCycle f{{u, common[i], v, common[j]}};
                    assert(f == normalize_cycle(f.vertices));
                    out.push_back(f);
                }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t count_4cycles(const Triangulation& t) {
    const int n = t.n();
    AdjacencyMasks masks(t);
    std::int64_t twice = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const std::int64_t k =
                AdjacencyMasks::intersection_size(masks.row(u), masks.row(v));
            twice += k * (k - 1) / 2;
        }
    assert(twice % 2 == 0);
    return twice / 2;
}

std::int64_t count_3cycles(const Triangulation& t) {
    const int n = t.n();
    AdjacencyMasks masks(t);
    std::int64_t triple = 0;
    for (int u = 0; u < n; ++u)
        for (int v : t.rotation(u))
            if (v > u)
                triple +=
                    AdjacencyMasks::intersection_size(masks.row(u), masks.row(v));
    assert(triple % 3 == 0);
    return triple / 3;
}

std::int64_t count_cycles_brute(const Triangulation& t, int k) {
    if (k != 3 && k != 4)
        throw std::invalid_argument("count_cycles_brute: k must be 3 or 4");
    const int n = t.n();
    AdjacencyMasks masks(t);
    std::int64_t total = 0;
    if (k == 3) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q)
                for (int r = q + 1; r < n; ++r)
                    if (masks.get(p, q) && masks.get(q, r) && masks.get(p, r))
                        ++total;
        return total;
    }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    const bool pq = masks.get(p, q), pr = masks.get(p, r),
                               ps = masks.get(p, s), qr = masks.get(q, r),
                               qs = masks.get(q, s), rs = masks.get(r, s);
                    if (pq && qr && rs && ps) ++total; // p-q-r-s
                    if (pq && qs && rs && pr) ++total; // p-q-s-r
                    if (pr && qr && qs && ps) ++total; // p-r-q-s
                }
    return total;
}

std::int64_t cycles_through_vertex(const Triangulation& t, int v) {
    const auto all = four_cycles(t);
    return std::count_if(all.begin(), all.end(),
                         [v](const FourCycle& f) { return f.contains(v); });
}

std::optional<FourCycle> edge_diamond(const Triangulation& t, int u, int v) {
    if (u == v || !t.adjacent(u, v)) return std::nullopt;
    const int a = t.next_neighbor(u, v);
    const int b = t.prev_neighbor(u, v);
    assert(a != b); // a face pair never shares both corners in a valid triangulation
    return four_cycle_from_diagonals(u, v, a, b);
}

std::vector<FourCycle> separating_4cycles(const Triangulation& t) {
    AdjacencyMasks masks(t);
    std::vector<FourCycle> out;
    for (const FourCycle& f : four_cycles(t))
        if (is_vertex_cut(t, masks, f.vertices)) out.push_back(f);
    return out;
}

DegreeProfile degree_profile(const Triangulation& t) {
    DegreeProfile p;
    p.n = t.n();
    p.count.assign(static_cast<std::size_t>(p.n), 0);
    for (int v = 0; v < p.n; ++v) ++p.count[static_cast<std::size_t>(t.degree(v))];
#ifndef NDEBUG
    int vertices = 0;
    int degree_sum = 0;
    for (int d = 0; d < p.n; ++d) {
        vertices += p.count[d];
        degree_sum += d * p.count[d];
    }
    assert(vertices == p.n);
    assert(degree_sum == 6 * p.n - 12);
#endif
    return p;
}

CycleCensus census(const Triangulation& t) {
    const int n = t.n();
    AdjacencyMasks masks(t);
    CycleCensus c;

    std::int64_t triple = 0;
    for (int u = 0; u < n; ++u)
        for (int v : t.rotation(u))
            if (v > u)
                triple +=
                    AdjacencyMasks::intersection_size(masks.row(u), masks.row(v));
    c.c3 = triple / 3;

    const auto cycles = four_cycles(t);
    c.c4 = static_cast<std::int64_t>(cycles.size());
    assert(c.c4 == count_4cycles(t));

    std::vector<FourCycle> diamonds;
    diamonds.reserve(static_cast<std::size_t>(t.edge_count()));
    for (int u = 0; u < n; ++u)
        for (int v : t.rotation(u))
            if (v > u) diamonds.push_back(*edge_diamond(t, u, v));
    std::sort(diamonds.begin(), diamonds.end());
    diamonds.erase(std::unique(diamonds.begin(), diamonds.end()), diamonds.end());
    c.c4_diamond = static_cast<std::int64_t>(diamonds.size());

    c.per_vertex_c4.assign(static_cast<std::size_t>(n), 0);
    for (const FourCycle& f : cycles) {
        for (int v : f.vertices) ++c.per_vertex_c4[static_cast<std::size_t>(v)];
        if (is_vertex_cut(t, masks, f.vertices)) ++c.c4_separating;
    }
    return c;
}

} // namespace spheretri
