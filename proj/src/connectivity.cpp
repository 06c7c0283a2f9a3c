#include "spheretri/connectivity.hpp"

#include <bit>

namespace spheretri {

namespace {

using Row = AdjacencyMasks::Row;

bool row_empty(const Row& r) { return (r[0] | r[1] | r[2] | r[3]) == 0; }

int lowest_bit(const Row& r) {
    for (int w = 0; w < 4; ++w)
        if (r[w]) return w * 64 + std::countr_zero(r[w]);
    return -1;
}

} // namespace

bool is_vertex_cut(const Triangulation& t, const AdjacencyMasks& masks,
                   std::span<const int> cut) {
    const int n = t.n();
    Row alive{};
    for (int v = 0; v < n; ++v)
        alive[v >> 6] |= uint64_t{1} << (v & 63);
    for (int v : cut)
        alive[v >> 6] &= ~(uint64_t{1} << (v & 63));
    if (row_empty(alive)) return false; // no vertices left: fewer than 2 components

    Row visited{};
    int start = lowest_bit(alive);
    visited[start >> 6] |= uint64_t{1} << (start & 63);
    Row frontier = visited;
    while (!row_empty(frontier)) {
        Row next{};
        for (int w = 0; w < 4; ++w) {
            uint64_t bits = frontier[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const Row& r = masks.row(v);
                for (int i = 0; i < 4; ++i)
                    next[i] |= r[i];
            }
        }
        for (int i = 0; i < 4; ++i) {
            next[i] &= alive[i] & ~visited[i];
            visited[i] |= next[i];
        }
        frontier = next;
    }
    for (int i = 0; i < 4; ++i)
        if (visited[i] != alive[i]) return true;
    return false;
}

bool is_vertex_cut(const Triangulation& t, std::span<const int> cut) {
    AdjacencyMasks masks(t);
    return is_vertex_cut(t, masks, cut);
}

int vertex_connectivity(const Triangulation& t) {
    const int n = t.n();
    AdjacencyMasks masks(t);
    int cut3[3];
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                cut3[0] = a;
                cut3[1] = b;
                cut3[2] = c;
                if (is_vertex_cut(t, masks, cut3)) return 3;
            }
    if (n == 4) return 3; // K4: no cut at all, kappa = n-1
    int cut4[4];
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    cut4[0] = a;
                    cut4[1] = b;
                    cut4[2] = c;
                    cut4[3] = d;
                    if (is_vertex_cut(t, masks, cut4)) return 4;
                }
    return 5;
}

} // namespace spheretri
