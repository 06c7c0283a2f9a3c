#include "spheretri/triangulation.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

namespace spheretri {

namespace {

std::string vertex_msg(const char* what, int v) {
    return std::string(what) + " at vertex " + std::to_string(v);
}

} // namespace

Triangulation Triangulation::validate(const std::vector<std::vector<int>>& raw) {
    const int n = static_cast<int>(raw.size());
    if (n < 4)
        throw ValidationError(ValidationErrorKind::TooFewVertices,
                              "need at least 4 vertices, got " + std::to_string(n));

    // simple: indices in range, no loops, no repeated neighbor
    for (int v = 0; v < n; ++v) {
        std::vector<char> seen(n, 0);
        for (int u : raw[v]) {
            if (u < 0 || u >= n)
                throw ValidationError(ValidationErrorKind::NotSimple,
                                      vertex_msg("neighbor index out of range", v));
            if (u == v)
                throw ValidationError(ValidationErrorKind::NotSimple, vertex_msg("self-loop", v));
            if (seen[u])
                throw ValidationError(ValidationErrorKind::NotSimple,
                                      vertex_msg("repeated neighbor", v));
            seen[u] = 1;
        }
    }

    Triangulation t;
    t.n_ = n;
    t.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v)
        t.offsets_[v + 1] = t.offsets_[v] + static_cast<int32_t>(raw[v].size());
    t.data_.reserve(t.offsets_[n]);
    for (int v = 0; v < n; ++v)
        t.data_.insert(t.data_.end(), raw[v].begin(), raw[v].end());

    for (int v = 0; v < n; ++v)
        for (int u : t.rotation(v))
            if (!t.adjacent(u, v))
                throw ValidationError(ValidationErrorKind::NotSymmetric,
                                      "edge " + std::to_string(v) + "-" + std::to_string(u) +
                                          " listed only once");

    // face orbits: every directed edge on exactly one orbit, all orbits triangles
    const long total_dir = t.offsets_[n];
    std::vector<char> used(total_dir, 0);
    long orbit_count = 0;
    for (int u = 0; u < n; ++u) {
        auto rot = t.rotation(u);
        for (size_t k = 0; k < rot.size(); ++k) {
            long id = t.offsets_[u] + static_cast<long>(k);
            if (used[id]) continue;
            ++orbit_count;
            int cu = u, cv = rot[k];
            int len = 0;
            do {
                int pos = t.rotation_index(cv, cu); // symmetric, so pos >= 0
                used[t.offsets_[cu] + t.rotation_index(cu, cv)] = 1;
                int d = t.degree(cv);
                int w = t.rotation(cv)[(pos + d - 1) % d]; // predecessor of cu at cv
                cu = cv;
                cv = w;
                ++len;
            } while (!(cu == u && cv == rot[k]) && len <= 4);
            if (len != 3)
                throw ValidationError(ValidationErrorKind::NonTriangularFace,
                                      "face orbit through " + std::to_string(u) + "-" +
                                          std::to_string(rot[k]) + " has length != 3");
        }
    }

    // connectivity
    {
        std::vector<char> visited(n, 0);
        std::vector<int> stack{0};
        visited[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : t.rotation(v))
                if (!visited[u]) {
                    visited[u] = 1;
                    ++count;
                    stack.push_back(u);
                }
        }
        if (count != n)
            throw ValidationError(ValidationErrorKind::Disconnected,
                                  std::to_string(n - count) + " vertices unreachable from 0");
    }

    // e = 3n-6 rules out higher-genus rotation systems whose faces are all triangles
    if (total_dir != 2L * (3L * n - 6))
        throw ValidationError(ValidationErrorKind::WrongEdgeCount,
                              "edge count " + std::to_string(total_dir / 2) + " != 3n-6");
    assert(orbit_count == 2L * n - 4);
    for (int v = 0; v < n; ++v)
        assert(t.degree(v) >= 3);

    return t;
}

int Triangulation::next_neighbor(int u, int v) const {
    int pos = rotation_index(u, v);
    assert(pos >= 0);
    auto rot = rotation(u);
    return rot[(pos + 1) % rot.size()];
}

int Triangulation::prev_neighbor(int u, int v) const {
    int pos = rotation_index(u, v);
    assert(pos >= 0);
    auto rot = rotation(u);
    return rot[(pos + rot.size() - 1) % rot.size()];
}

Triangulation Triangulation::relabeled(const std::vector<int>& perm) const {
    std::vector<std::vector<int>> raw(n_);
    for (int v = 0; v < n_; ++v) {
        auto& out = raw[perm[v]];
        out.reserve(degree(v));
        for (int u : rotation(v))
            out.push_back(perm[u]);
    }
    return validate(raw);
}

Triangulation Triangulation::mirrored() const {
    std::vector<std::vector<int>> raw = rotation_lists();
    for (auto& r : raw)
        std::reverse(r.begin(), r.end());
    return validate(raw);
}

std::vector<std::vector<int>> Triangulation::rotation_lists() const {
    std::vector<std::vector<int>> raw(n_);
    for (int v = 0; v < n_; ++v) {
        auto rot = rotation(v);
        raw[v].assign(rot.begin(), rot.end());
    }
    return raw;
}

int Triangulation::min_degree() const {
    int m = n_;
    for (int v = 0; v < n_; ++v)
        m = std::min(m, degree(v));
    return m;
}

int Triangulation::max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v)
        m = std::max(m, degree(v));
    return m;
}

std::vector<Face> faces(const Triangulation& t) {
    const int n = t.n();
    std::vector<Face> result;
    result.reserve(2 * n - 4);
    std::vector<char> used(6L * n - 12, 0);
    long base = 0;
    std::vector<long> offset(n);
    for (int v = 0; v < n; ++v) {
        offset[v] = base;
        base += t.degree(v);
    }
    for (int u = 0; u < n; ++u) {
        auto rot = t.rotation(u);
        for (size_t k = 0; k < rot.size(); ++k) {
            if (used[offset[u] + k]) continue;
            std::array<int, 3> tri{};
            int cu = u, cv = rot[k];
            for (int step = 0; step < 3; ++step) {
                tri[step] = cu;
                used[offset[cu] + t.rotation_index(cu, cv)] = 1;
                int pos = t.rotation_index(cv, cu);
                int d = t.degree(cv);
                int w = t.rotation(cv)[(pos + d - 1) % d];
                cu = cv;
                cv = w;
            }
            // rotate so the smallest vertex leads
            int s = 0;
            if (tri[1] < tri[s]) s = 1;
            if (tri[2] < tri[s]) s = 2;
            result.push_back(Face{{tri[s], tri[(s + 1) % 3], tri[(s + 2) % 3]}});
        }
    }
    return result;
}

std::vector<int> neighborhood_cycle(const Triangulation& t, int v) {
    auto rot = t.rotation(v);
    std::vector<int> cycle(rot.begin(), rot.end());
    const size_t d = cycle.size();
    for (size_t i = 0; i < d; ++i) {
        int a = cycle[i], b = cycle[(i + 1) % d];
        if (!t.adjacent(a, b))
            throw InducedCycleBroken("rotation of " + std::to_string(v) +
                                     " is not a cycle: " + std::to_string(a) + " !~ " +
                                     std::to_string(b));
    }
    return cycle;
}

AdjacencyMasks::AdjacencyMasks(const Triangulation& t) : rows_(t.n(), Row{}) {
    for (int v = 0; v < t.n(); ++v)
        for (int u : t.rotation(v))
            rows_[v][u >> 6] |= uint64_t{1} << (u & 63);
}

int AdjacencyMasks::intersection_size(const Row& a, const Row& b) {
    int total = 0;
    for (int i = 0; i < 4; ++i)
        total += std::popcount(a[i] & b[i]);
    return total;
}

} // namespace spheretri
