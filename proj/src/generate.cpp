#include "spheretri/generate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>

#include "spheretri/errors.hpp"

namespace spheretri {

namespace {

// Runs body(0..count-1) on up to `threads` workers (including the calling
// thread). The first exception thrown by any worker stops the rest and is
// rethrown here, so callers see ordinary exception semantics.
template <typename Fn>
void run_parallel(std::size_t count, int threads, Fn&& body) {
    std::size_t workers =
        std::min<std::size_t>(std::max(threads, 1), count == 0 ? 1 : count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto drain = [&] {
        for (;;) {
            if (stop.load(std::memory_order_relaxed)) return;
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                stop.store(true, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 0; w + 1 < workers; ++w) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace

Triangulation k4() {
    return Triangulation::validate({{1, 2, 3}, {2, 0, 3}, {0, 1, 3}, {0, 2, 1}});
}

Triangulation vertex_split(const Triangulation& t, int w, int a, int b) {
    if (w < 0 || w >= t.n()) throw InvalidSplit("split vertex out of range");
    if (a == b) throw InvalidSplit("split anchors must be distinct");
    const int i = t.rotation_index(w, a);
    const int j = t.rotation_index(w, b);
    if (i < 0 || j < 0)
        throw InvalidSplit("split anchors must be neighbors of the split vertex");

    const auto rot_w = t.rotation(w);
    const int d = static_cast<int>(rot_w.size());
    const int w1 = w;
    const int w2 = t.n();

    // Rotation arc a..b (inclusive) goes to w1, the complement b..a to w2.
    std::vector<int> arc1, arc2;
    for (int k = i;; k = (k + 1) % d) {
        arc1.push_back(rot_w[k]);
        if (k == j) break;
    }
    for (int k = j;; k = (k + 1) % d) {
        arc2.push_back(rot_w[k]);
        if (k == i) break;
    }

    auto lists = t.rotation_lists();
    lists.emplace_back();
    lists[w1] = arc1;
    lists[w1].push_back(w2);
    lists[w2] = arc2;
    lists[w2].push_back(w1);

    // The interior of arc2 now sees w2 where it saw w.
    for (std::size_t k = 1; k + 1 < arc2.size(); ++k) {
        auto& rot = lists[arc2[k]];
        *std::find(rot.begin(), rot.end(), w) = w2;
    }
    // The anchors see both halves: (w1, w2) at a, (w2, w1) at b, each pair in
    // the slot w occupied.
    {
        auto& rot = lists[a];
        auto it = std::find(rot.begin(), rot.end(), w);
        rot.insert(it + 1, w2);
    }
    {
        auto& rot = lists[b];
        auto it = std::find(rot.begin(), rot.end(), w);
        *it = w2;
        rot.insert(it + 1, w1);
    }
    return Triangulation::validate(lists);
}

std::vector<Triangulation> expand_children(const Triangulation& t) {
    std::vector<Triangulation> out;
    for (int w = 0; w < t.n(); ++w) {
        const auto rot = t.rotation(w);
        for (std::size_t i = 0; i < rot.size(); ++i)
            for (std::size_t j = i + 1; j < rot.size(); ++j)
                out.push_back(vertex_split(t, w, rot[i], rot[j]));
    }
    return out;
}

Triangulation insert_into_face(const Triangulation& t, const Face& f) {
    const int a = f.vertices[0];
    const int b = f.vertices[1];
    const int c = f.vertices[2];
    if (!t.adjacent(a, b) || t.next_neighbor(a, b) != c)
        throw std::invalid_argument("insert_into_face: not a face of the triangulation");

    auto lists = t.rotation_lists();
    const int v = t.n();
    auto insert_before = [&lists, v](int host, int anchor) {
        auto& rot = lists[host];
        rot.insert(std::find(rot.begin(), rot.end(), anchor), v);
    };
    // The face corner at each host splits in two; v lands between the other
    // two face vertices.
    insert_before(a, c);
    insert_before(b, a);
    insert_before(c, b);
    lists.push_back({a, b, c});
    return Triangulation::validate(lists);
}

Triangulation stacked_triangulation(int n) {
    if (n < 4) throw std::invalid_argument("stacked_triangulation: n must be >= 4");
    Triangulation t = k4();
    while (t.n() < n) t = insert_into_face(t, faces(t)[0]);
    return t;
}

bool flippable(const Triangulation& t, int u, int v) {
    if (u == v || !t.adjacent(u, v)) return false;
    const int x = t.next_neighbor(u, v);
    const int y = t.prev_neighbor(u, v);
    return x != y && !t.adjacent(x, y);
}

Triangulation diagonal_flip(const Triangulation& t, int u, int v) {
    if (u == v || !t.adjacent(u, v)) throw NotFlippable("diagonal_flip: uv is not an edge");
    const int x = t.next_neighbor(u, v); // apex of the face on (u,v)
    const int y = t.prev_neighbor(u, v); // apex of the face on (v,u)
    assert(x != y);
    if (t.adjacent(x, y)) throw NotFlippable("diagonal_flip: diagonal already present");

    auto lists = t.rotation_lists();
    auto& rot_u = lists[u];
    rot_u.erase(std::find(rot_u.begin(), rot_u.end(), v));
    auto& rot_v = lists[v];
    rot_v.erase(std::find(rot_v.begin(), rot_v.end(), u));
    auto& rot_x = lists[x];
    rot_x.insert(std::find(rot_x.begin(), rot_x.end(), u) + 1, y);
    auto& rot_y = lists[y];
    rot_y.insert(std::find(rot_y.begin(), rot_y.end(), v) + 1, x);
    return Triangulation::validate(lists);
}

namespace {

// Levels 4..n of the split tree, each level deduplicated by canonical code
// and sorted by it.
std::vector<std::vector<Triangulation>> levels_up_to(int n, const GenLimits& limits) {
    if (n < 4) throw std::invalid_argument("enumerate: n must be >= 4");
    if (n > limits.max_n)
        throw LimitExceeded("enumerate: n exceeds the configured max_n");

    std::vector<std::vector<Triangulation>> levels(static_cast<std::size_t>(n) + 1);
    // store the canonical representative, like every later level
    levels[4].push_back(decode_canonical(canonical_code(k4())));
    for (int m = 5; m <= n; ++m) {
        const auto& parents = levels[m - 1];
        std::unordered_set<std::string> seen;
        std::mutex mutex;
        run_parallel(parents.size(), limits.threads, [&](std::size_t p) {
            const Triangulation& parent = parents[p];
            std::vector<std::string> local;
            const int pn = parent.n();
            for (int w = 0; w < pn; ++w) {
                const auto rot = parent.rotation(w);
                for (std::size_t i = 0; i < rot.size(); ++i)
                    for (std::size_t j = i + 1; j < rot.size(); ++j)
                        local.push_back(
                            canonical_code(vertex_split(parent, w, rot[i], rot[j])).bytes);
            }
            std::lock_guard lock(mutex);
            for (auto& code : local) {
                seen.insert(std::move(code));
                if (seen.size() > limits.class_budget)
                    throw LimitExceeded("enumerate: level exceeds the class budget");
            }
        });
        std::vector<std::string> codes(seen.begin(), seen.end());
        seen.clear();
        std::sort(codes.begin(), codes.end());
        auto& level = levels[m];
        level.reserve(codes.size());
        for (auto& code : codes)
            level.push_back(decode_canonical(CanonicalCode{std::move(code)}));
    }
    return levels;
}

} // namespace

std::vector<Triangulation> enumerate(int n, const GenLimits& limits) {
    auto levels = levels_up_to(n, limits);
    return std::move(levels[n]);
}

std::vector<CanonicalCode> flip_closure(const Triangulation& seed, const GenLimits& limits) {
    std::unordered_set<std::string> visited;
    std::vector<Triangulation> frontier;
    {
        CanonicalCode start = canonical_code(seed);
        frontier.push_back(decode_canonical(start));
        visited.insert(std::move(start.bytes));
    }
    std::mutex mutex;
    while (!frontier.empty()) {
        std::vector<std::string> discovered;
        run_parallel(frontier.size(), limits.threads, [&](std::size_t idx) {
            const Triangulation& t = frontier[idx];
            std::vector<std::string> local;
            for (int u = 0; u < t.n(); ++u)
                for (int v : t.rotation(u)) {
                    if (v < u || !flippable(t, u, v)) continue;
                    local.push_back(canonical_code(diagonal_flip(t, u, v)).bytes);
                }
            std::lock_guard lock(mutex);
            for (auto& code : local) {
                auto [it, inserted] = visited.insert(std::move(code));
                if (!inserted) continue;
                if (visited.size() > limits.class_budget)
                    throw LimitExceeded("flip_closure: class budget exceeded");
                discovered.push_back(*it);
            }
        });
        frontier.clear();
        frontier.reserve(discovered.size());
        for (auto& code : discovered)
            frontier.push_back(decode_canonical(CanonicalCode{std::move(code)}));
    }
    std::vector<CanonicalCode> out;
    out.reserve(visited.size());
    for (const auto& code : visited) out.push_back(CanonicalCode{code});
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<Triangulation>& Catalog::at(int n) const {
    if (n < 4 || n > max_n())
        throw std::out_of_range("Catalog::at: n outside the built range");
    return by_n[static_cast<std::size_t>(n)];
}

Catalog build_catalog(int max_n, const GenLimits& limits) {
    Catalog catalog;
    catalog.by_n = levels_up_to(max_n, limits);
    return catalog;
}

} // namespace spheretri
