#include "spheretri/canonical.hpp"

#include <cassert>
#include <cstdio>
#include <stdexcept>

#include "spheretri/planar_code.hpp"

namespace spheretri {

namespace {

// Scratch shared by all serializations of one canonical_code call.
struct Workspace {
    std::vector<int> label;     // vertex -> BFS label (1-based), 0 = unseen
    std::vector<int> order;     // vertices in label order
    std::vector<int> entry;     // rotation position the scan of a vertex starts at
    std::vector<int> pos;       // n*n matrix: pos[u*n+v] = index of v in rotation(u)
    std::string out;

    void prepare(const Triangulation& t) {
        const int n = t.n();
        label.assign(n, 0);
        order.clear();
        order.reserve(n);
        entry.assign(n, 0);
        pos.assign(static_cast<size_t>(n) * n, -1);
        for (int u = 0; u < n; ++u) {
            auto rot = t.rotation(u);
            for (size_t k = 0; k < rot.size(); ++k)
                pos[static_cast<size_t>(u) * n + rot[k]] = static_cast<int>(k);
        }
    }
};

// Serializes the BFS relabeling rooted at directed edge (root, first) with the
// given scan direction, comparing against `best` on the fly. Returns -1 / 0 / +1
// for worse / (equal or best empty) / strictly better; on 0 or +1 ws.out holds
// the full serialization.
int serialize_rooted(const Triangulation& t, Workspace& ws, int root, int first, int dir,
                     const std::string& best) {
    const int n = t.n();
    ws.label.assign(n, 0);
    ws.order.clear();
    ws.out.clear();

    const bool compare = !best.empty();
    bool better = false;
    size_t at = 0;
    auto emit = [&](unsigned char byte) -> bool {
        if (compare && !better) {
            unsigned char ref = static_cast<unsigned char>(best[at]);
            if (byte > ref) return false;
            if (byte < ref) better = true;
        }
        ws.out.push_back(static_cast<char>(byte));
        ++at;
        return true;
    };

    if (!emit(static_cast<unsigned char>(n))) return -1;

    ws.label[root] = 1;
    ws.order.push_back(root);
    ws.entry[root] = ws.pos[static_cast<size_t>(root) * n + first];
    int next_label = 1;

    for (int i = 0; i < n; ++i) {
        const int x = ws.order[i];
        const auto rot = t.rotation(x);
        const int d = static_cast<int>(rot.size());
        const int start = ws.entry[x];
        for (int k = 0; k < d; ++k) {
            const int idx = dir > 0 ? (start + k) % d : (start - k + d) % d;
            const int y = rot[idx];
            if (ws.label[y] == 0) {
                ws.label[y] = ++next_label;
                ws.order.push_back(y);
                ws.entry[y] = ws.pos[static_cast<size_t>(y) * n + x];
            }
            if (!emit(static_cast<unsigned char>(ws.label[y]))) return -1;
        }
        if (!emit(0)) return -1;
    }
    assert(next_label == n);
    return better || !compare ? 1 : 0;
}

} // namespace

std::string CanonicalCode::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        s.push_back(digits[c >> 4]);
        s.push_back(digits[c & 15]);
    }
    return s;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    CanonicalCode code;
    code.bytes.reserve(hex.size() / 2);
    for (size_t i = 0; i < hex.size(); i += 2)
        code.bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return code;
}

CanonicalCode canonical_code(const Triangulation& t) {
    if (t.n() > 255)
        throw LimitExceeded("canonical codes are defined for n <= 255");

    thread_local Workspace ws;
    ws.prepare(t);

    std::string best;
    for (int u = 0; u < t.n(); ++u) {
        for (int v : t.rotation(u)) {
            for (int dir : {+1, -1}) {
                if (serialize_rooted(t, ws, u, v, dir, best) > 0)
                    best = ws.out;
            }
        }
    }
    return CanonicalCode{std::move(best)};
}

std::vector<std::string> rooted_serializations(const Triangulation& t) {
    Workspace ws;
    ws.prepare(t);
    std::vector<std::string> all;
    all.reserve(4 * t.edge_count());
    const std::string no_best;
    for (int u = 0; u < t.n(); ++u)
        for (int v : t.rotation(u))
            for (int dir : {+1, -1}) {
                serialize_rooted(t, ws, u, v, dir, no_best);
                all.push_back(ws.out);
            }
    return all;
}

Triangulation decode_canonical(const CanonicalCode& code) {
    return decode_planar_record(code.bytes);
}

} // namespace spheretri
