#pragma once

#include <cstddef>
#include <vector>

#include "spheretri/canonical.hpp"
#include "spheretri/triangulation.hpp"

namespace spheretri {

/// Resource limits for the generators. `threads` only affects wall time;
/// every generator output is deterministic regardless of worker count.
struct GenLimits {
    int max_n = 14;
    std::size_t class_budget = 400000;
    int threads = 1;
};

/// The tetrahedron, seed of all generation.
Triangulation k4();

/// Splits vertex w into an edge w1-w2 (w1 keeps index w, w2 becomes index n).
/// The rotation arc of w from a to b (inclusive) attaches to w1, the
/// complementary arc from b to a attaches to w2; both stay adjacent to a and
/// b. Inverse of contracting the edge w1-w2. Throws InvalidSplit unless a and
/// b are distinct neighbors of w.
Triangulation vertex_split(const Triangulation& t, int w, int a, int b);

/// Every vertex_split child over all (w, unordered {a,b}), in deterministic
/// order; isomorphic duplicates are not removed here.
std::vector<Triangulation> expand_children(const Triangulation& t);

/// New degree-3 vertex (index n) inside face f.
Triangulation insert_into_face(const Triangulation& t, const Face& f);

/// K4 grown to n vertices by repeated degree-3 insertion into the first face.
Triangulation stacked_triangulation(int n);

/// Whether the diagonal flip of edge uv is legal (the two face apexes are
/// non-adjacent).
bool flippable(const Triangulation& t, int u, int v);

/// Replaces edge uv by the diagonal xy of the quadrilateral formed by the two
/// faces on uv. Throws NotFlippable if xy is already an edge.
Triangulation diagonal_flip(const Triangulation& t, int u, int v);

/// All isomorphism classes of n-vertex triangulations, one canonical
/// representative each, sorted by ascending canonical code. Level-wise
/// vertex splitting from K4 with per-level dedup by canonical code.
/// Throws LimitExceeded if n > limits.max_n or a level exceeds
/// limits.class_budget.
std::vector<Triangulation> enumerate(int n, const GenLimits& limits = {});

/// Canonical codes of every class reachable from `seed` by diagonal flips
/// (breadth-first over classes), sorted ascending. Since flips connect all
/// triangulations of a fixed n, this is an independent generator for
/// cross-checking enumerate. Throws LimitExceeded past limits.class_budget.
std::vector<CanonicalCode> flip_closure(const Triangulation& seed,
                                        const GenLimits& limits = {});

/// Catalog of all classes for 4 <= n <= max_n, canonical representatives in
/// canonical-code order.
struct Catalog {
    std::vector<std::vector<Triangulation>> by_n; // indexed by n; [0..3] empty

    int max_n() const { return static_cast<int>(by_n.size()) - 1; }
    const std::vector<Triangulation>& at(int n) const;
};

Catalog build_catalog(int max_n, const GenLimits& limits = {});

} // namespace spheretri
