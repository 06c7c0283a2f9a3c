#pragma once

#include <compare>
#include <string>
#include <vector>

#include "spheretri/triangulation.hpp"

namespace spheretri {

/// Labeling- and orientation-invariant fingerprint of an embedded
/// triangulation. The bytes are a planar_code record (size byte, then
/// 1-based neighbor lists each 0-terminated) of the canonically relabeled
/// graph, so a code decodes back into its canonical representative.
struct CanonicalCode {
    std::string bytes;

    auto operator<=>(const CanonicalCode&) const = default;
    std::string hex() const;
    static CanonicalCode from_hex(const std::string& hex);
};

/// Lexicographic minimum over all 4e rooted serializations (2e directed root
/// edges x 2 orientations); equal codes <=> isomorphic as sphere
/// triangulations, reflections identified.
CanonicalCode canonical_code(const Triangulation& t);

/// All 4e rooted serializations, unpruned. Test hook: canonical_code must
/// equal the minimum of this list.
std::vector<std::string> rooted_serializations(const Triangulation& t);

/// Rebuild the canonical representative a code serializes.
Triangulation decode_canonical(const CanonicalCode& code);

} // namespace spheretri
