#pragma once

#include <string>

#include "spheretri/triangulation.hpp"

namespace spheretri {

/// Standard graph6 line (no trailing newline) for the adjacency relation.
/// The embedding is dropped by design, and the encoding is
/// labeling-sensitive: isomorphic graphs with different labelings usually
/// yield different lines. Use planar_code where the rotation system matters.
std::string encode_graph6(const Triangulation& t);

} // namespace spheretri
