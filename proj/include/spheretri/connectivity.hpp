#pragma once

#include <span>

#include "spheretri/triangulation.hpp"

namespace spheretri {

/// True iff deleting `cut` leaves at least two components. Deleting every
/// vertex (or all but one) therefore does not count as a cut. Vertices
/// listed in `cut` must be distinct.
bool is_vertex_cut(const Triangulation& t, const AdjacencyMasks& masks, std::span<const int> cut);
bool is_vertex_cut(const Triangulation& t, std::span<const int> cut);

/// Minimum vertex-cut size, by testing every 3- and 4-subset. Triangulations
/// are 3-connected and planarity caps the answer at 5, so the result is 3, 4
/// or 5 (K4 reports 3, its n-1 trivial bound).
int vertex_connectivity(const Triangulation& t);

} // namespace spheretri
