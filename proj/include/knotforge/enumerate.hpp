#pragma once

#include <vector>

#include "knotforge/graph.hpp"

namespace knotforge {

// All connected 3-regular planar multigraphs (loops and parallel edges allowed)
// on at most v_max vertices, one per isomorphism class, each with one plane
// embedding. Ordered by vertex count, then by generation order.
std::vector<PlaneGraph> enumerate_trivalent_planar(int v_max);

// First rotation system (in a fixed search order) that embeds g in the sphere,
// if any. Exhaustive over rotation systems, so only for small graphs.
std::optional<PlaneGraph> find_plane_embedding(const MultiGraph& g);

}  // namespace knotforge
