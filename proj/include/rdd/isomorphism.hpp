#pragma once

#include <optional>
#include <vector>

#include "rdd/graph.hpp"

namespace rdd {

// Returns map[v of g] = vertex of h, or nullopt when the graphs are not
// isomorphic. Vertices are coloured by degree and distance profile, the
// colouring is refined jointly on both graphs, and colour-preserving
// bijections are searched by backtracking.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace rdd
