#pragma once

#include "fixloc/dataset.hpp"

#include <string>
#include <vector>

namespace fixloc {

struct PolytopeVertex {
    std::string name;
    RatVector position;             // must be integral
    std::vector<IntVector> edges;   // primitive outgoing edge directions
};

// Delzant polytope given vertex by vertex.
struct DelzantPolytope {
    std::size_t dim = 0;
    std::vector<PolytopeVertex> vertices;
};

// One fixed point per vertex: moment = vertex, weights = outgoing edges.
// Throws NonIntegerVertex, NotDelzant (edges not a Z-basis) or InvariantError.
FixedPointSet generate_toric(const DelzantPolytope& polytope);

// k times the standard simplex of dimension `dim`. In dimension 2 the
// vertices are named p, q, r.
DelzantPolytope simplex_polytope(unsigned dilation, std::size_t dim = 2);
// The segment [0, k].
DelzantPolytope segment_polytope(unsigned dilation);
DelzantPolytope product_polytope(const DelzantPolytope& a, const DelzantPolytope& b);

} // namespace fixloc
