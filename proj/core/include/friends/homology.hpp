#pragma once

#include "friends/abelian.hpp"
#include "friends/triangulation.hpp"

namespace friends {

// First integer homology of the underlying compact manifold, from the
// cellular chain complex of the quotient cell structure with ideal (torus
// link) vertices deleted. Works uniformly for closed, ideal and real
// boundary triangulations.
AbelianGroup homologyH1(const Triangulation& t);

// The boundary matrix of triangles against edge classes (one column per
// triangle class), with edges oriented by their class direction.
IntMatrix triangleBoundaries(const Triangulation& t);

}  // namespace friends
