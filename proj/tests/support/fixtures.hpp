#pragma once

// Shared triangulation fixtures for the test suites.

#include <vector>

#include "friends/triangulation.hpp"

namespace fixtures {

inline friends::Perm4 perm(int a, int b, int c, int d) {
    return friends::Perm4(a, b, c, d);
}

// The classical two-tetrahedron ideal triangulation of the figure-eight knot
// complement (SnapPea's m004): both tetrahedra glued to each other along all
// four faces. One ideal vertex with torus link, two edge classes of degree 6.
inline friends::Triangulation figureEight() {
    using friends::Gluing;
    std::vector<Gluing> g = {
        {0, 0, 1, perm(0, 1, 3, 2)},
        {0, 1, 1, perm(1, 2, 3, 0)},
        {0, 2, 1, perm(2, 3, 1, 0)},
        {0, 3, 1, perm(2, 1, 0, 3)},
    };
    return friends::Triangulation::build(2, g);
}

// One-vertex two-tetrahedron triangulation of S^3: derived by exhaustive
// search over two-tetrahedron closed triangulations during bring-up (see
// test_triangulation.cpp for the properties that pin it down); frozen here.
friends::Triangulation twoTetS3();

}  // namespace fixtures

namespace fixtures {
// One-tetrahedron one-vertex S^3 (two self-identifications); also frozen
// from the bring-up search.
friends::Triangulation oneTetS3();
}
