#include "fixtures.hpp"

namespace fixtures {

using friends::Gluing;
using friends::Triangulation;

// Frozen from the bring-up exhaustive search over two-tetrahedron closed
// triangulations: valid, closed, orientable, one vertex, trivial H1 and a
// fundamental group that Tietze-simplifies to nothing.
Triangulation twoTetS3() {
    std::vector<Gluing> g = {
        {0, 0, 0, perm(1, 0, 2, 3)},
        {0, 2, 1, perm(1, 2, 0, 3)},
        {0, 3, 1, perm(0, 2, 3, 1)},
        {1, 2, 1, perm(0, 1, 3, 2)},
    };
    return Triangulation::build(2, g);
}

// Same search at one tetrahedron.
Triangulation oneTetS3() {
    std::vector<Gluing> g = {
        {0, 0, 0, perm(1, 0, 2, 3)},
        {0, 2, 0, perm(1, 2, 3, 0)},
    };
    return Triangulation::build(1, g);
}

}  // namespace fixtures
