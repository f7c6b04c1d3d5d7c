#pragma once

#include <array>
#include <map>
#include <vector>

#include "friends/abelian.hpp"
#include "friends/triangulation.hpp"

namespace friends {

// The triangulated link surface of one vertex class. Link triangles are the
// corners (tet, v); each side of such a triangle lies on a face of the
// tetrahedron, and each corner of it sits on an edge at v. For an ideal
// vertex of an orientable triangulation this is a triangulated torus.
class LinkComplex {
public:
    struct SideEmbed {
        int tet = -1, v = -1, f = -1;  // side of link triangle (tet,v) on face f
    };
    struct Side {
        SideEmbed embed[2];
        int count = 0;  // 1 = boundary side
        int c0 = -1, c1 = -1;  // endpoint corner classes, canonical orientation
        bool boundary() const { return count == 1; }
    };

    LinkComplex(const Triangulation& t, int vertexClass);

    const Triangulation& triangulation() const { return *tri_; }
    int vertexClass() const { return vc_; }

    int triangleCount() const { return static_cast<int>(tris_.size()); }
    int sideCount() const { return static_cast<int>(sides_.size()); }
    int cornerCount() const { return nCorners_; }

    const std::vector<std::pair<int, int>>& triangles() const { return tris_; }
    const std::vector<Side>& sides() const { return sides_; }

    // Lookup by embedding; -1 when (tet,v) is not a corner of this class.
    int triangleIndexOf(int tet, int v) const;
    int sideIndexOf(int tet, int v, int f) const;
    // +1 when the side's canonical orientation runs from the corner with the
    // smaller third label to the larger one at this embedding.
    int sideDirection(int tet, int v, int f) const;
    int cornerIndexOf(int tet, int v, int w) const;

    // Signed side-traversal list of the boundary of link triangle (tet, v)
    // as the cycle w0 -> w1 -> w2 -> w0 (w's sorted).
    std::array<std::pair<int, int>, 3> triangleBoundary(int tet, int v) const;

private:
    const Triangulation* tri_;
    int vc_;
    std::vector<std::pair<int, int>> tris_;
    std::map<std::pair<int, int>, int> triIdx_;
    std::vector<Side> sides_;
    std::map<std::array<int, 3>, int> sideIdx_;   // (tet,v,f) -> side
    std::map<std::array<int, 3>, int> sideDir_;   // per-embedding direction
    std::map<std::array<int, 3>, int> cornerIdx_; // (tet,v,w) -> corner class
    int nCorners_ = 0;
};

}  // namespace friends
