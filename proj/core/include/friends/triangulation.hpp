#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "friends/perm4.hpp"

namespace friends {

// Sub-simplex numbering for a tetrahedron with vertices {0,1,2,3}:
//   face i  = the triangle opposite vertex i
//   edge k  = the k-th pair in 01,02,03,12,13,23
inline constexpr int kEdgeVerts[6][2] = {{0,1},{0,2},{0,3},{1,2},{1,3},{2,3}};

inline constexpr int edgeIndex(int u, int v) {
    constexpr int tab[4][4] = {
        {-1, 0, 1, 2},
        { 0,-1, 3, 4},
        { 1, 3,-1, 5},
        { 2, 4, 5,-1}};
    return tab[u][v];
}

// One face-gluing instruction. `map` carries all four vertices of the source
// tetrahedron to the target; it must send `face` to the matching face index.
struct Gluing {
    int tet = 0;
    int face = 0;
    int target = 0;
    Perm4 map;
};

struct InvalidGluing : std::runtime_error {
    InvalidGluing(const std::string& what, int tet, int face)
        : std::runtime_error(what + " (tet " + std::to_string(tet) +
                             ", face " + std::to_string(face) + ")"),
          tet(tet), face(face) {}
    int tet, face;
};

enum class LinkType { Sphere, Torus, Disk, Other };

// A generalized (Regina-style) 3-manifold triangulation: tetrahedra with
// affine face identifications, boundary faces left unglued. The full
// skeleton is computed on construction and the value is immutable after
// that, so triangulations can be shared freely across threads.
class Triangulation {
public:
    struct FaceSlot {
        int tet = -1;  // -1 = boundary face
        Perm4 map;
    };

    struct EdgeEmbed {
        int tet;
        int u, v;  // directed endpoints, coherent along the edge class
        int edge() const { return edgeIndex(u, v); }
    };

    struct EdgeClass {
        std::vector<EdgeEmbed> embeds;  // in fan order around the edge
        bool boundary = false;
        bool valid = true;   // false if identified with itself in reverse
        int v0 = -1, v1 = -1;  // endpoint vertex classes of embeds[0]
        bool loop() const { return v0 == v1; }
        int degree() const { return static_cast<int>(embeds.size()); }
    };

    struct TriEmbed {
        int tet = -1;
        int face = -1;
    };

    struct TriClass {
        TriEmbed front, back;  // back.tet < 0 for boundary triangles
        bool boundary() const { return back.tet < 0; }
    };

    struct VertexClass {
        std::vector<std::pair<int, int>> corners;  // (tet, vertex)
        LinkType link = LinkType::Other;
        int linkChi = 0;
        bool linkClosed = false;
        bool linkOrientable = true;
        bool ideal() const { return link == LinkType::Torus; }
    };

    Triangulation() = default;
    explicit Triangulation(std::vector<std::array<FaceSlot, 4>> adj);

    // Validates gluing instructions (involutivity, face consistency) and
    // throws InvalidGluing with the offending location.
    static Triangulation build(int tetCount, const std::vector<Gluing>& gluings);

    int size() const { return static_cast<int>(adj_.size()); }
    const FaceSlot& adj(int tet, int face) const { return adj_[tet][face]; }
    bool isGlued(int tet, int face) const { return adj_[tet][face].tet >= 0; }
    const std::vector<std::array<FaceSlot, 4>>& adjacency() const { return adj_; }

    int vertexCount() const { return static_cast<int>(vertices_.size()); }
    int edgeCount() const { return static_cast<int>(edges_.size()); }
    int triangleCount() const { return static_cast<int>(triangles_.size()); }

    const std::vector<VertexClass>& vertices() const { return vertices_; }
    const std::vector<EdgeClass>& edges() const { return edges_; }
    const std::vector<TriClass>& triangles() const { return triangles_; }

    int vertexIndexOf(int tet, int v) const { return vertexOf_[tet][v]; }
    int edgeIndexOf(int tet, int e) const { return edgeOf_[tet][e]; }
    int triangleIndexOf(int tet, int f) const { return triangleOf_[tet][f]; }

    // +1 if the edge class orientation runs min->max vertex label at this
    // incidence, -1 otherwise (0 only for invalid reversed edges).
    int edgeDirection(int tet, int e) const { return edgeDirOf_[tet][e]; }

    bool valid() const { return valid_; }
    bool connected() const { return connected_; }
    bool orientable() const { return orientable_; }
    bool oriented() const { return oriented_; }
    bool hasBoundaryFaces() const { return boundaryFaces_ > 0; }
    int boundaryFaceCount() const { return boundaryFaces_; }

    // Closed: valid, no boundary faces, every vertex link a sphere.
    bool closed() const;
    // Ideal: valid, no boundary faces, links spheres or tori, at least one torus.
    bool ideal() const;
    int cuspCount() const;          // number of torus vertex links
    int materialVertexCount() const;  // number of sphere vertex links

    long eulerChar() const {
        return static_cast<long>(vertexCount()) - edgeCount() + triangleCount() - size();
    }

    // Applies an isomorphism: tet t (with vertex relabelling vperm[t]) becomes
    // tet tetPerm[t] of the result.
    Triangulation relabeled(const std::vector<int>& tetPerm,
                            const std::vector<Perm4>& vperm) const;

    // A consistently oriented copy (all gluing permutations odd). Requires
    // orientable().
    Triangulation orientedCopy() const;

    // The tetrahedron orientation signs (+1/-1) found by the orientability
    // sweep; meaningful only when orientable().
    const std::vector<int>& tetOrientation() const { return ori_; }

    std::string summary() const;

private:
    void computeSkeleton();

    std::vector<std::array<FaceSlot, 4>> adj_;

    std::vector<VertexClass> vertices_;
    std::vector<EdgeClass> edges_;
    std::vector<TriClass> triangles_;
    std::vector<std::array<int, 4>> vertexOf_;
    std::vector<std::array<int, 6>> edgeOf_;
    std::vector<std::array<int, 6>> edgeDirOf_;
    std::vector<std::array<int, 4>> triangleOf_;
    std::vector<int> ori_;

    int boundaryFaces_ = 0;
    bool valid_ = true;
    bool connected_ = true;
    bool orientable_ = true;
    bool oriented_ = true;
};

}  // namespace friends
