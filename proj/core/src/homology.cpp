#include "friends/homology.hpp"

#include <algorithm>
#include <memory>

#include "friends/cusp.hpp"

namespace friends {

IntMatrix triangleBoundaries(const Triangulation& t) {
    const int E = t.edgeCount();
    IntMatrix B = zeroMatrix(E, t.triangleCount());
    for (int i = 0; i < t.triangleCount(); ++i) {
        const auto& tc = t.triangles()[i];
        int tet = tc.front.tet, f = tc.front.face;
        int vs[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs[k++] = v;
        const int pair[3][2] = {{vs[1], vs[2]}, {vs[0], vs[2]}, {vs[0], vs[1]}};
        const int sgn[3] = {1, -1, 1};
        for (int s = 0; s < 3; ++s) {
            int e = edgeIndex(pair[s][0], pair[s][1]);
            int dir = t.edgeDirection(tet, e);
            B[t.edgeIndexOf(tet, e)][i] += sgn[s] * dir;
        }
    }
    return B;
}

// H1 of the compact manifold: the cellular chain complex of the triangulation
// with every ideal (torus-link) vertex truncated. The truncated complex keeps
// one 1-cell per edge class and one hexagonal 2-cell per triangle class, and
// adds the ideal vertex links' corners, sides and triangles as boundary cells.
AbelianGroup homologyH1(const Triangulation& t) {
    if (t.size() == 0) return AbelianGroup{};

    // Link complexes of ideal vertices, with global cell offsets.
    std::vector<std::unique_ptr<LinkComplex>> links(t.vertexCount());
    std::vector<int> sideOffset(t.vertexCount(), 0);
    std::vector<int> cornerOffset(t.vertexCount(), 0);
    std::vector<int> linkTriOffset(t.vertexCount(), 0);
    int nSides = 0, nCorners = 0, nLinkTris = 0;
    for (int v = 0; v < t.vertexCount(); ++v) {
        if (!t.vertices()[v].ideal()) continue;
        links[v] = std::make_unique<LinkComplex>(t, v);
        sideOffset[v] = nSides;
        cornerOffset[v] = nCorners;
        linkTriOffset[v] = nLinkTris;
        nSides += links[v]->sideCount();
        nCorners += links[v]->cornerCount();
        nLinkTris += links[v]->triangleCount();
    }

    // 0-cells: material vertex classes, then corners of ideal links.
    std::vector<int> vertexCell(t.vertexCount(), -1);
    int nMaterial = 0;
    for (int v = 0; v < t.vertexCount(); ++v)
        if (!t.vertices()[v].ideal()) vertexCell[v] = nMaterial++;
    const int C0 = nMaterial + nCorners;

    // 1-cells: truncated edges, then link sides.
    const int E = t.edgeCount();
    const int C1 = E + nSides;
    // 2-cells: truncated (hexagonal) triangles, then link triangles.
    const int C2 = t.triangleCount() + nLinkTris;

    auto cornerCell = [&](int vclass, int tet, int v, int w) {
        return nMaterial + cornerOffset[vclass] + links[vclass]->cornerIndexOf(tet, v, w);
    };

    // d1
    IntMatrix M1 = zeroMatrix(std::max(C0, 1), C1);
    for (int e = 0; e < E; ++e) {
        const auto& ec = t.edges()[e];
        const auto& em = ec.embeds.front();
        // head endpoint (v): material vertex or corner at (tet, v, u)
        if (!t.vertices()[ec.v1].ideal()) M1[vertexCell[ec.v1]][e] += 1;
        else M1[cornerCell(ec.v1, em.tet, em.v, em.u)][e] += 1;
        if (!t.vertices()[ec.v0].ideal()) M1[vertexCell[ec.v0]][e] -= 1;
        else M1[cornerCell(ec.v0, em.tet, em.u, em.v)][e] -= 1;
    }
    for (int v = 0; v < t.vertexCount(); ++v) {
        if (!links[v]) continue;
        for (int s = 0; s < links[v]->sideCount(); ++s) {
            const auto& side = links[v]->sides()[s];
            int col = E + sideOffset[v] + s;
            M1[nMaterial + cornerOffset[v] + side.c1][col] += 1;
            M1[nMaterial + cornerOffset[v] + side.c0][col] -= 1;
        }
    }

    // d2
    IntMatrix M2 = zeroMatrix(C1, C2);
    for (int i = 0; i < t.triangleCount(); ++i) {
        const auto& tc = t.triangles()[i];
        int tet = tc.front.tet, f = tc.front.face;
        int vs[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) vs[k++] = v;
        // truncated edges along the cycle x0->x1->x2->x0
        const int from[3] = {0, 1, 2}, to[3] = {1, 2, 0};
        for (int s = 0; s < 3; ++s) {
            int a = vs[from[s]], b = vs[to[s]];
            int e = edgeIndex(std::min(a, b), std::max(a, b));
            int dir = t.edgeDirection(tet, e);
            int sign = (a < b) ? dir : -dir;
            M2[t.edgeIndexOf(tet, e)][i] += sign;
        }
        // corner arcs at ideal vertices of the triangle: at vertex x the
        // cycle arrives from prev and leaves towards next, so the arc runs
        // corner(tet,x,prev) -> corner(tet,x,next); that is the side of
        // link(tet,x) on face f.
        for (int s = 0; s < 3; ++s) {
            int x = vs[s];
            int vclass = t.vertexIndexOf(tet, x);
            if (!t.vertices()[vclass].ideal()) continue;
            int prev = vs[(s + 2) % 3], next = vs[(s + 1) % 3];
            const auto& lk = *links[vclass];
            int sideId = lk.sideIndexOf(tet, x, f);
            int dir = lk.sideDirection(tet, x, f);
            // canonical: min(prev,next) -> max(prev,next) at dir=+1
            int sign = (prev < next) ? dir : -dir;
            M2[E + sideOffset[vclass] + sideId][i] += sign;
        }
    }
    for (int v = 0; v < t.vertexCount(); ++v) {
        if (!links[v]) continue;
        const auto& lk = *links[v];
        for (int j = 0; j < lk.triangleCount(); ++j) {
            auto [tet, x] = lk.triangles()[j];
            int col = t.triangleCount() + linkTriOffset[v] + j;
            for (auto [sideId, sign] : lk.triangleBoundary(tet, x))
                M2[E + sideOffset[v] + sideId][col] += sign;
        }
    }

    // H1 = ker d1 / im d2.
    IntMatrix D = M1, Vinv;
    smithNormalForm(D, nullptr, nullptr, &Vinv);
    int r = 0;
    int nmin = std::min(static_cast<int>(D.size()), C1);
    for (int i = 0; i < nmin; ++i)
        if (D[i][i] != 0) ++r;
    const int K = C1 - r;

    IntMatrix rel = zeroMatrix(C2, K);
    for (int j = 0; j < C2; ++j)
        for (int i = 0; i < K; ++i) {
            Int acc = 0;
            for (int e = 0; e < C1; ++e) acc += Vinv[r + i][e] * M2[e][j];
            rel[j][i] = acc;
        }
    return quotientByRows(K, rel);
}

}  // namespace friends
