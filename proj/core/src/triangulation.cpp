#include "friends/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace friends {

namespace {

// Simple union-find over a flat index space.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

Triangulation Triangulation::build(int tetCount, const std::vector<Gluing>& gluings) {
    std::vector<std::array<FaceSlot, 4>> adj(tetCount);
    for (const Gluing& g : gluings) {
        if (g.tet < 0 || g.tet >= tetCount || g.target < 0 || g.target >= tetCount)
            throw InvalidGluing("gluing references missing tetrahedron", g.tet, g.face);
        if (g.face < 0 || g.face > 3)
            throw InvalidGluing("face index out of range", g.tet, g.face);
        // The vertex map must carry the face triple to the target face triple,
        // i.e. map[face] is the target face index and nothing else is needed.
        int targetFace = g.map[g.face];
        if (g.tet == g.target && targetFace == g.face)
            throw InvalidGluing("face glued to itself", g.tet, g.face);

        FaceSlot& mine = adj[g.tet][g.face];
        FaceSlot& theirs = adj[g.target][targetFace];
        Perm4 inv = g.map.inverse();
        if (mine.tet >= 0) {
            if (mine.tet != g.target || mine.map != g.map)
                throw InvalidGluing("conflicting gluings for face", g.tet, g.face);
        }
        if (theirs.tet >= 0) {
            if (theirs.tet != g.tet || theirs.map != inv)
                throw InvalidGluing("gluing not involutive", g.tet, g.face);
        }
        mine = FaceSlot{g.target, g.map};
        theirs = FaceSlot{g.tet, inv};
    }
    return Triangulation(std::move(adj));
}

Triangulation::Triangulation(std::vector<std::array<FaceSlot, 4>> adj)
    : adj_(std::move(adj)) {
    // Check involutivity of the raw table; internal callers are expected to
    // hand us coherent data, but a cheap check catches move bugs early.
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceSlot& s = adj_[t][f];
            if (s.tet < 0) continue;
            if (s.tet >= size())
                throw InvalidGluing("dangling gluing", t, f);
            if (s.tet == t && s.map[f] == f)
                throw InvalidGluing("face glued to itself", t, f);
            const FaceSlot& back = adj_[s.tet][s.map[f]];
            if (back.tet != t || back.map != s.map.inverse())
                throw InvalidGluing("gluing not involutive", t, f);
        }
    computeSkeleton();
}

void Triangulation::computeSkeleton() {
    const int n = size();
    vertices_.clear(); edges_.clear(); triangles_.clear();
    vertexOf_.assign(n, {-1, -1, -1, -1});
    edgeOf_.assign(n, {-1, -1, -1, -1, -1, -1});
    edgeDirOf_.assign(n, {0, 0, 0, 0, 0, 0});
    triangleOf_.assign(n, {-1, -1, -1, -1});
    ori_.assign(n, 0);
    boundaryFaces_ = 0;
    valid_ = true;
    connected_ = true;
    orientable_ = true;
    oriented_ = true;
    if (n == 0) return;

    // --- Triangle classes ---
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (triangleOf_[t][f] >= 0) continue;
            TriClass tc;
            tc.front = {t, f};
            int id = static_cast<int>(triangles_.size());
            triangleOf_[t][f] = id;
            const FaceSlot& s = adj_[t][f];
            if (s.tet < 0) {
                ++boundaryFaces_;
            } else {
                tc.back = {s.tet, s.map[f]};
                triangleOf_[s.tet][s.map[f]] = id;
            }
            triangles_.push_back(tc);
        }

    // --- Connectivity and orientability over the face-pairing graph ---
    {
        std::vector<int> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        ori_[0] = 1;
        bool conflict = false;
        int visited = 0;
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            ++visited;
            for (int f = 0; f < 4; ++f) {
                const FaceSlot& s = adj_[t][f];
                if (s.tet < 0) continue;
                int want = -ori_[t] * s.map.sign();
                if (!seen[s.tet]) {
                    seen[s.tet] = 1;
                    ori_[s.tet] = want;
                    stack.push_back(s.tet);
                } else if (ori_[s.tet] != want) {
                    conflict = true;
                }
            }
        }
        connected_ = (visited == n);
        if (!connected_) {
            // Orient the remaining components too.
            for (int start = 0; start < n; ++start) {
                if (seen[start]) continue;
                seen[start] = 1;
                ori_[start] = 1;
                std::vector<int> st{start};
                while (!st.empty()) {
                    int t = st.back();
                    st.pop_back();
                    for (int f = 0; f < 4; ++f) {
                        const FaceSlot& s = adj_[t][f];
                        if (s.tet < 0) continue;
                        int want = -ori_[t] * s.map.sign();
                        if (!seen[s.tet]) {
                            seen[s.tet] = 1;
                            ori_[s.tet] = want;
                            st.push_back(s.tet);
                        } else if (ori_[s.tet] != want) {
                            conflict = true;
                        }
                    }
                }
            }
        }
        orientable_ = !conflict;
        if (orientable_) {
            oriented_ = true;
            for (int t = 0; t < n && oriented_; ++t)
                if (ori_[t] != 1) oriented_ = false;
        } else {
            oriented_ = false;
        }
    }

    // --- Edge classes: walk the fan around each directed edge ---
    // State while walking: tetrahedron t, directed endpoints (u, v), and the
    // face we exit through. Crossing a gluing p turns (t,u,v,out) into
    // (t', p[u], p[v], 6 - p[u] - p[v] - p[out]): we enter through p[out] and
    // leave through the remaining label.
    {
        // direction seen for each (tet, edge): 0 = none, +1 u<v, -1 u>v, 2 = both
        std::vector<std::array<int, 6>> dir(n, {0, 0, 0, 0, 0, 0});
        for (int t0 = 0; t0 < n; ++t0)
            for (int e0 = 0; e0 < 6; ++e0) {
                if (edgeOf_[t0][e0] >= 0) continue;
                EdgeClass ec;
                int id = static_cast<int>(edges_.size());

                int u0 = kEdgeVerts[e0][0], v0 = kEdgeVerts[e0][1];
                // choose the smaller available exit face to make walks canonical
                int x = -1, y = -1;
                for (int w = 0; w < 4; ++w)
                    if (w != u0 && w != v0) { (x < 0 ? x : y) = w; }

                auto markDir = [&](int t, int u, int v) {
                    int e = edgeIndex(u, v);
                    int d = (u < v) ? 1 : -1;
                    int& slot = dir[t][e];
                    if (slot == 0) slot = d;
                    else if (slot != d) { slot = 2; ec.valid = false; }
                    edgeOf_[t][e] = id;
                    edgeDirOf_[t][e] = (slot == 2) ? 0 : d;
                };

                // Walk in one direction; returns false if it hit a boundary face.
                auto walk = [&](int exitFace, std::vector<EdgeEmbed>& out) {
                    int t = t0, u = u0, v = v0, ex = exitFace;
                    while (true) {
                        out.push_back({t, u, v});
                        markDir(t, u, v);
                        const FaceSlot& s = adj_[t][ex];
                        if (s.tet < 0) return false;  // boundary
                        int nt = s.tet;
                        int nu = s.map[u], nv = s.map[v];
                        int nin = s.map[ex];
                        int nex = 6 - nu - nv - nin;
                        t = nt; u = nu; v = nv; ex = nex;
                        if (t == t0 && u == u0 && v == v0 && ex == exitFace)
                            return true;  // closed the cycle
                    }
                };

                std::vector<EdgeEmbed> fwd;
                bool cycle = walk(x, fwd);
                if (cycle) {
                    ec.embeds = std::move(fwd);
                    ec.boundary = false;
                } else {
                    // Boundary edge: walk the other way and stitch the chain.
                    std::vector<EdgeEmbed> bwd;
                    // Walking backwards swaps entry/exit roles; direction of
                    // (u,v) stays coherent because we keep the same (u0,v0).
                    int t = t0, u = u0, v = v0, ex = y;
                    std::vector<EdgeEmbed> rev;
                    while (true) {
                        const FaceSlot& s = adj_[t][ex];
                        if (s.tet < 0) break;
                        int nt = s.tet;
                        int nu = s.map[u], nv = s.map[v];
                        int nin = s.map[ex];
                        int nex = 6 - nu - nv - nin;
                        t = nt; u = nu; v = nv; ex = nex;
                        rev.push_back({t, u, v});
                        markDir(t, u, v);
                    }
                    std::reverse(rev.begin(), rev.end());
                    rev.insert(rev.end(), fwd.begin(), fwd.end());
                    ec.embeds = std::move(rev);
                    ec.boundary = true;
                }
                edges_.push_back(std::move(ec));
            }
        for (auto& ec : edges_)
            if (!ec.valid) valid_ = false;
    }

    // --- Vertex classes ---
    {
        UnionFind uf(4 * n);
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                const FaceSlot& s = adj_[t][f];
                if (s.tet < 0) continue;
                for (int v = 0; v < 4; ++v)
                    if (v != f) uf.unite(4 * t + v, 4 * s.tet + s.map[v]);
            }
        std::map<int, int> root2id;
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v) {
                int r = uf.find(4 * t + v);
                auto it = root2id.find(r);
                int id;
                if (it == root2id.end()) {
                    id = static_cast<int>(vertices_.size());
                    root2id.emplace(r, id);
                    vertices_.push_back({});
                } else {
                    id = it->second;
                }
                vertexOf_[t][v] = id;
                vertices_[id].corners.emplace_back(t, v);
            }
    }

    // Fill in edge endpoint vertex classes.
    for (auto& ec : edges_) {
        const EdgeEmbed& em = ec.embeds.front();
        ec.v0 = vertexOf_[em.tet][em.u];
        ec.v1 = vertexOf_[em.tet][em.v];
    }

    // --- Vertex links ---
    // The link of vertex v in tet t is a triangle whose three sides lie on
    // the faces of t adjacent to v, and whose three corners sit on the edges
    // of t at v. Gluings of those faces induce the side identifications; the
    // resulting surface is classified by Euler characteristic, orientability
    // and closedness.
    {
        auto cornerIdx = [&](int t, int v, int w) {
            // corner of link triangle (t,v) sitting on edge {v,w}: 12 per tet
            // indexed by (v, w) with w != v
            static constexpr int off[4][4] = {
                {-1, 0, 1, 2}, {0, -1, 1, 2}, {0, 1, -1, 2}, {0, 1, 2, -1}};
            return 12 * t + 3 * v + off[v][w];
        };

        UnionFind cornerUF(12 * n);
        // Count link triangles / sides / boundary sides per vertex class and
        // 2-color for orientability.
        std::vector<int> faces(vertices_.size(), 0);
        std::vector<int> sides(vertices_.size(), 0);     // total side slots
        std::vector<int> bdrySides(vertices_.size(), 0);

        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v) {
                int vc = vertexOf_[t][v];
                ++faces[vc];
                for (int f = 0; f < 4; ++f) {
                    if (f == v) continue;
                    ++sides[vc];
                    const FaceSlot& s = adj_[t][f];
                    if (s.tet < 0) {
                        ++bdrySides[vc];
                        continue;
                    }
                    for (int w = 0; w < 4; ++w) {
                        if (w == v || w == f) continue;
                        cornerUF.unite(cornerIdx(t, v, w),
                                       cornerIdx(s.tet, s.map[v], s.map[w]));
                    }
                }
            }

        std::vector<int> cornerSeen(12 * n, 0);
        std::vector<int> linkVerts(vertices_.size(), 0);
        for (int t = 0; t < n; ++t)
            for (int v = 0; v < 4; ++v)
                for (int w = 0; w < 4; ++w) {
                    if (w == v) continue;
                    int r = cornerUF.find(cornerIdx(t, v, w));
                    if (!cornerSeen[r]) {
                        cornerSeen[r] = 1;
                        ++linkVerts[vertexOf_[t][v]];
                    }
                }

        // Orientability of each link by BFS sign propagation over corners.
        // Crossing a side carries link triangle (t,v) to (t', p[v]) with the
        // induced 3-permutation on corner labels; consistent global
        // orientation needs s' = -sign * s.
        std::vector<int> linkOri(4 * n, 0);
        std::vector<char> linkOrientable(vertices_.size(), 1);
        for (int t0 = 0; t0 < n; ++t0)
            for (int v0 = 0; v0 < 4; ++v0) {
                if (linkOri[4 * t0 + v0] != 0) continue;
                linkOri[4 * t0 + v0] = 1;
                std::vector<std::pair<int, int>> stack{{t0, v0}};
                while (!stack.empty()) {
                    auto [t, v] = stack.back();
                    stack.pop_back();
                    for (int f = 0; f < 4; ++f) {
                        if (f == v) continue;
                        const FaceSlot& s = adj_[t][f];
                        if (s.tet < 0) continue;
                        int t2 = s.tet, v2 = s.map[v];
                        // parity of the induced corner permutation
                        int lbl[3], img[3], k = 0;
                        for (int w = 0; w < 4; ++w)
                            if (w != v) lbl[k++] = w;
                        for (int i = 0; i < 3; ++i) img[i] = s.map[lbl[i]];
                        int inv = 0;
                        for (int i = 0; i < 3; ++i)
                            for (int j = i + 1; j < 3; ++j)
                                if (img[i] > img[j]) ++inv;
                        int sign = (inv % 2) ? -1 : 1;
                        int want = -sign * linkOri[4 * t + v];
                        int& slot = linkOri[4 * t2 + v2];
                        if (slot == 0) {
                            slot = want;
                            stack.push_back({t2, v2});
                        } else if (slot != want) {
                            linkOrientable[vertexOf_[t][v]] = 0;
                        }
                    }
                }
            }

        for (size_t i = 0; i < vertices_.size(); ++i) {
            VertexClass& vc = vertices_[i];
            int E = bdrySides[i] + (sides[i] - bdrySides[i]) / 2;
            vc.linkChi = linkVerts[i] - E + faces[i];
            vc.linkClosed = (bdrySides[i] == 0);
            vc.linkOrientable = linkOrientable[i];
            if (vc.linkClosed && vc.linkOrientable && vc.linkChi == 2)
                vc.link = LinkType::Sphere;
            else if (vc.linkClosed && vc.linkOrientable && vc.linkChi == 0)
                vc.link = LinkType::Torus;
            else if (!vc.linkClosed && vc.linkOrientable && vc.linkChi == 1)
                vc.link = LinkType::Disk;
            else
                vc.link = LinkType::Other;
            if (vc.link == LinkType::Other) valid_ = false;
        }
    }
}

bool Triangulation::closed() const {
    if (!valid_ || boundaryFaces_ > 0 || size() == 0) return false;
    for (const auto& v : vertices_)
        if (v.link != LinkType::Sphere) return false;
    return true;
}

bool Triangulation::ideal() const {
    if (!valid_ || boundaryFaces_ > 0) return false;
    bool torus = false;
    for (const auto& v : vertices_) {
        if (v.link == LinkType::Torus) torus = true;
        else if (v.link != LinkType::Sphere) return false;
    }
    return torus;
}

int Triangulation::cuspCount() const {
    int k = 0;
    for (const auto& v : vertices_)
        if (v.link == LinkType::Torus) ++k;
    return k;
}

int Triangulation::materialVertexCount() const {
    int k = 0;
    for (const auto& v : vertices_)
        if (v.link == LinkType::Sphere) ++k;
    return k;
}

Triangulation Triangulation::relabeled(const std::vector<int>& tetPerm,
                                       const std::vector<Perm4>& vperm) const {
    const int n = size();
    std::vector<std::array<FaceSlot, 4>> adj(n);
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const FaceSlot& s = adj_[t][f];
            int nt = tetPerm[t];
            int nf = vperm[t][f];
            if (s.tet < 0) {
                adj[nt][nf] = FaceSlot{};
            } else {
                // new gluing map: vperm[target] . map . vperm[t]^-1
                adj[nt][nf] = FaceSlot{tetPerm[s.tet],
                                       vperm[s.tet] * s.map * vperm[t].inverse()};
            }
        }
    }
    return Triangulation(std::move(adj));
}

Triangulation Triangulation::orientedCopy() const {
    if (!orientable_)
        throw std::logic_error("orientedCopy() on a non-orientable triangulation");
    if (oriented_) return *this;
    std::vector<int> tetPerm(size());
    std::iota(tetPerm.begin(), tetPerm.end(), 0);
    std::vector<Perm4> vperm(size());
    for (int t = 0; t < size(); ++t)
        if (ori_[t] < 0) vperm[t] = Perm4::swap(2, 3);
    return relabeled(tetPerm, vperm);
}

std::string Triangulation::summary() const {
    std::ostringstream os;
    os << size() << " tets, " << vertexCount() << " vertices, " << edgeCount()
       << " edges, " << triangleCount() << " triangles";
    if (!valid_) os << ", INVALID";
    if (boundaryFaces_) os << ", " << boundaryFaces_ << " boundary faces";
    os << (orientable_ ? ", orientable" : ", non-orientable");
    int c = cuspCount();
    if (c) os << ", " << c << " cusp(s)";
    return os.str();
}

}  // namespace friends
