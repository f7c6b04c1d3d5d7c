#include "friends/cusp.hpp"

#include <algorithm>
#include <numeric>

namespace friends {

namespace {
class UF {
public:
    explicit UF(int n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
    int find(int x) {
        while (p_[x] != x) { p_[x] = p_[p_[x]]; x = p_[x]; }
        return x;
    }
    void unite(int a, int b) { p_[find(a)] = find(b); }
private:
    std::vector<int> p_;
};
}  // namespace

LinkComplex::LinkComplex(const Triangulation& t, int vertexClass)
    : tri_(&t), vc_(vertexClass) {
    for (auto [tet, v] : t.vertices()[vc_].corners) {
        triIdx_[{tet, v}] = static_cast<int>(tris_.size());
        tris_.push_back({tet, v});
    }

    // Corner classes: corner (t,v,w) is glued to (t',p[v],p[w]) across every
    // face f of t containing both v and w (f != v, f != w).
    auto cornerSlot = [&](int tet, int v, int w) {
        static constexpr int off[4][4] = {
            {-1, 0, 1, 2}, {0, -1, 1, 2}, {0, 1, -1, 2}, {0, 1, 2, -1}};
        return 12 * tet + 3 * v + off[v][w];
    };
    UF uf(12 * t.size());
    for (auto [tet, v] : tris_)
        for (int f = 0; f < 4; ++f) {
            if (f == v || !t.isGlued(tet, f)) continue;
            const auto& s = t.adj(tet, f);
            for (int w = 0; w < 4; ++w) {
                if (w == v || w == f) continue;
                uf.unite(cornerSlot(tet, v, w), cornerSlot(s.tet, s.map[v], s.map[w]));
            }
        }
    std::map<int, int> root2id;
    for (auto [tet, v] : tris_)
        for (int w = 0; w < 4; ++w) {
            if (w == v) continue;
            int r = uf.find(cornerSlot(tet, v, w));
            auto it = root2id.find(r);
            int id = (it == root2id.end())
                         ? (root2id[r] = nCorners_++)
                         : it->second;
            cornerIdx_[{tet, v, w}] = id;
        }

    // Side classes with per-embedding orientation. The canonical orientation
    // at the first embedding runs small-w -> large-w; the glued embedding
    // inherits it through the face permutation.
    for (auto [tet, v] : tris_)
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            if (sideIdx_.count({tet, v, f})) continue;
            int id = static_cast<int>(sides_.size());
            Side side;
            side.embed[side.count++] = {tet, v, f};
            sideIdx_[{tet, v, f}] = id;
            int a = -1, b = -1;  // the two corner labels of this side
            for (int w = 0; w < 4; ++w)
                if (w != v && w != f) { (a < 0 ? a : b) = w; }
            sideDir_[{tet, v, f}] = 1;  // a<b by construction
            side.c0 = cornerIdx_[{tet, v, a}];
            side.c1 = cornerIdx_[{tet, v, b}];
            if (t.isGlued(tet, f)) {
                const auto& s = t.adj(tet, f);
                int t2 = s.tet, v2 = s.map[v], f2 = s.map[f];
                side.embed[side.count++] = {t2, v2, f2};
                sideIdx_[{t2, v2, f2}] = id;
                // orientation at the partner: image of a must stay the tail
                sideDir_[{t2, v2, f2}] = (s.map[a] < s.map[b]) ? 1 : -1;
            }
            sides_.push_back(side);
        }
}

int LinkComplex::triangleIndexOf(int tet, int v) const {
    auto it = triIdx_.find({tet, v});
    return it == triIdx_.end() ? -1 : it->second;
}

int LinkComplex::sideIndexOf(int tet, int v, int f) const {
    auto it = sideIdx_.find({tet, v, f});
    return it == sideIdx_.end() ? -1 : it->second;
}

int LinkComplex::sideDirection(int tet, int v, int f) const {
    auto it = sideDir_.find({tet, v, f});
    return it == sideDir_.end() ? 0 : it->second;
}

int LinkComplex::cornerIndexOf(int tet, int v, int w) const {
    auto it = cornerIdx_.find({tet, v, w});
    return it == cornerIdx_.end() ? -1 : it->second;
}

std::array<std::pair<int, int>, 3> LinkComplex::triangleBoundary(int tet, int v) const {
    int ws[3], k = 0;
    for (int w = 0; w < 4; ++w)
        if (w != v) ws[k++] = w;
    std::array<std::pair<int, int>, 3> out;
    // traversals w0->w1, w1->w2, w2->w0; the side between wi and wj lies on
    // the face whose index is the remaining label
    const int from[3] = {0, 1, 2}, to[3] = {1, 2, 0};
    for (int s = 0; s < 3; ++s) {
        int wi = ws[from[s]], wj = ws[to[s]];
        int f = 6 - v - wi - wj;
        int idx = sideIndexOf(tet, v, f);
        int dir = sideDirection(tet, v, f);
        // canonical orientation runs min(wi,wj) -> max at dir=+1
        int sign = (wi < wj) ? dir : -dir;
        out[s] = {idx, sign};
    }
    return out;
}

}  // namespace friends
