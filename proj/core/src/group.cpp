#include "friends/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace friends {

void freeReduce(std::vector<int>& word) {
    std::vector<int> out;
    out.reserve(word.size());
    for (int x : word) {
        if (!out.empty() && out.back() == -x) out.pop_back();
        else out.push_back(x);
    }
    word = std::move(out);
}

void cyclicReduce(std::vector<int>& word) {
    freeReduce(word);
    size_t a = 0, b = word.size();
    while (b - a >= 2 && word[a] == -word[b - 1]) { ++a; --b; }
    word = std::vector<int>(word.begin() + a, word.begin() + b);
}

std::vector<int> inverseWord(const std::vector<int>& word) {
    std::vector<int> inv(word.rbegin(), word.rend());
    for (int& x : inv) x = -x;
    return inv;
}

std::string GroupPresentation::str() const {
    std::ostringstream os;
    os << "<" << gens << " generators |";
    for (const auto& r : relators) {
        os << " ";
        for (size_t i = 0; i < r.size(); ++i) {
            int g = std::abs(r[i]) - 1;
            char c = static_cast<char>('a' + (g % 26));
            os << c;
            if (r[i] < 0) os << "'";
        }
        if (r.empty()) os << "1";
    }
    os << ">";
    return os.str();
}

IntMatrix abelianizedRelations(const GroupPresentation& p) {
    IntMatrix rel = zeroMatrix(static_cast<int>(p.relators.size()), p.gens);
    for (size_t i = 0; i < p.relators.size(); ++i)
        for (int x : p.relators[i]) {
            if (x > 0) rel[i][x - 1] += 1;
            else rel[i][-x - 1] -= 1;
        }
    return rel;
}

AbelianGroup abelianization(const GroupPresentation& p) {
    return quotientByRows(p.gens, abelianizedRelations(p));
}

DualPresentation fundamentalGroupDual(const Triangulation& t) {
    DualPresentation out;
    const int n = t.size();
    out.triangleGenerator.assign(t.triangleCount(), 0);
    if (n == 0) return out;

    // Spanning tree of the face-pairing graph by BFS.
    std::vector<char> inTree(t.triangleCount(), 0);
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    while (!bfs.empty()) {
        int tet = bfs.front();
        bfs.pop();
        for (int f = 0; f < 4; ++f) {
            const auto& s = t.adj(tet, f);
            if (s.tet < 0 || seen[s.tet]) continue;
            seen[s.tet] = 1;
            inTree[t.triangleIndexOf(tet, f)] = 1;
            bfs.push(s.tet);
        }
    }

    int gens = 0;
    for (int i = 0; i < t.triangleCount(); ++i) {
        const auto& tc = t.triangles()[i];
        if (tc.boundary() || inTree[i]) continue;
        out.triangleGenerator[i] = ++gens;
    }
    out.group.gens = gens;

    // One relator per internal edge class: the dual word around the edge.
    for (const auto& ec : t.edges()) {
        if (ec.boundary) continue;
        std::vector<int> word;
        const auto& e0 = ec.embeds.front();
        int x = -1;
        for (int w = 0; w < 4; ++w)
            if (w != e0.u && w != e0.v) { x = w; break; }
        int tet = e0.tet, u = e0.u, v = e0.v, ex = x;
        do {
            int tri = t.triangleIndexOf(tet, ex);
            int g = out.triangleGenerator[tri];
            if (g != 0) {
                const auto& tc = t.triangles()[tri];
                bool fromFront = (tc.front.tet == tet && tc.front.face == ex);
                word.push_back(fromFront ? g : -g);
            }
            const auto& s = t.adj(tet, ex);
            int nu = s.map[u], nv = s.map[v], nin = s.map[ex];
            tet = s.tet; u = nu; v = nv; ex = 6 - nu - nv - nin;
        } while (!(tet == e0.tet && u == e0.u && v == e0.v && ex == x));
        cyclicReduce(word);
        if (!word.empty()) out.group.relators.push_back(std::move(word));
    }
    return out;
}

GroupPresentation fundamentalGroup(const Triangulation& t) {
    return fundamentalGroupDual(t).group;
}

namespace {

// Canonical form of a cyclic word up to rotation and inversion.
std::vector<int> canonicalCyclic(const std::vector<int>& w) {
    if (w.empty()) return w;
    std::vector<int> best;
    for (const std::vector<int>& base : {w, inverseWord(w)}) {
        for (size_t r = 0; r < base.size(); ++r) {
            std::vector<int> rot(base.begin() + r, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + r);
            if (best.empty() || rot < best) best = rot;
        }
    }
    return best;
}

struct Simplifier {
    GroupPresentation p;
    long budget;
    long steps = 0;

    bool spent() const { return steps >= budget; }
    void charge() { ++steps; }

    void reduceAll() {
        for (auto& r : p.relators) cyclicReduce(r);
        p.relators.erase(
            std::remove_if(p.relators.begin(), p.relators.end(),
                           [](const std::vector<int>& r) { return r.empty(); }),
            p.relators.end());
        std::set<std::vector<int>> seen;
        std::vector<std::vector<int>> kept;
        for (auto& r : p.relators) {
            auto key = canonicalCyclic(r);
            if (seen.insert(key).second) kept.push_back(std::move(r));
        }
        p.relators = std::move(kept);
        std::sort(p.relators.begin(), p.relators.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }

    // Remove generator g (1-based), substituting `repl` for it everywhere.
    void substituteGenerator(int g, const std::vector<int>& repl) {
        std::vector<int> replInv = inverseWord(repl);
        for (auto& r : p.relators) {
            std::vector<int> out;
            for (int x : r) {
                if (x == g) out.insert(out.end(), repl.begin(), repl.end());
                else if (x == -g) out.insert(out.end(), replInv.begin(), replInv.end());
                else out.push_back(x);
            }
            freeReduce(out);
            r = std::move(out);
        }
        for (auto& r : p.relators)
            for (int& x : r) {
                if (x > g) --x;
                else if (x < -g) ++x;
            }
        --p.gens;
    }

    // Eliminate a generator occurring exactly once in some relator. With
    // allowGrowth false, only apply when the total length cannot grow.
    bool tryEliminate(bool allowGrowth) {
        int bestRel = -1, bestPos = -1;
        long bestCost = 0;
        for (size_t ri = 0; ri < p.relators.size(); ++ri) {
            const auto& r = p.relators[ri];
            std::map<int, int> occ;
            for (int x : r) ++occ[std::abs(x)];
            for (size_t pos = 0; pos < r.size(); ++pos) {
                int g = std::abs(r[pos]);
                if (occ[g] != 1) continue;
                long occElse = 0;
                for (size_t rj = 0; rj < p.relators.size(); ++rj) {
                    if (rj == ri) continue;
                    for (int x : p.relators[rj])
                        if (std::abs(x) == g) ++occElse;
                }
                long growth = occElse * (static_cast<long>(r.size()) - 2) -
                              static_cast<long>(r.size());
                if (bestRel < 0 || growth < bestCost) {
                    bestRel = static_cast<int>(ri);
                    bestPos = static_cast<int>(pos);
                    bestCost = growth;
                }
            }
        }
        if (bestRel < 0) return false;
        if (!allowGrowth && bestCost > 0) return false;

        const std::vector<int> r = p.relators[bestRel];
        int letter = r[bestPos];
        int g = std::abs(letter);
        // r = u * letter * v, so +g = (v u)^-1 resp. -g = (v u).
        std::vector<int> u(r.begin(), r.begin() + bestPos);
        std::vector<int> v(r.begin() + bestPos + 1, r.end());
        std::vector<int> vu = v;
        vu.insert(vu.end(), u.begin(), u.end());
        std::vector<int> repl = (letter > 0) ? inverseWord(vu) : vu;
        p.relators.erase(p.relators.begin() + bestRel);
        substituteGenerator(g, repl);
        charge();
        return true;
    }

    // If more than half of a (cyclic) relator r matches a substring of s,
    // rewrite that part of s with the shorter complement.
    bool trySubstitute() {
        for (size_t i = 0; i < p.relators.size(); ++i) {
            const std::vector<int> r = p.relators[i];
            if (r.size() < 2) continue;
            for (const std::vector<int>& base : {r, inverseWord(r)}) {
                std::vector<int> rr = base;
                rr.insert(rr.end(), base.begin(), base.end());
                for (size_t j = 0; j < p.relators.size(); ++j) {
                    if (j == i) continue;
                    std::vector<int>& s = p.relators[j];
                    size_t half = r.size() / 2;
                    if (s.size() <= half) continue;
                    size_t maxLen = std::min(s.size(), r.size());
                    for (size_t sl = maxLen; sl > half; --sl) {
                        for (size_t sp = 0; sp + sl <= s.size(); ++sp) {
                            for (size_t rp = 0; rp + sl <= rr.size(); ++rp) {
                                if (!std::equal(s.begin() + sp, s.begin() + sp + sl,
                                                rr.begin() + rp)) continue;
                                // s = a m b with m = rot(r) prefix, rot(r) = m w:
                                // replace m by w^-1.
                                size_t start = rp % base.size();
                                std::vector<int> rot(base.begin() + start, base.end());
                                rot.insert(rot.end(), base.begin(), base.begin() + start);
                                std::vector<int> w(rot.begin() + sl, rot.end());
                                std::vector<int> ns(s.begin(), s.begin() + sp);
                                auto winv = inverseWord(w);
                                ns.insert(ns.end(), winv.begin(), winv.end());
                                ns.insert(ns.end(), s.begin() + sp + sl, s.end());
                                freeReduce(ns);
                                if (ns.size() < s.size()) {
                                    s = std::move(ns);
                                    charge();
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
        return false;
    }

    void run() {
        reduceAll();
        bool progress = true;
        while (progress && !spent()) {
            progress = false;
            if (tryEliminate(false)) { reduceAll(); progress = true; continue; }
            if (trySubstitute()) { reduceAll(); progress = true; continue; }
            // A growing elimination still removes a generator, which is what
            // usually unlocks trivial groups.
            if (p.gens > 0 && p.totalLength() < 4000 && tryEliminate(true)) {
                reduceAll();
                progress = true;
            }
        }
    }
};

}  // namespace

GroupPresentation simplifyPresentation(GroupPresentation p, long budget) {
    Simplifier s{std::move(p), budget};
    s.run();
    return std::move(s.p);
}

bool simplifiesToTrivial(const GroupPresentation& p, long budget) {
    return simplifyPresentation(p, budget).trivialPresentation();
}

}  // namespace friends
