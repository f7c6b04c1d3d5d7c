#pragma once

#include <string>
#include <vector>

#include "friends/abelian.hpp"
#include "friends/triangulation.hpp"

namespace friends {

// Finite group presentation. Letters are nonzero ints: +g for generator g-1,
// -g for its inverse (g in 1..gens). Relators are kept freely reduced.
struct GroupPresentation {
    int gens = 0;
    std::vector<std::vector<int>> relators;

    long totalLength() const {
        long n = 0;
        for (const auto& r : relators) n += static_cast<long>(r.size());
        return n;
    }
    bool trivialPresentation() const { return gens == 0; }
    bool freeOfRank(int k) const {
        return gens == k && relators.empty();
    }
    std::string str() const;
};

void freeReduce(std::vector<int>& word);
void cyclicReduce(std::vector<int>& word);
std::vector<int> inverseWord(const std::vector<int>& word);

// Exponent-sum matrix (one row per relator).
IntMatrix abelianizedRelations(const GroupPresentation& p);
AbelianGroup abelianization(const GroupPresentation& p);

// Fundamental group of the dual spine: generators dual to internal triangles
// outside a spanning tree of the face-pairing graph, one relator per internal
// edge class. For closed, ideal and bounded triangulations alike this
// presents the fundamental group of the underlying compact manifold.
struct DualPresentation {
    GroupPresentation group;
    // triangle class -> generator (1-based); 0 for spanning-tree or boundary
    // triangles. The sign convention: crossing a triangle from its front
    // embedding's side reads the generator positively.
    std::vector<int> triangleGenerator;
};

DualPresentation fundamentalGroupDual(const Triangulation& t);
GroupPresentation fundamentalGroup(const Triangulation& t);

// Tietze simplification: relator reduction, generator elimination and greedy
// common-substring rewriting until no improvement or the step budget runs
// out. Never changes the isomorphism class.
GroupPresentation simplifyPresentation(GroupPresentation p, long budget = 10000);

// True if the presentation simplifies to zero generators within the budget.
bool simplifiesToTrivial(const GroupPresentation& p, long budget = 10000);

}  // namespace friends
