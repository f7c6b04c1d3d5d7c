#include "doctest.h"

#include <random>

#include "friends/abelian.hpp"
#include "friends/group.hpp"
#include "friends/homology.hpp"
#include "friends/laurent.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace friends;

TEST_CASE("smith normal form against naive oracle") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        int m = 1 + static_cast<int>(rng() % 30);
        int n = 1 + static_cast<int>(rng() % 30);
        IntMatrix a = zeroMatrix(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                a[i][j] = static_cast<int>(rng() % 19) - 9;

        IntMatrix d = a, U, V;
        smithNormalForm(d, &U, &V);
        // SNF really is U*a*V
        IntMatrix ua = zeroMatrix(m, n);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) {
                if (U[i][k] == 0) continue;
                for (int l = 0; l < n; ++l) ua[i][l] += U[i][k] * a[k][l];
            }
        IntMatrix uav = zeroMatrix(m, n);
        for (int i = 0; i < m; ++i)
            for (int l = 0; l < n; ++l) {
                if (ua[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) uav[i][j] += ua[i][l] * V[l][j];
            }
        bool match = true;
        for (int i = 0; i < m && match; ++i)
            for (int j = 0; j < n && match; ++j)
                if (uav[i][j] != d[i][j]) match = false;
        CHECK(match);

        auto expect = oracles::naiveInvariantFactors(a);
        std::vector<Int> got;
        for (int i = 0; i < std::min(m, n); ++i)
            if (d[i][i] != 0) got.push_back(d[i][i]);
        REQUIRE(got.size() == expect.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
        for (size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i + 1] % got[i] == 0);
    }
}

TEST_CASE("Vinv accumulation is the inverse of V") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int m = 1 + static_cast<int>(rng() % 8);
        int n = 1 + static_cast<int>(rng() % 8);
        IntMatrix a = zeroMatrix(m, n);
        for (auto& row : a)
            for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
        IntMatrix d = a, V, Vinv;
        smithNormalForm(d, nullptr, &V, &Vinv);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int acc = 0;
                for (int k = 0; k < n; ++k) acc += V[i][k] * Vinv[k][j];
                CHECK(acc == (i == j ? 1 : 0));
            }
    }
}

TEST_CASE("free reduction and inverse words") {
    std::vector<int> w = {1, 2, -2, -1, 3};
    freeReduce(w);
    CHECK(w == std::vector<int>{3});
    std::vector<int> c = {1, 2, 3, -1};
    cyclicReduce(c);
    CHECK(c == std::vector<int>{2, 3});
    CHECK(inverseWord({1, -2, 3}) == std::vector<int>{-3, 2, -1});
}

TEST_CASE("tietze: single-relator trivialities") {
    GroupPresentation p;
    p.gens = 1;
    p.relators = {{1}};
    CHECK(simplifiesToTrivial(p));

    // <a, b | ab> is infinite cyclic, not trivial
    GroupPresentation q;
    q.gens = 2;
    q.relators = {{1, 2}};
    auto s = simplifyPresentation(q);
    CHECK(s.gens == 1);
    CHECK(s.relators.empty());
}

TEST_CASE("tietze: Z^2 presentation is retained") {
    GroupPresentation p;
    p.gens = 2;
    p.relators = {{1, 2, -1, -2}};
    auto s = simplifyPresentation(p);
    CHECK(s.gens == 2);
    REQUIRE(s.relators.size() == 1);
    CHECK(s.relators[0].size() == 4);
    CHECK(abelianization(s) == AbelianGroup{2, {}});
}

TEST_CASE("figure-eight fundamental group") {
    Triangulation t = fixtures::figureEight();
    GroupPresentation g = fundamentalGroup(t);
    CHECK(abelianization(g) == AbelianGroup{1, {}});
    auto s = simplifyPresentation(g);
    CHECK(s.gens == 2);
    CHECK(s.relators.size() == 1);

    CHECK(homologyH1(t) == AbelianGroup{1, {}});
}

TEST_CASE("homology equals abelianized fundamental group on fixtures") {
    for (const Triangulation& t :
         {fixtures::figureEight(), fixtures::twoTetS3(), fixtures::oneTetS3()}) {
        CHECK(homologyH1(t) == abelianization(fundamentalGroup(t)));
    }
}

TEST_CASE("S3 fixtures have trivial group") {
    CHECK(simplifiesToTrivial(fundamentalGroup(fixtures::twoTetS3())));
    CHECK(simplifiesToTrivial(fundamentalGroup(fixtures::oneTetS3())));
    CHECK(homologyH1(fixtures::twoTetS3()).trivial());
}

TEST_CASE("laurent arithmetic and normalization") {
    Laurent t = Laurent::monomial(1, 1);
    Laurent p = t * t - Laurent::monomial(3, 1) + Laurent(Int(1));
    CHECK(p.str() == "t^2 - 3*t + 1");
    CHECK(p.normalizedUnits() == p);
    CHECK(p.palindromic());
    Laurent shifted = Laurent::monomial(-1, -3) * p;
    CHECK(shifted.normalizedUnits() == p);
    CHECK(p.evaluate(-1) == 5);
    // gcd
    Laurent a = p * (t - Laurent(Int(1)));
    Laurent b = p * (t + Laurent(Int(1)));
    CHECK(Laurent::gcd(a, b) == p);
}

// Alexander oracle values from Seifert matrices, computed independently:
//   trefoil  V = [[-1,1],[0,-1]]:  det(V - tV^T) = t^2 - t + 1
//   fig-8    V = [[ 1,1],[0,-1]]:  det(V - tV^T) = -(t^2 - 3t + 1)
TEST_CASE("alexander polynomial via Fox calculus") {
    // unknot: <a | > has Alexander 1
    GroupPresentation unknot;
    unknot.gens = 1;
    CHECK(alexanderPolynomial(unknot).str() == "1");

    // trefoil Wirtinger presentation <a,b | abab^-1a^-1b^-1>
    GroupPresentation tref;
    tref.gens = 2;
    tref.relators = {{1, 2, 1, -2, -1, -2}};
    Laurent expected = Laurent::monomial(1, 2) - Laurent::monomial(1, 1) + Laurent(Int(1));
    CHECK(alexanderPolynomial(tref) == expected);
    CHECK(alexanderPolynomial(tref).palindromic());

    // figure-eight from the triangulation's dual-spine presentation
    Laurent fig8 = alexanderPolynomial(fundamentalGroup(fixtures::figureEight()));
    Laurent expected8 =
        Laurent::monomial(1, 2) - Laurent::monomial(3, 1) + Laurent(Int(1));
    CHECK(fig8 == expected8);
}

TEST_CASE("alexander is invariant under tietze simplification") {
    GroupPresentation tref;
    tref.gens = 2;
    tref.relators = {{1, 2, 1, -2, -1, -2}};
    // pad with a redundant generator c = ab and a redundant relator
    GroupPresentation padded;
    padded.gens = 3;
    padded.relators = {{1, 2, 1, -2, -1, -2}, {3, -2, -1}, {3, 3, -3, -3}};
    CHECK(alexanderPolynomial(padded) == alexanderPolynomial(tref));
    auto simp = simplifyPresentation(padded);
    CHECK(alexanderPolynomial(simp) == alexanderPolynomial(tref));
}
