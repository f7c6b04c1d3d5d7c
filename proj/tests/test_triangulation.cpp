#include "doctest.h"

#include "friends/triangulation.hpp"
#include "fixtures.hpp"

using namespace friends;

TEST_CASE("lone tetrahedron skeleton") {
    Triangulation t = Triangulation::build(1, {});
    CHECK(t.size() == 1);
    CHECK(t.boundaryFaceCount() == 4);
    CHECK(t.vertexCount() == 4);
    CHECK(t.edgeCount() == 6);
    CHECK(t.triangleCount() == 4);
    CHECK(t.valid());
    CHECK(!t.closed());
    for (const auto& v : t.vertices()) CHECK(v.link == LinkType::Disk);
    for (const auto& e : t.edges()) {
        CHECK(e.degree() == 1);
        CHECK(e.boundary);
    }
}

TEST_CASE("perm4 basics") {
    for (int i = 0; i < 24; ++i) {
        Perm4 p = Perm4::fromIndex(i);
        CHECK(p.index() == i);
        CHECK((p * p.inverse()).isIdentity());
        CHECK((p.inverse() * p).isIdentity());
    }
    Perm4 a(1, 2, 0, 3), b(0, 3, 2, 1);
    Perm4 ab = a * b;
    for (int i = 0; i < 4; ++i) CHECK(ab[i] == a[b[i]]);
    CHECK(Perm4().sign() == 1);
    CHECK(Perm4::swap(2, 3).sign() == -1);
}

TEST_CASE("figure-eight complement skeleton") {
    Triangulation t = fixtures::figureEight();
    CHECK(t.valid());
    CHECK(t.connected());
    CHECK(t.orientable());
    CHECK(t.boundaryFaceCount() == 0);
    CHECK(t.vertexCount() == 1);
    CHECK(t.edgeCount() == 2);
    CHECK(t.triangleCount() == 4);
    CHECK(t.ideal());
    CHECK(t.cuspCount() == 1);
    CHECK(t.vertices()[0].link == LinkType::Torus);
    for (const auto& e : t.edges()) {
        CHECK(e.degree() == 6);
        CHECK(!e.boundary);
        CHECK(e.loop());
    }
    // quotient complex Euler characteristic equals the cusp count
    CHECK(t.eulerChar() == 1);
}

TEST_CASE("gluing validation") {
    // A permutation that does not keep the face triple on the face: sending
    // face 0 to face index map[0]; conflicting second gluing must throw.
    std::vector<Gluing> bad = {
        {0, 0, 1, fixtures::perm(0, 1, 2, 3)},
        {0, 0, 1, fixtures::perm(0, 2, 1, 3)},
    };
    CHECK_THROWS_AS(Triangulation::build(2, bad), InvalidGluing);

    // Face glued to itself.
    std::vector<Gluing> self = {{0, 0, 0, fixtures::perm(0, 1, 3, 2)}};
    CHECK_THROWS_AS(Triangulation::build(1, self), InvalidGluing);

    // Out-of-range target.
    std::vector<Gluing> dangling = {{0, 0, 5, fixtures::perm(0, 1, 2, 3)}};
    CHECK_THROWS_AS(Triangulation::build(1, dangling), InvalidGluing);
}

TEST_CASE("relabelling preserves the skeleton") {
    Triangulation t = fixtures::figureEight();
    Triangulation r = t.relabeled({1, 0}, {Perm4(2, 0, 3, 1), Perm4(1, 3, 0, 2)});
    CHECK(r.valid());
    CHECK(r.vertexCount() == t.vertexCount());
    CHECK(r.edgeCount() == t.edgeCount());
    CHECK(r.triangleCount() == t.triangleCount());
    CHECK(r.orientable());
    CHECK(r.cuspCount() == 1);
}

TEST_CASE("oriented copy has all gluings odd") {
    Triangulation t = fixtures::figureEight();
    REQUIRE(t.orientable());
    Triangulation o = t.orientedCopy();
    for (int tet = 0; tet < o.size(); ++tet)
        for (int f = 0; f < 4; ++f)
            if (o.isGlued(tet, f)) CHECK(o.adj(tet, f).map.sign() == -1);
}

TEST_CASE("one-vertex S3 fixtures") {
    for (auto t : {fixtures::twoTetS3(), fixtures::oneTetS3()}) {
        CHECK(t.valid());
        CHECK(t.closed());
        CHECK(t.orientable());
        CHECK(t.vertexCount() == 1);
        CHECK(t.eulerChar() == 0);
        // every edge of a 1-vertex closed triangulation is a loop
        for (const auto& e : t.edges()) CHECK(e.loop());
    }
}
