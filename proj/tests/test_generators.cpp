#include <doctest.h>

#include "rindep/errors.hpp"
#include "rindep/generators.hpp"
#include "rindep/oracle.hpp"

using namespace rindep;

TEST_CASE("basic families") {
    auto p5 = generate("path:5");
    CHECK(p5.vertex_count() == 5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.has_edge(2, 3));

    auto c6 = generate("cycle:6");
    CHECK(c6.edge_count() == 6);
    CHECK(c6.has_edge(5, 0));

    auto grid = generate("grid:3:4");
    CHECK(grid.vertex_count() == 12);
    CHECK(grid.edge_count() == 17);
    CHECK(grid.has_edge(0, 4)); // row-major vertical edge

    auto star = generate("star:4");
    CHECK(star.vertex_count() == 5);
    CHECK(star.degree(0) == 4);

    auto k4 = generate("clique:4");
    CHECK(k4.edge_count() == 6);

    auto tree = generate("tree:n=9,seed=3");
    CHECK(tree.vertex_count() == 9);
    CHECK(tree.edge_count() == 8);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(generate("cycle:2"), InputError);
    CHECK_THROWS_AS(generate("path:-3"), InputError);
    CHECK_THROWS_AS(generate("blob:4"), InputError);
    CHECK_THROWS_AS(generate("rbd:n=5,q=2"), InputError);
    CHECK_THROWS_AS(generate("subdiv:clique:5"), InputError);
}

TEST_CASE("seeded families are reproducible") {
    auto a = generate("rbd:n=30,d=3,seed=7");
    auto b = generate("rbd:n=30,d=3,seed=7");
    CHECK(a.edges() == b.edges());
    for (int v = 0; v < a.vertex_count(); ++v) CHECK(a.degree(v) <= 3);

    auto c = generate("rbd:n=30,d=3,seed=8");
    CHECK(a.edges() != c.edges());

    // default seed flows into seedless specs
    auto t1 = generate("tree:n=12", 5);
    auto t2 = generate("tree:n=12,seed=5");
    CHECK(t1.edges() == t2.edges());
}

TEST_CASE("subdivision identities") {
    auto k3 = generate("clique:3");
    CHECK(subdivide(k3, 0).edges() == k3.edges());

    auto c6ish = subdivide(k3, 1);
    CHECK(c6ish.vertex_count() == 6);
    CHECK(c6ish.edge_count() == 6);
    for (int v = 0; v < 6; ++v) CHECK(c6ish.degree(v) == 2); // a 6-cycle

    auto k5sub = generate("subdiv:clique:5:r=1");
    CHECK(k5sub.vertex_count() == 15);
    CHECK(k5sub.edge_count() == 20);
}

TEST_CASE("subdivision scales original distances by r+1") {
    for (const char* base : {"clique:5", "cycle:5", "grid:2:3"}) {
        auto g = generate(base);
        auto before = oracle::all_pairs_distances(g);
        for (int r : {1, 2}) {
            auto sub = subdivide(g, r);
            auto after = oracle::all_pairs_distances(sub);
            for (int u = 0; u < g.vertex_count(); ++u)
                for (int v = 0; v < g.vertex_count(); ++v)
                    CHECK(after[u][v] == (r + 1) * before[u][v]);
        }
    }
}
