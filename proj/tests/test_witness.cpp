#include <doctest.h>

#include <random>

#include "rindep/errors.hpp"
#include "rindep/generators.hpp"
#include "rindep/oracle.hpp"
#include "rindep/witness.hpp"
#include "test_support.hpp"

using namespace rindep;

TEST_CASE("check_witness on C6") {
    auto c6 = generate("cycle:6");
    CHECK(check_witness(c6, c6.all_vertices(), 2, 3).is_witness);

    auto empty_q = check_witness(c6, {}, 2, 2);
    REQUIRE(!empty_q.is_witness);
    CHECK(empty_q.uncaptured == VertexSet{0, 1}); // first k vertices

    auto one_q = check_witness(c6, {0}, 2, 2);
    REQUIRE(!one_q.is_witness);
    CHECK(!captures_set(c6, {0}, one_q.uncaptured, 2).has_value());
}

TEST_CASE("k beyond the vertex count is vacuously witnessed") {
    auto p3 = generate("path:3");
    CHECK(check_witness(p3, {}, 1, 4).is_witness);
    CHECK_THROWS_AS(check_witness(p3, {}, 1, 0), InputError);
}

TEST_CASE("witness decisions agree with the subset oracle") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = testsupport::random_graph(rng, 4 + trial % 9, 0.3);
        auto q = testsupport::random_subset(rng, g.vertex_count(), 0.4);
        int r = 1 + trial % 3;
        int k = 1 + trial % 4;
        auto mine = check_witness(g, q, r, k);
        auto brute = oracle::brute_check_witness(g, q, r, k);
        CHECK(mine.is_witness == !brute.has_value());
        if (!mine.is_witness) {
            CHECK(mine.uncaptured.size() == k);
            CHECK(!captures_set(g, q, mine.uncaptured, r).has_value());
        }
    }
}

TEST_CASE("multiplicity: a profile class is reused only up to its size") {
    // Two leaves share a profile; a third copy must not be fabricated.
    auto star = generate("star:2");
    auto res = check_witness(star, {0}, 2, 3);
    CHECK(res.is_witness); // every 3-subset of a 3-vertex star is captured
}

TEST_CASE("conflict_count") {
    auto c6 = generate("cycle:6");
    CHECK(conflict_count(c6, {0, 3}, 2) == 0);
    CHECK(conflict_count(c6, {0, 1}, 2) == 2);
    CHECK(conflict_count(c6, {4}, 2) == 0);
    CHECK(conflict_count(c6, {0, 1, 3}, 2) == 3); // 3 is within 2 of 1
}

TEST_CASE("refinement walks to an independent pair on C6") {
    auto c6 = generate("cycle:6");
    RefineStats stats;
    auto out = refine_to_independent(c6, {}, {0, 1}, 2, 2, &stats);
    CHECK(is_r_independent(c6, out, 2));
    // smallest conflicted vertex 0 leaves; 4 is the first vertex outside
    // the 2-ball of {1}
    CHECK(out == VertexSet{1, 4});
    CHECK(stats.iterations <= 2);
    for (size_t i = 1; i < stats.conflict_trace.size(); ++i)
        CHECK(stats.conflict_trace[i] < stats.conflict_trace[i - 1]);
}

TEST_CASE("refinement leaves independent input untouched") {
    auto c6 = generate("cycle:6");
    auto out = refine_to_independent(c6, {}, {0, 3}, 2, 2);
    CHECK(out == VertexSet{0, 3});
}

TEST_CASE("refinement on P5 with r=1") {
    auto p5 = generate("path:5");
    RefineStats stats;
    auto out = refine_to_independent(p5, {}, {0, 1}, 1, 2, &stats);
    CHECK(is_r_independent(p5, out, 1));
    CHECK(out == VertexSet{1, 3});
    CHECK(stats.iterations == 1); // one swap suffices
}

TEST_CASE("a false cowitness promise is detected") {
    auto k3 = generate("clique:3");
    CHECK_THROWS_AS(refine_to_independent(k3, {}, {0, 1}, 1, 2), PromiseViolation);

    // handing over an already-captured set is rejected up front
    auto c6 = generate("cycle:6");
    CHECK_THROWS_AS(refine_to_independent(c6, {1}, {0, 2}, 2, 2), PromiseViolation);
}

TEST_CASE("refinement preserves uncapturedness and size") {
    std::mt19937_64 rng(71);
    int runs = 0;
    for (int trial = 0; trial < 200 && runs < 60; ++trial) {
        auto g = testsupport::random_graph(rng, 5 + trial % 8, 0.25);
        int r = 1 + trial % 2;
        int k = 2 + trial % 2;
        if (!oracle::brute_independent(g, r, k)) continue; // promise needs a yes-instance
        auto q = testsupport::random_subset(rng, g.vertex_count(), 0.3);
        auto check = check_witness(g, q, r, k);
        if (check.is_witness) continue;
        // Valid promise only when q is actually a (k-1, r)-cowitness.
        if (oracle::brute_check_cowitness(g, g.all_vertices(), q, r, k - 1)) continue;
        ++runs;
        RefineStats stats;
        auto out = refine_to_independent(g, q, check.uncaptured, r, k, &stats);
        CHECK(out.size() == k);
        CHECK(is_r_independent(g, out, r));
        CHECK(!captures_set(g, q, out, r).has_value());
        CHECK(stats.iterations <= k);
    }
    CHECK(runs > 0);
}
