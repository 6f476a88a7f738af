#include <doctest.h>

#include <map>
#include <random>

#include "rindep/generators.hpp"
#include "rindep/profiles.hpp"
#include "test_support.hpp"

using namespace rindep;

TEST_CASE("vertex_profile truncates at r+1") {
    auto p5 = generate("path:5");
    auto p = vertex_profile(p5, {0, 4}, 2, 3);
    CHECK(p.values == std::vector<int>{2, 2});

    auto c6 = generate("cycle:6");
    auto far = vertex_profile(c6, {0}, 3, 2);
    CHECK(far.values == std::vector<int>{3}); // dist 3 truncated to r+1

    auto self = vertex_profile(c6, {0, 2}, 2, 1);
    CHECK(self.values == std::vector<int>{2, 0});
}

TEST_CASE("profiles over different references never compare equal") {
    auto p3 = generate("path:3");
    auto a = vertex_profile(p3, {0}, 2, 1);
    auto b = vertex_profile(p3, {2}, 0, 1);
    CHECK(a.values == b.values);
    CHECK(a != b);
}

TEST_CASE("all_profiles matches vertex_profile") {
    auto c6 = generate("cycle:6");
    auto table = all_profiles(c6, {0, 3}, 2);
    CHECK(table.row(1) == std::vector<int>{1, 2});
    for (int v = 0; v < 6; ++v)
        CHECK(table.profile_of(v) == vertex_profile(c6, {0, 3}, v, 2));

    auto empty = all_profiles(c6, {}, 2);
    for (int v = 0; v < 6; ++v) CHECK(empty.row(v).empty());

    auto p3 = generate("path:3");
    auto star_like = all_profiles(p3, {1}, 1);
    CHECK(star_like.row(0) == std::vector<int>{1});
    CHECK(star_like.row(1) == std::vector<int>{0});
    CHECK(star_like.row(2) == std::vector<int>{1});
}

TEST_CASE("set_profile is the pointwise minimum over members") {
    auto c6 = generate("cycle:6");
    CHECK(set_profile(c6, {0}, {2, 5}, 2).values == std::vector<int>{1});
    CHECK(set_profile(c6, {0, 3}, {}, 2).values == std::vector<int>{3, 3});
    CHECK(set_profile(c6, {0, 3}, {0, 1, 2, 3, 4, 5}, 2).values ==
          std::vector<int>{0, 0});

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = testsupport::random_graph(rng, 4 + trial % 8, 0.3);
        auto s = testsupport::random_subset(rng, g.vertex_count(), 0.4);
        auto x = testsupport::random_subset(rng, g.vertex_count(), 0.4);
        int r = 1 + trial % 3;
        auto combined = set_profile(g, s, x, r);
        for (int i = 0; i < s.size(); ++i) {
            int expect = r + 1;
            for (int xv : x)
                expect = std::min(expect, vertex_profile(g, s, xv, r).values[i]);
            CHECK(combined.values[i] == expect);
        }
    }
}

TEST_CASE("trace unions per-center balls and ignores negatives") {
    auto p5 = generate("path:5");
    CHECK(trace(p5, {0}, {2}) == VertexSet{0, 1, 2});
    CHECK(trace(p5, {0, 4}, {-1, -1}).empty());

    auto c6 = generate("cycle:6");
    CHECK(trace(c6, {0, 3}, {1, 0}) == VertexSet{0, 1, 3, 5});
}

TEST_CASE("captured_region examples") {
    auto c6 = generate("cycle:6");
    CHECK(captured_region(c6, {0}, {2}, 2) == VertexSet{0});
    CHECK(captured_region(c6, {}, {2}, 2).empty());
    // member of X inside Q: full radius around that center
    CHECK(ball(c6, {1}, 2).is_subset_of(captured_region(c6, {1, 4}, {1}, 2)));
}

TEST_CASE("captured_region equals the pairwise capture set") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = testsupport::random_graph(rng, 4 + trial % 9, 0.3);
        auto q = testsupport::random_subset(rng, g.vertex_count(), 0.35);
        auto x = testsupport::random_subset(rng, g.vertex_count(), 0.35);
        int r = 1 + trial % 3;
        auto region = captured_region(g, q, x, r);
        for (int a = 0; a < g.vertex_count(); ++a)
            CHECK(region.contains(a) == captures_pair(g, q, x, a, r).has_value());
    }
}

TEST_CASE("equal profiles imply equal capture outcomes") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testsupport::random_graph(rng, 5 + trial % 8, 0.3);
        auto q = testsupport::random_subset(rng, g.vertex_count(), 0.4);
        auto x = testsupport::random_subset(rng, g.vertex_count(), 0.4);
        int r = 1 + trial % 3;
        auto table = all_profiles(g, q, r);
        std::map<std::vector<int>, bool> outcome;
        for (int a = 0; a < g.vertex_count(); ++a) {
            bool captured = captures_pair(g, q, x, a, r).has_value();
            auto [it, fresh] = outcome.emplace(table.row(a), captured);
            if (!fresh) CHECK(it->second == captured);
        }
    }
}
