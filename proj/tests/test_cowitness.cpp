#include <doctest.h>

#include <cmath>

#include "rindep/cowitness.hpp"
#include "rindep/errors.hpp"
#include "rindep/generators.hpp"
#include "rindep/oracle.hpp"
#include "test_support.hpp"

using namespace rindep;

namespace {

void expect_sound(const Graph& g, const VertexSet& a, int r, int k,
                  const CowitnessCertificate& cert) {
    auto counter = oracle::brute_check_cowitness(g, a, cert.q, r, k,
                                                 {18, 200'000'000});
    if (counter.has_value()) {
        CAPTURE(counter->second);
        FAIL_CHECK("oracle found a cowitness counterexample");
    }
}

} // namespace

TEST_CASE("base case: separator is everything") {
    auto p3 = generate("path:3");
    auto cert = build_cowitness_ext(p3, p3.all_vertices(), p3.all_vertices(), 1, 1);
    CHECK(cert.q == p3.all_vertices());
    CHECK(cert.depth_reached == 0);

    auto single = generate("path:1");
    auto tiny = build_cowitness(single, single.all_vertices(), 1, 1);
    CHECK(tiny.q == single.all_vertices());
    expect_sound(single, single.all_vertices(), 1, 1, tiny);
}

TEST_CASE("P5 r=1 k=1 needs no cowitness vertices") {
    auto p5 = generate("path:5");
    auto cert = build_cowitness(p5, p5.all_vertices(), 1, 1);
    CHECK(cert.q.empty()); // greedy packs a separated pair; nothing is covered
    expect_sound(p5, p5.all_vertices(), 1, 1, cert);
}

TEST_CASE("star r=1 k=1") {
    auto star = generate("star:4");
    auto cert = build_cowitness(star, star.all_vertices(), 1, 1);
    expect_sound(star, star.all_vertices(), 1, 1, cert);
    CHECK(cert.q.contains(0)); // only the center 1-dominates
}

TEST_CASE("C6 r=2 k=1") {
    auto c6 = generate("cycle:6");
    auto cert = build_cowitness(c6, c6.all_vertices(), 2, 1);
    expect_sound(c6, c6.all_vertices(), 2, 1, cert);
    CHECK(cert.q == VertexSet{0, 3});
    CHECK(cert.depth_reached == 2);
}

TEST_CASE("the depth guard converts runaway recursion into a diagnostic") {
    auto c6 = generate("cycle:6");
    CowitnessOptions opts;
    opts.depth_guard = 0;
    CHECK_THROWS_AS(build_cowitness(c6, c6.all_vertices(), 2, 1, opts),
                    rindep::InputError);
}

TEST_CASE("separator containment and size bound across a sweep") {
    for (const auto& g : testsupport::small_corpus()) {
        if (g.vertex_count() == 0) continue;
        for (int r : {1, 2})
            for (int k : {1, 2}) {
                VertexSet s = g.vertex_count() > 2 ? VertexSet{0, 2} : VertexSet{0};
                auto cert = build_cowitness_ext(g, s, g.all_vertices(), r, k);
                CHECK(s.is_subset_of(cert.q));
                for (size_t level = 0; level < cert.level_separator_sizes.size();
                     ++level)
                    CHECK(cert.level_separator_sizes[level] <=
                          s.size() + static_cast<int>(level));
            }
    }
}

TEST_CASE("cowitness soundness across the corpus") {
    for (const auto& g : testsupport::small_corpus()) {
        for (int r : {1, 2})
            for (int k : {1, 2}) {
                auto cert = build_cowitness(g, g.all_vertices(), r, k);
                expect_sound(g, g.all_vertices(), r, k, cert);

                int d = cert.depth_reached;
                long double bound = d * std::pow(static_cast<long double>(k + 1), d) *
                                    std::pow(static_cast<long double>(r + 1),
                                             static_cast<long double>(d) * (d - 1));
                CHECK(static_cast<long double>(cert.q.size()) <= bound);
            }
    }
}

TEST_CASE("soundness holds on restricted targets too") {
    auto grid = generate("grid:3:3");
    VertexSet a{0, 1, 2, 4, 8};
    auto cert = build_cowitness(grid, a, 1, 2);
    expect_sound(grid, a, 1, 2, cert);
}

TEST_CASE("memoization does not change the result") {
    for (const char* spec : {"cycle:8", "grid:3:3", "star:7", "tree:n=9,seed=5"}) {
        auto g = generate(spec);
        CowitnessOptions with, without;
        without.memoize = false;
        auto a = build_cowitness(g, g.all_vertices(), 2, 2, with);
        auto b = build_cowitness(g, g.all_vertices(), 2, 2, without);
        CHECK(a.q == b.q);
    }
}

TEST_CASE("every strategy yields a sound certificate") {
    auto g = generate("grid:3:4");
    for (auto strategy : {SplitterStrategy::ConnectorEcho, SplitterStrategy::MaxDegree,
                          SplitterStrategy::BfsCenter}) {
        CowitnessOptions opts;
        opts.strategy = strategy;
        auto cert = build_cowitness(g, g.all_vertices(), 1, 1, opts);
        expect_sound(g, g.all_vertices(), 1, 1, cert);
    }
}

TEST_CASE("optional early packing surfaces an independent family") {
    auto p5 = generate("path:5");
    CowitnessOptions opts;
    opts.early_independent = true;
    auto cert = build_cowitness(p5, p5.all_vertices(), 1, 1, opts);
    REQUIRE(cert.early_independent.has_value());
    CHECK(cert.early_independent->size() == 2);
    CHECK(is_r_independent(p5, *cert.early_independent, 2));

    // default stays off
    auto plain = build_cowitness(p5, p5.all_vertices(), 1, 1);
    CHECK(!plain.early_independent.has_value());
}
