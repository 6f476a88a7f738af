// Exercises the shared-library surface exactly as an external client would:
// only rindep.h, no C++ core headers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "rindep.h"

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    rindep_string_free(s);
    return out;
}

std::vector<int> result_set(const rindep_result* res) {
    std::vector<int> out;
    for (int i = 0; i < rindep_result_set_len(res); ++i)
        out.push_back(rindep_result_set_get(res, i));
    return out;
}

} // namespace

TEST_CASE("generate, inspect, serialize") {
    rindep_graph* g = nullptr;
    REQUIRE(rindep_graph_generate("cycle:6", 0, &g) == RINDEP_OK);
    CHECK(rindep_graph_order(g) == 6);
    CHECK(rindep_graph_size(g) == 6);
    CHECK(std::string(rindep_graph_label(g, 5)) == "5");
    CHECK(rindep_graph_label(g, 6) == nullptr);
    CHECK(rindep_graph_vertex_by_label(g, "3") == 3);

    std::string text = take(rindep_graph_edge_list(g));
    CHECK(text == "0 1\n1 2\n2 3\n3 4\n0 5\n4 5\n");
    rindep_graph_free(g);

    rindep_graph* bad = nullptr;
    CHECK(rindep_graph_generate("blob:3", 0, &bad) == RINDEP_ERR_ARGUMENT);
    CHECK(std::string(rindep_error_message()).find("blob") != std::string::npos);
}

TEST_CASE("parse with warnings and labels") {
    rindep_graph* g = nullptr;
    REQUIRE(rindep_graph_parse("a b\nb a\nc c\nb c\n", &g) == RINDEP_OK);
    CHECK(rindep_graph_order(g) == 3);
    CHECK(rindep_graph_size(g) == 2);
    CHECK(rindep_graph_duplicate_warnings(g) == 1);
    CHECK(rindep_graph_loop_warnings(g) == 1);
    CHECK(rindep_graph_vertex_by_label(g, "c") == 2);
    rindep_graph_free(g);

    rindep_graph* bad = nullptr;
    CHECK(rindep_graph_parse("a\n", &bad) == RINDEP_ERR_PARSE);
}

TEST_CASE("solve across algorithms") {
    rindep_graph* g = nullptr;
    REQUIRE(rindep_graph_generate("cycle:6", 0, &g) == RINDEP_OK);

    for (const char* algo : {"ladder", "direct", "brute"}) {
        rindep_result* res = nullptr;
        REQUIRE(rindep_solve(g, 2, 2, algo, "bfs-center", 0, "oracle", "cycle:6",
                             &res) == RINDEP_OK);
        CHECK(rindep_result_kind(res) == RINDEP_RESULT_INDEPENDENT);
        CHECK(rindep_result_set_len(res) == 2);
        CHECK(rindep_result_wall_ms(res) >= 0.0);
        std::string json = take(rindep_result_render(res, "json"));
        CHECK(json.find("\"decision\":\"independent\"") != std::string::npos);
        CHECK(json.find("\"schema\":\"rindep-result-v1\"") != std::string::npos);
        rindep_result_free(res);
    }

    rindep_result* no = nullptr;
    REQUIRE(rindep_solve(g, 2, 3, "ladder", "bfs-center", 0, "oracle", "cycle:6",
                         &no) == RINDEP_OK);
    CHECK(rindep_result_kind(no) == RINDEP_RESULT_NO_SOLUTION);
    std::string plain = take(rindep_result_render(no, "plain"));
    CHECK(plain.find("decision: no-solution") != std::string::npos);
    rindep_result_free(no);

    rindep_result* bad = nullptr;
    CHECK(rindep_solve(g, 2, 2, "magic", "bfs-center", 0, "none", "", &bad) ==
          RINDEP_ERR_ARGUMENT);
    CHECK(rindep_solve(g, 0, 2, "ladder", "bfs-center", 0, "none", "", &bad) ==
          RINDEP_ERR_ARGUMENT);
    rindep_graph_free(g);
}

TEST_CASE("oracle verification respects its budget") {
    rindep_graph* g = nullptr;
    REQUIRE(rindep_graph_generate("path:40", 0, &g) == RINDEP_OK);
    rindep_result* res = nullptr;
    CHECK(rindep_solve(g, 2, 2, "ladder", "bfs-center", 0, "oracle", "path:40",
                       &res) == RINDEP_ERR_BUDGET);
    // the same instance passes with fast verification
    REQUIRE(rindep_solve(g, 2, 2, "ladder", "bfs-center", 0, "fast", "path:40",
                         &res) == RINDEP_OK);
    CHECK(rindep_result_kind(res) == RINDEP_RESULT_INDEPENDENT);
    rindep_result_free(res);
    rindep_graph_free(g);
}

TEST_CASE("witness check") {
    rindep_graph* g = nullptr;
    REQUIRE(rindep_graph_generate("cycle:6", 0, &g) == RINDEP_OK);

    std::vector<int> all{0, 1, 2, 3, 4, 5};
    rindep_result* res = nullptr;
    REQUIRE(rindep_witness_check(g, all.data(), 6, 2, 3, "cycle:6", &res) ==
            RINDEP_OK);
    CHECK(rindep_result_kind(res) == RINDEP_RESULT_IS_WITNESS);
    rindep_result_free(res);

    std::vector<int> weak{0};
    REQUIRE(rindep_witness_check(g, weak.data(), 1, 2, 2, "cycle:6", &res) ==
            RINDEP_OK);
    CHECK(rindep_result_kind(res) == RINDEP_RESULT_UNCAPTURED);
    CHECK(rindep_result_set_len(res) == 2);
    std::string json = take(rindep_result_render(res, "json"));
    CHECK(json.find("\"schema\":\"rindep-witness-check-v1\"") != std::string::npos);
    rindep_result_free(res);
    rindep_graph_free(g);
}

TEST_CASE("records are byte-stable apart from wall time") {
    auto strip_wall = [](std::string s) {
        auto at = s.find("\"wall_ms\":");
        REQUIRE(at != std::string::npos);
        auto end = s.find_first_of(",}", at);
        return s.erase(at, end - at);
    };
    std::string first, second;
    for (std::string* out : {&first, &second}) {
        rindep_graph* g = nullptr;
        REQUIRE(rindep_graph_generate("grid:3:4", 0, &g) == RINDEP_OK);
        rindep_result* res = nullptr;
        REQUIRE(rindep_solve(g, 2, 3, "direct", "bfs-center", 0, "fast", "grid:3:4",
                             &res) == RINDEP_OK);
        *out = strip_wall(take(rindep_result_render(res, "json")));
        rindep_result_free(res);
        rindep_graph_free(g);
    }
    CHECK(first == second);
}

TEST_CASE("cowitness certificates") {
    rindep_graph* g = nullptr;
    REQUIRE(rindep_graph_generate("star:4", 0, &g) == RINDEP_OK);
    rindep_result* res = nullptr;
    REQUIRE(rindep_cowitness(g, 1, 1, "bfs-center", "star:4", &res) == RINDEP_OK);
    CHECK(rindep_result_kind(res) == RINDEP_RESULT_COWITNESS);
    auto q = result_set(res);
    CHECK(!q.empty());
    std::string json = take(rindep_result_render(res, "json"));
    CHECK(json.find("\"schema\":\"rindep-cowitness-v1\"") != std::string::npos);
    rindep_result_free(res);
    rindep_graph_free(g);
}
