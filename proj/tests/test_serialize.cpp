#include <doctest.h>

#include <random>

#include "random.hpp"
#include "serialize.hpp"

using namespace stabgraph;

TEST_CASE("graph json round trip is the identity") {
    StabilizerGraph c = make_graph(4, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}, {}, {});
    CHECK(graph_from_json(graph_to_json(c)) == c);

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 300; ++trial) {
        StabilizerGraph g = random_graph(rng, 1 + rand_below(rng, 10));
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

TEST_CASE("minimal graph json parses") {
    StabilizerGraph g =
        graph_from_json(R"({"n":1,"edges":[],"hollow":[],"loops":[],"signs":[]})");
    CHECK(g.node_count() == 1);
    CHECK_FALSE(g.is_hollow(0));
}

TEST_CASE("graph json schema is strict") {
    auto bad = [](const char* text) {
        CHECK_THROWS_AS(graph_from_json(text), Error);
        try {
            graph_from_json(text);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::schema_error);
        }
    };
    bad(R"({"n":2,"edges":[[1,0]],"hollow":[],"loops":[],"signs":[]})");   // unsorted pair
    bad(R"({"n":2,"edges":[[0,0]],"hollow":[],"loops":[],"signs":[]})");   // self pair
    bad(R"({"n":2,"edges":[[0,1],[0,1]],"hollow":[],"loops":[],"signs":[]})");  // duplicate
    bad(R"({"n":2,"edges":[[0,2]],"hollow":[],"loops":[],"signs":[]})");   // out of range
    bad(R"({"n":2,"edges":[],"hollow":[1,0],"loops":[],"signs":[]})");     // unsorted set
    bad(R"({"n":0,"edges":[],"hollow":[],"loops":[],"signs":[]})");        // empty graph
    bad(R"({"n":2,"edges":[],"hollow":[],"loops":[]})");                   // missing key
    bad(R"({"n":2,"edges":[],"hollow":[],"loops":[],"signs":[],"x":1})");  // extra key
    bad(R"({"n":-1,"edges":[],"hollow":[],"loops":[],"signs":[]})");       // negative
    bad(R"(not json)");
}

TEST_CASE("dot export renders decorations deterministically") {
    StabilizerGraph solid = make_graph(1, {}, {}, {}, {});
    std::string dot = export_dot(solid);
    CHECK(dot ==
          "graph stabilizer_state {\n"
          "  node [shape=circle];\n"
          "  1 [label=\"1\", style=filled, fillcolor=lightgray];\n"
          "}\n");

    // Post-measurement graph of the four-qubit cluster example: node 2
    // hollow, node 3 signed, no loops.
    StabilizerGraph post =
        make_graph(4, EdgeList{{0, 2}, {1, 2}, {1, 3}}, NodeList{1}, {}, NodeList{2});
    std::string text = export_dot(post);
    CHECK(text.find("  2 [label=\"2\"];\n") != std::string::npos);          // unfilled
    CHECK(text.find("  3 [label=\"3\xe2\x88\x92\"") != std::string::npos);  // minus label
    CHECK(text.find(" -- 2;") == std::string::npos);                        // no self edge on 2
    CHECK(text == export_dot(post));

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        StabilizerGraph g = random_graph(rng, 1 + rand_below(rng, 8));
        StabilizerGraph same = g;
        CHECK(export_dot(g) == export_dot(same));
    }
}

TEST_CASE("dot export renders loops as self edges") {
    NodeList loops{0};
    StabilizerGraph g = make_graph(2, EdgeList{{0, 1}}, {}, loops, {});
    std::string dot = export_dot(g);
    CHECK(dot.find("  1 -- 1;\n") != std::string::npos);
    CHECK(dot.find("  1 -- 2;\n") != std::string::npos);
}
