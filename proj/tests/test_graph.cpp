#include <doctest.h>

#include <random>

#include "graph.hpp"
#include "random.hpp"

using namespace stabgraph;

namespace {

// The four-node ring, labelled 1..4 clockwise in diagrams, 0-based here.
StabilizerGraph cluster4() {
    EdgeList edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return make_graph(4, edges, {}, {}, {});
}

}  // namespace

TEST_CASE("make_graph builds the requested decorations") {
    StabilizerGraph g = make_graph(1, {}, {}, {}, {});
    CHECK(g.node_count() == 1);
    CHECK_FALSE(g.is_hollow(0));
    CHECK_FALSE(g.has_loop(0));
    CHECK_FALSE(g.has_sign(0));

    StabilizerGraph c = cluster4();
    CHECK(c.edge_list() == EdgeList{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    NodeList hollow{1}, loops{2}, signs{0, 2};
    StabilizerGraph d = make_graph(3, EdgeList{{0, 1}}, hollow, loops, signs);
    CHECK(d.is_hollow(1));
    CHECK(d.has_loop(2));
    CHECK(d.has_sign(0));
    CHECK(d.has_sign(2));
    CHECK_FALSE(d.has_sign(1));
}

TEST_CASE("make_graph rejects self edges and bad indices") {
    CHECK_THROWS_WITH_AS(make_graph(2, EdgeList{{0, 0}}, {}, {}, {}), "self edges are not allowed",
                         Error);
    try {
        make_graph(2, EdgeList{{0, 2}}, {}, {}, {});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::index_out_of_range);
    }
    NodeList bad{5};
    CHECK_THROWS_AS(make_graph(2, {}, bad, {}, {}), Error);
    CHECK_THROWS_AS(StabilizerGraph(0), Error);
}

TEST_CASE("duplicate edge entries toggle") {
    EdgeList twice{{0, 1}, {1, 0}};
    CHECK_FALSE(make_graph(2, twice, {}, {}, {}).has_edge(0, 1));
    EdgeList thrice{{0, 1}, {0, 1}, {0, 1}};
    CHECK(make_graph(2, thrice, {}, {}, {}).has_edge(0, 1));
}

TEST_CASE("neighbors excludes loops") {
    StabilizerGraph c = cluster4();
    // Ring node at index 1 neighbors indices 0 and 2.
    CHECK(c.neighbor_list(1) == NodeList{0, 2});

    StabilizerGraph isolated = make_graph(2, {}, {}, {}, {});
    CHECK(isolated.neighbor_list(0).empty());

    NodeList loops{0};
    StabilizerGraph looped = make_graph(2, {}, {}, loops, {});
    CHECK(looped.neighbor_list(0).empty());
    CHECK(looped.degree(0) == 0);

    CHECK_THROWS_AS(c.neighbor_list(4), Error);
}

TEST_CASE("toggle_edge complements and is an involution") {
    StabilizerGraph g = make_graph(3, {}, {}, {}, {});
    StabilizerGraph once = toggle_edge(g, 0, 2);
    CHECK(once.has_edge(0, 2));
    CHECK(once.has_edge(2, 0));
    CHECK(toggle_edge(once, 0, 2) == g);
    CHECK_THROWS_AS(toggle_edge(g, 1, 1), Error);

    // The cluster measurement rewrite complements edges 1-3, 1-4 and 3-4 first.
    StabilizerGraph c = cluster4();
    StabilizerGraph stepped = toggle_edge(toggle_edge(toggle_edge(c, 0, 2), 0, 3), 2, 3);
    CHECK(stepped.edge_list() == EdgeList{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("advance_loop cycles loop then sign") {
    StabilizerGraph g = make_graph(1, {}, {}, {}, {});
    StabilizerGraph once = advance_loop(g, 0);
    CHECK(once.has_loop(0));
    CHECK_FALSE(once.has_sign(0));

    StabilizerGraph twice = advance_loop(once, 0);
    CHECK_FALSE(twice.has_loop(0));
    CHECK(twice.has_sign(0));

    // Two advances flip the sign and restore the loop bit.
    NodeList loops{0};
    StabilizerGraph looped = make_graph(1, {}, {}, loops, {});
    StabilizerGraph cycled = advance_loop(advance_loop(looped, 0), 0);
    CHECK(cycled.has_loop(0));
    CHECK(cycled.has_sign(0));
}

TEST_CASE("fill and sign flips are involutions") {
    StabilizerGraph g = make_graph(2, {}, {}, {}, {});
    CHECK(flip_fill(g, 0).is_hollow(0));
    CHECK(flip_fill(flip_fill(g, 0), 0) == g);
    CHECK(flip_sign(g, 1).has_sign(1));
    CHECK(flip_sign(flip_sign(g, 1), 1) == g);
}

TEST_CASE("local complementation on a path makes a triangle") {
    EdgeList path{{0, 1}, {1, 2}};
    StabilizerGraph g = make_graph(3, path, {}, {}, {});
    StabilizerGraph lc = local_complement_node(g, 1);
    CHECK(lc.edge_list() == EdgeList{{0, 1}, {0, 2}, {1, 2}});
    CHECK(local_complement_node(lc, 1) == g);
    CHECK(local_complement_node(g, 0).edge_list() == g.edge_list());  // single neighbor
}

TEST_CASE("local complementation along an edge") {
    EdgeList path{{0, 1}, {1, 2}};
    StabilizerGraph g = make_graph(3, path, {}, {}, {});
    // Node 0 becomes the center.
    StabilizerGraph along = local_complement_edge(g, 0, 1);
    CHECK(along.edge_list() == EdgeList{{0, 1}, {0, 2}});
    CHECK(local_complement_edge(g, 1, 0) == along);

    EdgeList lone{{0, 1}};
    StabilizerGraph pair = make_graph(2, lone, {}, {}, {});
    CHECK(local_complement_edge(pair, 0, 1).edge_list() == pair.edge_list());

    CHECK_THROWS_AS(local_complement_edge(g, 0, 2), Error);
}

TEST_CASE("graph primitives keep the structural invariants") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        node_t n = 1 + rand_below(rng, 8);
        StabilizerGraph g = random_graph(rng, n);
        g.check_valid();
        for (int step = 0; step < 20; ++step) {
            switch (rand_below(rng, 6)) {
                case 0: {
                    node_t j = rand_below(rng, n), k = rand_below(rng, n);
                    if (j != k) g.xor_edge(j, k);
                    break;
                }
                case 1: g.advance(rand_below(rng, n)); break;
                case 2: g.flip_hollow(rand_below(rng, n)); break;
                case 3: g.flip_sign_bit(rand_below(rng, n)); break;
                case 4: g.complement_neighborhood(rand_below(rng, n)); break;
                case 5: g.clear_edges_at(rand_below(rng, n)); break;
            }
            g.check_valid();
        }
    }
}

TEST_CASE("edge iteration agrees with has_edge across word boundaries") {
    std::mt19937_64 rng(13);
    for (node_t n : {63u, 64u, 65u, 129u}) {
        StabilizerGraph g = random_sparse_graph(rng, n, n * 2);
        g.check_valid();
        EdgeList edges = g.edge_list();
        std::size_t count = 0;
        for (node_t j = 0; j < n; ++j)
            for (node_t k = j + 1; k < n; ++k)
                if (g.has_edge(j, k)) ++count;
        CHECK(count == edges.size());
        for (auto [j, k] : edges) {
            CHECK(j < k);
            CHECK(g.has_edge(j, k));
        }
        for (node_t j = 0; j < n; ++j)
            CHECK(g.neighbor_list(j).size() == g.degree(j));
    }
}

TEST_CASE("local complementation is an involution on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        node_t n = 2 + rand_below(rng, 7);
        StabilizerGraph g = random_graph(rng, n);
        node_t j = rand_below(rng, n);
        CHECK(local_complement_node(local_complement_node(g, j), j).edge_list() == g.edge_list());

        NodeList nbrs = g.neighbor_list(j);
        if (!nbrs.empty()) {
            node_t k = nbrs[rand_below(rng, static_cast<node_t>(nbrs.size()))];
            CHECK(local_complement_edge(g, j, k) == local_complement_edge(g, k, j));
        }
    }
}
