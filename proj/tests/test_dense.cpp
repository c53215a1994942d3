#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dense.hpp"
#include "equivalence.hpp"
#include "random.hpp"

using namespace stabgraph;
using namespace stabgraph::oracle;

namespace {

constexpr double tol = 1e-12;

bool amp_is(const DenseState& s, std::size_t i, double re, double im) {
    return std::abs(s.amplitudes()[i] - amp_t(re, im)) < 1e-9;
}

}  // namespace

TEST_CASE("graph_to_state frozen small cases") {
    const double r = 1.0 / std::sqrt(2.0);

    StabilizerGraph solid = make_graph(1, {}, {}, {}, {});
    DenseState plus = graph_to_state(solid);
    CHECK(amp_is(plus, 0, r, 0));
    CHECK(amp_is(plus, 1, r, 0));

    NodeList hollow{0};
    DenseState zero = graph_to_state(make_graph(1, {}, hollow, {}, {}));
    CHECK(amp_is(zero, 0, 1, 0));
    CHECK(amp_is(zero, 1, 0, 0));

    EdgeList edge{{0, 1}};
    DenseState pair = graph_to_state(make_graph(2, edge, {}, {}, {}));
    CHECK(amp_is(pair, 0, 0.5, 0));
    CHECK(amp_is(pair, 1, 0.5, 0));
    CHECK(amp_is(pair, 2, 0.5, 0));
    CHECK(amp_is(pair, 3, -0.5, 0));

    // Hollow node with a loop: S acts before the H, giving H S H |0>.
    NodeList loop{0};
    DenseState hsh = graph_to_state(make_graph(1, {}, hollow, loop, {}));
    CHECK(amp_is(hsh, 0, 0.5, 0.5));
    CHECK(amp_is(hsh, 1, 0.5, -0.5));
}

TEST_CASE("graph_to_state is normalized and capped") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        StabilizerGraph g = random_graph(rng, 1 + rand_below(rng, 8));
        CHECK(std::abs(graph_to_state(g).norm() - 1.0) < tol);
    }
    StabilizerGraph big(15);
    CHECK_THROWS_AS(graph_to_state(big), Error);
}

TEST_CASE("apply_pauli basics") {
    DenseState plus = graph_to_state(make_graph(1, {}, {}, {}, {}));
    CHECK(apply_pauli(plus, PauliProduct{"I"}) == plus);

    DenseState minus = apply_pauli(plus, PauliProduct{"Z"});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(amp_is(minus, 0, r, 0));
    CHECK(amp_is(minus, 1, -r, 0));

    NodeList hollow{0};
    DenseState zero = graph_to_state(make_graph(1, {}, hollow, {}, {}));
    DenseState y = apply_pauli(zero, PauliProduct{"Y"});
    CHECK(amp_is(y, 0, 0, 0));
    CHECK(amp_is(y, 1, 0, 1));  // Y|0> = i|1>

    CHECK_THROWS_AS(apply_pauli(plus, PauliProduct{"ZZ"}), Error);
}

TEST_CASE("project splits |+> fairly") {
    DenseState plus = graph_to_state(make_graph(1, {}, {}, {}, {}));
    Projection p = project(plus, PauliProduct{"Z"}, 0);
    CHECK(std::abs(p.probability - 0.5) < tol);
    REQUIRE(p.post);
    CHECK(amp_is(*p.post, 0, 1, 0));
    CHECK(amp_is(*p.post, 1, 0, 0));
}

TEST_CASE("projection probabilities are a stabilizer trichotomy") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        node_t n = 1 + rand_below(rng, 6);
        StabilizerGraph g = random_graph(rng, n);
        DenseState psi = graph_to_state(g);
        PauliProduct m = random_product(rng, n);
        Projection p0 = project(psi, m, 0);
        Projection p1 = project(psi, m, 1);
        CHECK(std::abs(p0.probability + p1.probability - 1.0) < tol);
        bool tri = std::abs(p0.probability) < tol || std::abs(p0.probability - 0.5) < tol ||
                   std::abs(p0.probability - 1.0) < tol;
        CHECK(tri);
        // Projecting the post state again is certain.
        for (int a = 0; a <= 1; ++a) {
            const Projection& p = a ? p1 : p0;
            if (p.post) CHECK(std::abs(project(*p.post, m, a).probability - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("the leading-X identity holds exactly on simplified graphs") {
    // M|psi> built by the graph circuit over X-flipped |0...0>, with the
    // (-1)^b phase, amplitude for amplitude -- not just up to phase.
    std::uint64_t checked = 0;
    for (node_t n = 1; n <= 4; ++n) {
        const std::uint64_t edge_codes = std::uint64_t(1) << (n * (n - 1) / 2);
        const std::uint32_t deco = std::uint32_t(1) << n;
        for (std::uint64_t e = 0; e < edge_codes; ++e)
            for (std::uint32_t h = 0; h < deco; ++h)
                for (std::uint32_t l = 0; l < deco; ++l)
                    for (std::uint32_t s = 0; s < deco; ++s) {
                        StabilizerGraph g = graph_from_code(n, e, h, l, s);
                        DenseState psi = graph_to_state(g);
                        for (std::uint32_t set = 1; set < deco; ++set) {
                            NodeList measured;
                            for (node_t j = 0; j < n; ++j)
                                if ((set >> j) & 1) measured.push_back(j);
                            if (!is_simplified(g, measured)) continue;

                            PauliProduct m = PauliProduct::z_on(n, measured);
                            DenseState lhs = apply_pauli(psi, m);

                            // Nodes of the eligible set collect the leading Xs.
                            int b = 0;
                            NodeList solid_even;
                            for (node_t j : measured) {
                                if (g.is_hollow(j)) {
                                    if (g.has_sign(j)) b ^= 1;
                                    continue;
                                }
                                node_t hollow_neighbors = 0;
                                for (node_t v : g.neighbor_list(j))
                                    if (g.is_hollow(v) &&
                                        std::binary_search(measured.begin(), measured.end(), v))
                                        ++hollow_neighbors;
                                if ((hollow_neighbors & 1) == 0) solid_even.push_back(j);
                            }
                            DenseState rhs(n);
                            for (node_t j : solid_even) rhs.apply_x(j);
                            apply_graph_circuit(rhs, g);
                            if (b)
                                for (amp_t& a : rhs.amplitudes()) a = -a;

                            double err = 0;
                            for (std::size_t i = 0; i < lhs.amplitudes().size(); ++i)
                                err += std::norm(lhs.amplitudes()[i] - rhs.amplitudes()[i]);
                            CHECK(std::sqrt(err) < 1e-9);
                            ++checked;
                        }
                    }
    }
    CHECK(checked > 100000);
}

TEST_CASE("cat construction parity controls the relative sign") {
    // Two disconnected solid nodes; undoing the preparation Hadamards
    // exposes the raw cat state.
    StabilizerGraph g = make_graph(2, {}, {}, {}, {});
    NodeList eligible{0, 1};

    DenseState even = cat_state_post(g, eligible, 0, 0);
    even.apply_h(0);
    even.apply_h(1);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(amp_is(even, 0, r, 0));
    CHECK(amp_is(even, 3, r, 0));

    DenseState odd = cat_state_post(g, eligible, 0, 1);
    odd.apply_h(0);
    odd.apply_h(1);
    CHECK(amp_is(odd, 0, r, 0));
    CHECK(amp_is(odd, 3, -r, 0));

    CHECK_THROWS_AS(cat_state_post(g, eligible, 3, 0), Error);
    NodeList other{1};
    CHECK_THROWS_AS(cat_state_post(g, other, 0, 0), Error);
}

TEST_CASE("equal_up_to_phase compares correctly") {
    DenseState plus = graph_to_state(make_graph(1, {}, {}, {}, {}));
    CHECK(equal_up_to_phase(plus, plus, 1e-12));

    DenseState negated = plus;
    for (amp_t& a : negated.amplitudes()) a = -a;
    CHECK(equal_up_to_phase(plus, negated, 1e-12));

    NodeList hollow{0};
    DenseState zero = graph_to_state(make_graph(1, {}, hollow, {}, {}));
    NodeList sign{0};
    DenseState one = graph_to_state(make_graph(1, {}, hollow, {}, sign));
    CHECK_FALSE(equal_up_to_phase(zero, one, 1e-6));
}
