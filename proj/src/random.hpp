#pragma once

#include <random>

#include "graph.hpp"
#include "pauli.hpp"

namespace stabgraph {

inline node_t rand_below(std::mt19937_64& rng, node_t n) {
    return static_cast<node_t>(rng() % n);
}

inline bool rand_bit(std::mt19937_64& rng) { return rng() & 1; }

// Dense random graph with independent fair coins on every edge and
// decoration bit.
inline StabilizerGraph random_graph(std::mt19937_64& rng, node_t n, bool decorations = true) {
    StabilizerGraph g(n);
    for (node_t j = 0; j < n; ++j)
        for (node_t k = j + 1; k < n; ++k)
            if (rand_bit(rng)) g.xor_edge(j, k);
    if (decorations) {
        for (node_t j = 0; j < n; ++j) {
            if (rand_bit(rng)) g.set_hollow(j, true);
            if (rand_bit(rng)) g.set_loop(j, true);
            if (rand_bit(rng)) g.set_sign(j, true);
        }
    }
    return g;
}

// Sparse plain graph with the requested number of distinct edges.
inline StabilizerGraph random_sparse_graph(std::mt19937_64& rng, node_t n, std::size_t edges) {
    StabilizerGraph g(n);
    std::size_t placed = 0;
    while (placed < edges) {
        node_t j = rand_below(rng, n);
        node_t k = rand_below(rng, n);
        if (j == k || g.has_edge(j, k)) continue;
        g.xor_edge(j, k);
        ++placed;
    }
    return g;
}

// Nonempty Pauli product of random weight.
inline PauliProduct random_product(std::mt19937_64& rng, node_t n) {
    static constexpr char letters[3] = {'X', 'Y', 'Z'};
    PauliProduct m;
    m.letters.assign(n, 'I');
    node_t weight = 1 + rand_below(rng, n);
    NodeList nodes(n);
    for (node_t j = 0; j < n; ++j) nodes[j] = j;
    for (node_t i = 0; i < weight; ++i) {
        node_t pick = i + rand_below(rng, n - i);
        std::swap(nodes[i], nodes[pick]);
        m.letters[nodes[i]] = letters[rand_below(rng, 3)];
    }
    return m;
}

// Graph with the given bit codes, for exhaustive enumeration: edge bits in
// lexicographic pair order, decoration bits per node.
inline StabilizerGraph graph_from_code(node_t n, std::uint64_t edge_bits, std::uint32_t hollow_bits,
                                       std::uint32_t loop_bits, std::uint32_t sign_bits) {
    StabilizerGraph g(n);
    std::size_t e = 0;
    for (node_t j = 0; j < n; ++j)
        for (node_t k = j + 1; k < n; ++k, ++e)
            if ((edge_bits >> e) & 1) g.xor_edge(j, k);
    for (node_t j = 0; j < n; ++j) {
        if ((hollow_bits >> j) & 1) g.set_hollow(j, true);
        if ((loop_bits >> j) & 1) g.set_loop(j, true);
        if ((sign_bits >> j) & 1) g.set_sign(j, true);
    }
    return g;
}

}  // namespace stabgraph
