#include "graph.hpp"

#include <bit>

namespace stabgraph {

namespace {

inline bool test_bit(const std::uint64_t* words, node_t j) {
    return (words[j >> 6] >> (j & 63)) & 1u;
}

inline void flip_bit(std::uint64_t* words, node_t j) {
    words[j >> 6] ^= std::uint64_t(1) << (j & 63);
}

inline void assign_bit(std::uint64_t* words, node_t j, bool value) {
    if (test_bit(words, j) != value) flip_bit(words, j);
}

NodeList collect_bits(const std::uint64_t* words, std::size_t word_count) {
    NodeList out;
    for (std::size_t w = 0; w < word_count; ++w) {
        std::uint64_t bits = words[w];
        while (bits) {
            unsigned b = std::countr_zero(bits);
            out.push_back(static_cast<node_t>(w * 64 + b));
            bits &= bits - 1;
        }
    }
    return out;
}

}  // namespace

StabilizerGraph::StabilizerGraph(node_t n) : n_(n), words_((n + 63) / 64) {
    if (n == 0) fail(ErrorCode::invalid_argument, "node count must be positive");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
    hollow_.assign(words_, 0);
    loops_.assign(words_, 0);
    signs_.assign(words_, 0);
}

bool StabilizerGraph::has_edge(node_t j, node_t k) const {
    require_node(j);
    require_node(k);
    return test_bit(row(j), k);
}

bool StabilizerGraph::is_hollow(node_t j) const {
    require_node(j);
    return test_bit(hollow_.data(), j);
}

bool StabilizerGraph::has_loop(node_t j) const {
    require_node(j);
    return test_bit(loops_.data(), j);
}

bool StabilizerGraph::has_sign(node_t j) const {
    require_node(j);
    return test_bit(signs_.data(), j);
}

node_t StabilizerGraph::degree(node_t j) const {
    require_node(j);
    const std::uint64_t* r = row(j);
    node_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += std::popcount(r[w]);
    return total;
}

NodeList StabilizerGraph::neighbor_list(node_t j) const {
    require_node(j);
    return collect_bits(row(j), words_);
}

NodeList StabilizerGraph::hollow_nodes() const { return collect_bits(hollow_.data(), words_); }
NodeList StabilizerGraph::loop_nodes() const { return collect_bits(loops_.data(), words_); }
NodeList StabilizerGraph::sign_nodes() const { return collect_bits(signs_.data(), words_); }

EdgeList StabilizerGraph::edge_list() const {
    EdgeList out;
    for (node_t j = 0; j < n_; ++j) {
        const std::uint64_t* r = row(j);
        for (std::size_t w = (j + 1) >> 6; w < words_; ++w) {
            std::uint64_t bits = r[w];
            if (w == ((j + 1) >> 6)) bits &= ~std::uint64_t(0) << ((j + 1) & 63);
            while (bits) {
                unsigned b = std::countr_zero(bits);
                out.emplace_back(j, static_cast<node_t>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }
    return out;
}

void StabilizerGraph::xor_edge(node_t j, node_t k) {
    require_node(j);
    require_node(k);
    if (j == k) fail(ErrorCode::self_edge_rejected, "self edges are not allowed");
    flip_bit(row(j), k);
    flip_bit(row(k), j);
}

void StabilizerGraph::clear_edges_at(node_t j) {
    require_node(j);
    std::uint64_t* r = row(j);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            unsigned b = std::countr_zero(bits);
            flip_bit(row(static_cast<node_t>(w * 64 + b)), j);
            bits &= bits - 1;
        }
        r[w] = 0;
    }
}

void StabilizerGraph::flip_hollow(node_t j) {
    require_node(j);
    flip_bit(hollow_.data(), j);
}

void StabilizerGraph::set_hollow(node_t j, bool value) {
    require_node(j);
    assign_bit(hollow_.data(), j, value);
}

void StabilizerGraph::flip_loop(node_t j) {
    require_node(j);
    flip_bit(loops_.data(), j);
}

void StabilizerGraph::set_loop(node_t j, bool value) {
    require_node(j);
    assign_bit(loops_.data(), j, value);
}

void StabilizerGraph::flip_sign_bit(node_t j) {
    require_node(j);
    flip_bit(signs_.data(), j);
}

void StabilizerGraph::set_sign(node_t j, bool value) {
    require_node(j);
    assign_bit(signs_.data(), j, value);
}

void StabilizerGraph::advance(node_t j) {
    require_node(j);
    if (test_bit(loops_.data(), j)) {
        flip_bit(loops_.data(), j);
        flip_bit(signs_.data(), j);
    } else {
        flip_bit(loops_.data(), j);
    }
}

void StabilizerGraph::complement_neighborhood(node_t j) {
    require_node(j);
    // Snapshot the row: neighbor rows change while we walk it, the center
    // row does not (a node is never its own neighbor).
    std::vector<std::uint64_t> nbrs(row(j), row(j) + words_);
    for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t bits = nbrs[w];
        while (bits) {
            unsigned b = std::countr_zero(bits);
            node_t a = static_cast<node_t>(w * 64 + b);
            std::uint64_t* ra = row(a);
            for (std::size_t v = 0; v < words_; ++v) ra[v] ^= nbrs[v];
            flip_bit(ra, a);  // undo the self bit
            bits &= bits - 1;
        }
    }
}

void StabilizerGraph::check_valid() const {
    auto tail_ok = [&](const std::vector<std::uint64_t>& bitset) {
        if ((n_ & 63) == 0) return true;
        return (bitset[words_ - 1] & (~std::uint64_t(0) << (n_ & 63))) == 0;
    };
    if (!tail_ok(hollow_) || !tail_ok(loops_) || !tail_ok(signs_))
        fail(ErrorCode::internal_error, "decoration bits beyond node count");
    for (node_t j = 0; j < n_; ++j) {
        if (test_bit(row(j), j)) fail(ErrorCode::internal_error, "adjacency diagonal not zero");
        if ((n_ & 63) != 0 && (row(j)[words_ - 1] & (~std::uint64_t(0) << (n_ & 63))) != 0)
            fail(ErrorCode::internal_error, "adjacency bits beyond node count");
        for (node_t k = j + 1; k < n_; ++k)
            if (test_bit(row(j), k) != test_bit(row(k), j))
                fail(ErrorCode::internal_error, "adjacency not symmetric");
    }
}

StabilizerGraph make_graph(node_t n, std::span<const std::pair<node_t, node_t>> edges,
                           std::span<const node_t> hollow, std::span<const node_t> loops,
                           std::span<const node_t> signs) {
    StabilizerGraph g(n);
    for (const auto& [j, k] : edges) g.xor_edge(j, k);
    for (node_t j : hollow) g.set_hollow(j, true);
    for (node_t j : loops) g.set_loop(j, true);
    for (node_t j : signs) g.set_sign(j, true);
    return g;
}

NodeList neighbors(const StabilizerGraph& g, node_t j) { return g.neighbor_list(j); }

StabilizerGraph toggle_edge(const StabilizerGraph& g, node_t j, node_t k) {
    StabilizerGraph out = g;
    out.xor_edge(j, k);
    return out;
}

StabilizerGraph advance_loop(const StabilizerGraph& g, node_t j) {
    StabilizerGraph out = g;
    out.advance(j);
    return out;
}

StabilizerGraph flip_fill(const StabilizerGraph& g, node_t j) {
    StabilizerGraph out = g;
    out.flip_hollow(j);
    return out;
}

StabilizerGraph flip_sign(const StabilizerGraph& g, node_t j) {
    StabilizerGraph out = g;
    out.flip_sign_bit(j);
    return out;
}

StabilizerGraph local_complement_node(const StabilizerGraph& g, node_t j) {
    StabilizerGraph out = g;
    out.complement_neighborhood(j);
    return out;
}

StabilizerGraph local_complement_edge(const StabilizerGraph& g, node_t j, node_t k) {
    if (!g.has_edge(j, k)) fail(ErrorCode::edge_required, "local complementation along a missing edge");
    StabilizerGraph out = g;
    out.complement_neighborhood(j);
    out.complement_neighborhood(k);
    out.complement_neighborhood(j);
    return out;
}

}  // namespace stabgraph
