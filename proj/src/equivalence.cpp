#include "equivalence.hpp"

#include <algorithm>
#include <optional>

namespace stabgraph {

namespace {

void require_nodes(const StabilizerGraph& g, std::span<const node_t> nodes) {
    for (node_t j : nodes)
        if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node index out of range");
}

bool contains(std::span<const node_t> sorted, node_t j) {
    return std::binary_search(sorted.begin(), sorted.end(), j);
}

NodeList sorted_unique(std::span<const node_t> nodes) {
    NodeList out(nodes.begin(), nodes.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Lowest unmeasured neighbor of j, or none.
std::optional<node_t> first_outside_neighbor(const StabilizerGraph& g, node_t j,
                                             std::span<const node_t> measured) {
    for (node_t v : g.neighbor_list(j))
        if (!contains(measured, v)) return v;
    return std::nullopt;
}

}  // namespace

void apply_e1_inplace(StabilizerGraph& g, node_t j) {
    if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node index out of range");
    if (!g.has_loop(j)) fail(ErrorCode::loop_required, "rewrite needs a loop on the node");
    const NodeList nbrs = g.neighbor_list(j);
    g.flip_hollow(j);
    g.complement_neighborhood(j);
    for (node_t a : nbrs) g.advance(a);
    g.flip_sign_bit(j);
    if (g.has_sign(j))
        for (node_t a : nbrs) g.flip_sign_bit(a);
}

void apply_e2_inplace(StabilizerGraph& g, node_t j, node_t k) {
    if (!g.has_edge(j, k)) fail(ErrorCode::edge_required, "rewrite needs an edge between the nodes");
    if (g.has_loop(j) || g.has_loop(k))
        fail(ErrorCode::loop_forbidden, "rewrite needs loopless nodes");

    // Common neighbors are identified before the complementation.
    const NodeList nj = g.neighbor_list(j);
    const NodeList nk = g.neighbor_list(k);
    NodeList common;
    std::set_intersection(nj.begin(), nj.end(), nk.begin(), nk.end(), std::back_inserter(common));

    // Which endpoints push their sign out is decided once, from the signs
    // they carried on entry; the pushes themselves are plain flips, so the
    // rule stays symmetric in j and k.
    const bool j_signed = g.has_sign(j);
    const bool k_signed = g.has_sign(k);

    g.flip_hollow(j);
    g.flip_hollow(k);
    g.complement_neighborhood(j);
    g.complement_neighborhood(k);
    g.complement_neighborhood(j);
    for (node_t c : common) g.flip_sign_bit(c);
    if (j_signed) {
        g.flip_sign_bit(j);
        for (node_t v : g.neighbor_list(j)) g.flip_sign_bit(v);
    }
    if (k_signed) {
        g.flip_sign_bit(k);
        for (node_t v : g.neighbor_list(k)) g.flip_sign_bit(v);
    }
}

bool is_reduced(const StabilizerGraph& g, std::span<const node_t> targets) {
    require_nodes(g, targets);
    const NodeList sorted = sorted_unique(targets);
    for (node_t j : sorted) {
        if (!g.is_hollow(j)) continue;
        if (g.has_loop(j)) return false;
        for (node_t v : g.neighbor_list(j))
            if (g.is_hollow(v) && contains(sorted, v)) return false;
    }
    return true;
}

bool is_simplified(const StabilizerGraph& g, std::span<const node_t> measured) {
    require_nodes(g, measured);
    const NodeList sorted = sorted_unique(measured);
    for (node_t j : sorted) {
        if (!g.is_hollow(j)) continue;
        if (g.has_loop(j)) return false;
        for (node_t v : g.neighbor_list(j))
            if (!contains(sorted, v) || g.is_hollow(v)) return false;
    }
    return true;
}

void reduce_nodes_inplace(StabilizerGraph& g, std::span<const node_t> targets) {
    require_nodes(g, targets);
    const NodeList sorted = sorted_unique(targets);
    // Every application turns at least one hollow target solid and never
    // hollows another, so the loop fires at most |targets| times.
    std::size_t budget = sorted.size();
    for (;;) {
        node_t looped = g.node_count();
        for (node_t j : sorted) {
            if (g.is_hollow(j) && g.has_loop(j)) {
                looped = j;
                break;
            }
        }
        if (looped < g.node_count()) {
            apply_e1_inplace(g, looped);
        } else {
            node_t a = g.node_count(), b = g.node_count();
            for (node_t j : sorted) {
                if (!g.is_hollow(j) || g.has_loop(j)) continue;
                for (node_t v : g.neighbor_list(j)) {
                    if (contains(sorted, v) && g.is_hollow(v) && !g.has_loop(v)) {
                        a = j;
                        b = v;
                        break;
                    }
                }
                if (a < g.node_count()) break;
            }
            if (a == g.node_count()) break;  // reduced
            apply_e2_inplace(g, a, b);
        }
        if (budget-- == 0)
            fail(ErrorCode::internal_error, "reduction exceeded its iteration bound");
    }
}

void disconnect_hollow_measured_inplace(StabilizerGraph& g, std::span<const node_t> measured) {
    if (!is_reduced(g, measured))
        fail(ErrorCode::precondition_violated, "graph is not reduced on the measured nodes");
    const NodeList sorted = sorted_unique(measured);
    std::size_t budget = 0;
    for (node_t j : sorted)
        if (g.is_hollow(j)) ++budget;
    for (;;) {
        node_t m = g.node_count();
        std::optional<node_t> u;
        for (node_t j : sorted) {
            if (!g.is_hollow(j)) continue;
            u = first_outside_neighbor(g, j, sorted);
            if (u) {
                m = j;
                break;
            }
        }
        if (m == g.node_count()) break;  // nothing left to disconnect
        if (!g.has_loop(*u)) {
            apply_e2_inplace(g, m, *u);
        } else {
            // The unmeasured node's loop advances onto the measured node,
            // after which the measured node itself can be rewritten solid.
            apply_e1_inplace(g, *u);
            apply_e1_inplace(g, m);
        }
        if (budget-- == 0)
            fail(ErrorCode::internal_error, "disconnection exceeded its iteration bound");
    }
    if (!is_simplified(g, measured))
        fail(ErrorCode::internal_error, "disconnection did not reach the simplified form");
}

StabilizerGraph apply_e1(const StabilizerGraph& g, node_t j) {
    StabilizerGraph out = g;
    apply_e1_inplace(out, j);
    return out;
}

StabilizerGraph apply_e2(const StabilizerGraph& g, node_t j, node_t k) {
    StabilizerGraph out = g;
    apply_e2_inplace(out, j, k);
    return out;
}

StabilizerGraph reduce_nodes(const StabilizerGraph& g, std::span<const node_t> targets) {
    StabilizerGraph out = g;
    reduce_nodes_inplace(out, targets);
    return out;
}

StabilizerGraph disconnect_hollow_measured(const StabilizerGraph& g,
                                           std::span<const node_t> measured) {
    StabilizerGraph out = g;
    disconnect_hollow_measured_inplace(out, measured);
    return out;
}

}  // namespace stabgraph
