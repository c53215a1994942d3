#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "error.hpp"

namespace stabgraph {

using node_t = std::uint32_t;
using NodeList = std::vector<node_t>;
using EdgeList = std::vector<std::pair<node_t, node_t>>;

// A stabilizer state as a decorated graph: a simple undirected graph plus
// three per-node decorations.  Solid nodes are the default fill; a hollow
// node carries a terminal H, a loop a terminal S, and a negative sign a
// terminal Z.  A hollow node with a loop means S followed by H.
//
// Adjacency is kept as one bit row per node, so local complementation of a
// node of degree d costs O(d * n/64) word operations.  Values are immutable
// from the caller's point of view: the public operations are the free
// functions below, which copy and return.  The mutating members exist for
// the rule pipelines, which copy once and edit the working copy in place.
class StabilizerGraph {
  public:
    StabilizerGraph() = default;
    explicit StabilizerGraph(node_t n);

    node_t node_count() const { return n_; }

    bool has_edge(node_t j, node_t k) const;
    bool is_hollow(node_t j) const;
    bool has_loop(node_t j) const;
    bool has_sign(node_t j) const;
    node_t degree(node_t j) const;
    NodeList neighbor_list(node_t j) const;

    NodeList hollow_nodes() const;
    NodeList loop_nodes() const;
    NodeList sign_nodes() const;
    // Edges as (j, k) with j < k, sorted lexicographically.
    EdgeList edge_list() const;

    // In-place primitives.  Index preconditions are checked; violations throw.
    void xor_edge(node_t j, node_t k);
    void clear_edges_at(node_t j);
    void flip_hollow(node_t j);
    void set_hollow(node_t j, bool value);
    void flip_loop(node_t j);
    void set_loop(node_t j, bool value);
    void flip_sign_bit(node_t j);
    void set_sign(node_t j, bool value);
    // Loop advance: add a loop if absent; otherwise remove it and flip the sign.
    void advance(node_t j);
    // Local complementation: toggle every edge between two neighbors of j.
    void complement_neighborhood(node_t j);

    // Structural invariants: symmetric irreflexive adjacency, no stray bits
    // beyond n.  Throws ErrorCode::internal_error on violation.
    void check_valid() const;

    bool operator==(const StabilizerGraph&) const = default;

  private:
    void require_node(node_t j) const {
        if (j >= n_) fail(ErrorCode::index_out_of_range, "node index out of range");
    }
    std::uint64_t* row(node_t j) { return adj_.data() + static_cast<std::size_t>(j) * words_; }
    const std::uint64_t* row(node_t j) const {
        return adj_.data() + static_cast<std::size_t>(j) * words_;
    }

    node_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> hollow_;
    std::vector<std::uint64_t> loops_;
    std::vector<std::uint64_t> signs_;
};

// Construction from explicit parts.  Duplicate edge entries toggle, so odd
// multiplicity means present.  Self pairs are rejected; loops belong in
// `loops`, not `edges`.
StabilizerGraph make_graph(node_t n, std::span<const std::pair<node_t, node_t>> edges,
                           std::span<const node_t> hollow, std::span<const node_t> loops,
                           std::span<const node_t> signs);

NodeList neighbors(const StabilizerGraph& g, node_t j);
StabilizerGraph toggle_edge(const StabilizerGraph& g, node_t j, node_t k);
StabilizerGraph advance_loop(const StabilizerGraph& g, node_t j);
StabilizerGraph flip_fill(const StabilizerGraph& g, node_t j);
StabilizerGraph flip_sign(const StabilizerGraph& g, node_t j);
StabilizerGraph local_complement_node(const StabilizerGraph& g, node_t j);
// Local complementation along an existing edge: complement at j, then k, then
// j again.  Symmetric in j and k.
StabilizerGraph local_complement_edge(const StabilizerGraph& g, node_t j, node_t k);

}  // namespace stabgraph
