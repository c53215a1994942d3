#pragma once

#include <span>

#include "graph.hpp"

namespace stabgraph {

// State-preserving rewrites.  Both rules change the graph but not the
// stabilizer state it represents (up to global phase).

// Rewrite at a node with a loop: flip its fill, complement its neighborhood,
// advance its neighbors' loops, flip its sign, and if the sign is now
// negative flip the neighbors' signs too.  The loop itself is kept.
StabilizerGraph apply_e1(const StabilizerGraph& g, node_t j);

// Rewrite along an edge between two loopless nodes: flip both fills, locally
// complement along the edge, flip the signs of the nodes that neighbored
// both endpoints, then clear each endpoint's sign (j first, then k) by
// pushing it onto that endpoint's current neighbors.
StabilizerGraph apply_e2(const StabilizerGraph& g, node_t j, node_t k);

// Rewrites until every hollow node of `targets` is loopless and shares no
// edge with another hollow target.  At most |targets| rule applications.
StabilizerGraph reduce_nodes(const StabilizerGraph& g, std::span<const node_t> targets);

// Requires a graph already reduced on `measured`; rewrites until hollow
// measured nodes also have no unmeasured neighbors.
StabilizerGraph disconnect_hollow_measured(const StabilizerGraph& g,
                                           std::span<const node_t> measured);

// Postcondition predicates.
bool is_reduced(const StabilizerGraph& g, std::span<const node_t> targets);
bool is_simplified(const StabilizerGraph& g, std::span<const node_t> measured);

void apply_e1_inplace(StabilizerGraph& g, node_t j);
void apply_e2_inplace(StabilizerGraph& g, node_t j, node_t k);
void reduce_nodes_inplace(StabilizerGraph& g, std::span<const node_t> targets);
void disconnect_hollow_measured_inplace(StabilizerGraph& g, std::span<const node_t> measured);

}  // namespace stabgraph
