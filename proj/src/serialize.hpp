#pragma once

#include <string>

#include "graph.hpp"

namespace stabgraph {

// JSON schema (0-indexed):
//   {"n":int, "edges":[[j,k],...], "hollow":[...], "loops":[...], "signs":[...]}
// with j < k in each pair, edges sorted lexicographically, node arrays
// sorted strictly ascending.  graph_from_json rejects anything else.
std::string graph_to_json(const StabilizerGraph& g);
StabilizerGraph graph_from_json(const std::string& text);

// Deterministic DOT text: 1-based labels, solid nodes filled, hollow nodes
// unfilled, signs as a trailing minus in the label, loops as self-edges.
std::string export_dot(const StabilizerGraph& g);

}  // namespace stabgraph
