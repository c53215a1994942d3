#pragma once

#include <string_view>

#include "graph.hpp"

namespace stabgraph {

// Single-qubit gate applied to one node of a decorated graph.
struct LocalGate {
    char letter;  // 'H', 'S' or 'Z'
    node_t target;
};

StabilizerGraph apply_h(const StabilizerGraph& g, node_t j);
StabilizerGraph apply_s(const StabilizerGraph& g, node_t j);
StabilizerGraph apply_z(const StabilizerGraph& g, node_t j);
StabilizerGraph apply_gate(const StabilizerGraph& g, const LocalGate& gate);

// Applies a word of H/S/Z letters to one node, left to right: "ZS" applies Z
// first, then S (the S-dagger action up to phase, since S^3 = ZS).
StabilizerGraph apply_word(const StabilizerGraph& g, node_t j, std::string_view word);

// In-place variants used by the measurement pipeline on working copies.
void apply_h_inplace(StabilizerGraph& g, node_t j);
void apply_s_inplace(StabilizerGraph& g, node_t j);
void apply_z_inplace(StabilizerGraph& g, node_t j);
void apply_word_inplace(StabilizerGraph& g, node_t j, std::string_view word);

}  // namespace stabgraph
