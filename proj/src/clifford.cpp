#include "clifford.hpp"

namespace stabgraph {

void apply_h_inplace(StabilizerGraph& g, node_t j) { g.flip_hollow(j); }

void apply_s_inplace(StabilizerGraph& g, node_t j) {
    if (!g.is_hollow(j)) {
        // Solid node: just advance its loop.
        g.advance(j);
        return;
    }
    // Conditional sign flips below read the node's sign as it was on entry.
    const bool entry_signed = g.has_sign(j);
    const NodeList nbrs = g.neighbor_list(j);
    if (!g.has_loop(j)) {
        // Hollow, loopless: complement the neighborhood and advance the
        // neighbors' loops; a signed node also flips its neighbors' signs.
        g.complement_neighborhood(j);
        for (node_t a : nbrs) g.advance(a);
        if (entry_signed)
            for (node_t a : nbrs) g.flip_sign_bit(a);
    } else {
        // Hollow with a loop: turn solid, drop the loop, then complement and
        // advance as above; an unsigned node flips its neighbors' signs.
        g.flip_hollow(j);
        g.set_loop(j, false);
        g.complement_neighborhood(j);
        for (node_t a : nbrs) g.advance(a);
        if (!entry_signed)
            for (node_t a : nbrs) g.flip_sign_bit(a);
    }
}

void apply_z_inplace(StabilizerGraph& g, node_t j) {
    if (!g.is_hollow(j)) {
        g.flip_sign_bit(j);
        return;
    }
    // Hollow node: the sign lands on its neighbors; with a loop, also on
    // the node itself.
    const bool own = g.has_loop(j);
    for (node_t a : g.neighbor_list(j)) g.flip_sign_bit(a);
    if (own) g.flip_sign_bit(j);
}

void apply_word_inplace(StabilizerGraph& g, node_t j, std::string_view word) {
    if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node index out of range");
    for (char c : word) {
        switch (c) {
            case 'H': apply_h_inplace(g, j); break;
            case 'S': apply_s_inplace(g, j); break;
            case 'Z': apply_z_inplace(g, j); break;
            default: fail(ErrorCode::invalid_argument, "gate letters must be H, S or Z");
        }
    }
}

StabilizerGraph apply_h(const StabilizerGraph& g, node_t j) {
    if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node index out of range");
    StabilizerGraph out = g;
    apply_h_inplace(out, j);
    return out;
}

StabilizerGraph apply_s(const StabilizerGraph& g, node_t j) {
    if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node index out of range");
    StabilizerGraph out = g;
    apply_s_inplace(out, j);
    return out;
}

StabilizerGraph apply_z(const StabilizerGraph& g, node_t j) {
    if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node index out of range");
    StabilizerGraph out = g;
    apply_z_inplace(out, j);
    return out;
}

StabilizerGraph apply_gate(const StabilizerGraph& g, const LocalGate& gate) {
    switch (gate.letter) {
        case 'H': return apply_h(g, gate.target);
        case 'S': return apply_s(g, gate.target);
        case 'Z': return apply_z(g, gate.target);
        default: fail(ErrorCode::invalid_argument, "gate letters must be H, S or Z");
    }
}

StabilizerGraph apply_word(const StabilizerGraph& g, node_t j, std::string_view word) {
    StabilizerGraph out = g;
    apply_word_inplace(out, j, word);
    return out;
}

}  // namespace stabgraph
