#include "measurement.hpp"

#include <algorithm>

namespace stabgraph {

namespace {

bool contains(std::span<const node_t> sorted, node_t j) {
    return std::binary_search(sorted.begin(), sorted.end(), j);
}

NodeList sorted_unique(std::span<const node_t> nodes) {
    NodeList out(nodes.begin(), nodes.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const char* basis_change_word(char letter) {
    switch (letter) {
        case 'X': return "H";
        case 'Y': return "ZSH";  // S-dagger then H
        default: return nullptr;
    }
}

const char* undo_word(char letter) {
    switch (letter) {
        case 'X': return "H";
        case 'Y': return "HS";  // H then S
        default: return nullptr;
    }
}

// The four-step rewrite around chosen node p, applied to the evolving graph
// in order.  Assumes a simplified graph and p in cls.solid_even.
void post_transform_inplace(StabilizerGraph& g, const Classification& cls, node_t p, int parity) {
    NodeList unchosen;
    for (node_t u : cls.solid_even)
        if (u != p) unchosen.push_back(u);

    // 1. Every neighbor of the chosen node toggles its edges to the unchosen
    //    eligible nodes (edges between two such neighbors toggle twice).
    const NodeList nbrs_entry = g.neighbor_list(p);
    for (node_t v : nbrs_entry)
        for (node_t u : unchosen)
            if (u != v) g.xor_edge(v, u);

    // 2. Sign bookkeeping, against the adjacency left by step 1.
    const NodeList nbrs = g.neighbor_list(p);
    if (!g.has_sign(p)) {
        for (node_t v : nbrs)
            if (contains(cls.solid_even, v)) g.flip_sign_bit(v);
    } else {
        g.set_sign(p, false);
        for (node_t u : unchosen)
            if (!contains(nbrs, u)) g.flip_sign_bit(u);
    }
    if (parity) {
        g.flip_sign_bit(p);
        for (node_t v : nbrs) g.flip_sign_bit(v);
    }

    // 3. Reconnect the chosen node to exactly the unchosen eligible nodes
    //    and make it hollow.
    g.clear_edges_at(p);
    for (node_t u : unchosen) g.xor_edge(p, u);
    g.set_hollow(p, true);

    // 4. A loop on the chosen node unwinds onto its new neighborhood.
    if (g.has_loop(p)) {
        g.set_loop(p, false);
        g.complement_neighborhood(p);
        for (node_t u : unchosen) g.advance(u);
        if (parity)
            for (node_t u : unchosen) g.flip_sign_bit(u);
    }
}

// Z-type measurement on a working graph that is already simplified.  Leaves
// the post-measurement graph in `g`.
MeasurementRecord run_simplified_z(StabilizerGraph& g, const NodeList& measured,
                                   const OutcomePolicy& policy) {
    MeasurementRecord rec;
    rec.classification = classify(g, measured);
    const Classification& cls = rec.classification;

    if (cls.solid_even.empty()) {
        rec.deterministic = true;
        rec.probability = 1.0;
        rec.outcome_a = cls.parity_b;
        if (policy.forced() && *policy.forced() != cls.parity_b)
            fail(ErrorCode::impossible_outcome,
                 "forced outcome contradicts a deterministic measurement");
        return rec;
    }

    rec.deterministic = false;
    rec.probability = 0.5;
    rec.outcome_a = policy.draw();
    rec.chosen_node = cls.solid_even.front();
    post_transform_inplace(g, cls, *rec.chosen_node, (rec.outcome_a + cls.parity_b) & 1);
    return rec;
}

}  // namespace

Classification classify(const StabilizerGraph& g, std::span<const node_t> measured) {
    if (measured.empty()) fail(ErrorCode::invalid_argument, "measurement needs measured nodes");
    if (!is_simplified(g, measured))
        fail(ErrorCode::not_simplified, "graph is not in simplified measurement form");

    Classification cls;
    cls.measured = sorted_unique(measured);
    for (node_t j : cls.measured)
        (g.is_hollow(j) ? cls.hollow_measured : cls.solid_measured).push_back(j);
    for (node_t j : cls.solid_measured) {
        node_t hollow_links = 0;
        for (node_t v : g.neighbor_list(j))
            if (g.is_hollow(v) && contains(cls.measured, v)) ++hollow_links;
        if ((hollow_links & 1) == 0) cls.solid_even.push_back(j);
    }
    int b = 0;
    for (node_t j : cls.hollow_measured)
        if (g.has_sign(j)) b ^= 1;
    cls.parity_b = b;
    return cls;
}

StabilizerGraph post_transform(const StabilizerGraph& g, const Classification& cls, node_t p,
                               int parity) {
    if (!contains(cls.solid_even, p))
        fail(ErrorCode::chosen_not_eligible, "chosen node is not eligible");
    StabilizerGraph out = g;
    post_transform_inplace(out, cls, p, parity & 1);
    return out;
}

MeasurementRecord measure_z_product(const StabilizerGraph& g, std::span<const node_t> measured,
                                    const OutcomePolicy& policy) {
    if (measured.empty()) fail(ErrorCode::invalid_argument, "measurement needs measured nodes");
    const NodeList sorted = sorted_unique(measured);
    for (node_t j : sorted)
        if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "measured node out of range");

    StabilizerGraph work = g;
    reduce_nodes_inplace(work, sorted);
    disconnect_hollow_measured_inplace(work, sorted);
    MeasurementRecord rec = run_simplified_z(work, sorted, policy);
    rec.post_graph = std::move(work);
    return rec;
}

MeasurementRecord measure_pauli(const StabilizerGraph& g, const PauliProduct& m,
                                const OutcomePolicy& policy) {
    if (m.size() != g.node_count())
        fail(ErrorCode::length_mismatch, "Pauli product length does not match graph");
    if (m.is_identity())
        fail(ErrorCode::invalid_argument, "measurement needs a non-identity letter");

    StabilizerGraph work = g;
    std::vector<std::pair<node_t, std::string>> pre, post;
    for (node_t j = 0; j < m.size(); ++j) {
        if (const char* word = basis_change_word(m.letter(j))) {
            apply_word_inplace(work, j, word);
            pre.emplace_back(j, word);
        }
    }

    const NodeList measured = m.measured_nodes();
    reduce_nodes_inplace(work, measured);
    disconnect_hollow_measured_inplace(work, measured);
    MeasurementRecord rec = run_simplified_z(work, measured, policy);

    for (node_t j = 0; j < m.size(); ++j) {
        if (const char* word = undo_word(m.letter(j))) {
            apply_word_inplace(work, j, word);
            post.emplace_back(j, word);
        }
    }
    rec.post_graph = std::move(work);
    rec.basis_changes = std::move(pre);
    rec.undo_words = std::move(post);
    return rec;
}

MeasurementRecord measure_single(const StabilizerGraph& g, node_t j, char letter,
                                 const OutcomePolicy& policy) {
    if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node index out of range");
    if (letter != 'X' && letter != 'Y' && letter != 'Z')
        fail(ErrorCode::invalid_argument, "measurement letter must be X, Y or Z");

    StabilizerGraph work = g;
    MeasurementRecord rec;
    if (const char* word = basis_change_word(letter)) {
        apply_word_inplace(work, j, word);
        rec.basis_changes.emplace_back(j, word);
    }

    const NodeList measured{j};
    reduce_nodes_inplace(work, measured);
    disconnect_hollow_measured_inplace(work, measured);
    rec.classification = classify(work, measured);

    if (work.is_hollow(j)) {
        // Disconnected loopless hollow node: the qubit is |0> or |1> and the
        // outcome equals its sign.
        rec.deterministic = true;
        rec.probability = 1.0;
        rec.outcome_a = work.has_sign(j) ? 1 : 0;
        if (policy.forced() && *policy.forced() != rec.outcome_a)
            fail(ErrorCode::impossible_outcome,
                 "forced outcome contradicts a deterministic measurement");
    } else {
        rec.deterministic = false;
        rec.probability = 0.5;
        rec.outcome_a = policy.draw();
        rec.chosen_node = j;
        // Strip loops and signs, push a -1 outcome onto the node and its
        // neighbors, then cut the node loose and make it hollow.
        work.set_loop(j, false);
        work.set_sign(j, false);
        if (rec.outcome_a & 1) {
            work.flip_sign_bit(j);
            for (node_t v : work.neighbor_list(j)) work.flip_sign_bit(v);
        }
        work.clear_edges_at(j);
        work.set_hollow(j, true);
    }

    if (const char* word = undo_word(letter)) {
        apply_word_inplace(work, j, word);
        rec.undo_words.emplace_back(j, word);
    }
    rec.post_graph = std::move(work);
    return rec;
}

}  // namespace stabgraph
