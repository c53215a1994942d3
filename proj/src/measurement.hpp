#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clifford.hpp"
#include "equivalence.hpp"
#include "graph.hpp"
#include "pauli.hpp"

namespace stabgraph {

// Node sets derived from a simplified Z-type measurement, plus the parity b
// of signed hollow measured nodes, which fixes the certain outcome (-1)^b.
struct Classification {
    NodeList measured;
    NodeList solid_measured;
    NodeList hollow_measured;
    // Solid measured nodes with an even number of hollow measured neighbors;
    // empty iff the outcome is certain.
    NodeList solid_even;
    int parity_b = 0;
};

struct MeasurementRecord {
    bool deterministic = false;
    int outcome_a = 0;  // measured value is (-1)^a
    double probability = 1.0;
    std::optional<node_t> chosen_node;
    StabilizerGraph post_graph;
    Classification classification;
    // Basis-change words applied before the Z-type step and their inverses
    // applied after, as (node, word) pairs in application order.
    std::vector<std::pair<node_t, std::string>> basis_changes;
    std::vector<std::pair<node_t, std::string>> undo_words;

    int outcome_value() const { return outcome_a ? -1 : +1; }
};

// How a random outcome is decided.  Forcing a bit that contradicts a
// deterministic outcome is an error, never a silent override; deterministic
// outcomes consume nothing from a sampler.
class OutcomePolicy {
  public:
    static OutcomePolicy sample(std::mt19937_64& rng) {
        OutcomePolicy p;
        p.draw_ = [&rng]() { return static_cast<int>(rng() & 1); };
        return p;
    }
    static OutcomePolicy force(int bit) {
        OutcomePolicy p;
        p.forced_ = bit & 1;
        return p;
    }
    // Consulted only when the outcome is genuinely random.
    static OutcomePolicy provider(std::function<int()> draw) {
        OutcomePolicy p;
        p.draw_ = std::move(draw);
        return p;
    }

    std::optional<int> forced() const { return forced_; }
    int draw() const {
        if (forced_) return *forced_;
        if (!draw_) fail(ErrorCode::invalid_argument, "outcome policy cannot sample");
        return draw_() & 1;
    }

  private:
    OutcomePolicy() = default;
    std::optional<int> forced_;
    std::function<int()> draw_;
};

// Derives the node sets and parity from a graph in simplified form (hollow
// measured nodes loopless, unconnected to one another and to unmeasured
// nodes).  Throws NotSimplified otherwise.
Classification classify(const StabilizerGraph& g, std::span<const node_t> measured);

// The post-measurement rewrite for a random-outcome simplified Z-type
// measurement around chosen node p (member of solid_even), with
// parity = (a + b) mod 2.
StabilizerGraph post_transform(const StabilizerGraph& g, const Classification& cls, node_t p,
                               int parity);

// Measures the product of Zs over `measured`: simplifies, classifies, and
// either reports the certain outcome or rewrites the graph around the lowest
// eligible node.
MeasurementRecord measure_z_product(const StabilizerGraph& g, std::span<const node_t> measured,
                                    const OutcomePolicy& policy);

// Measures an arbitrary Pauli product by conjugating X and Y letters to Z
// (H for X, the word ZSH for Y), running the Z-type measurement, and undoing
// the basis change on the post-measurement graph.
MeasurementRecord measure_pauli(const StabilizerGraph& g, const PauliProduct& m,
                                const OutcomePolicy& policy);

// Single-node special case; produces the same record as measure_pauli on the
// weight-1 product but through the direct rewrite.
MeasurementRecord measure_single(const StabilizerGraph& g, node_t j, char letter,
                                 const OutcomePolicy& policy);

}  // namespace stabgraph
