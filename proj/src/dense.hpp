#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "graph.hpp"
#include "pauli.hpp"

namespace stabgraph::oracle {

// Brute-force state-vector reference used to verify the graph rules on small
// instances.  Never on the simulation path.
//
// Amplitude ordering: basis index bit of node j is bit (n-1-j), so node 0 is
// the most significant bit of the index.

inline constexpr node_t max_oracle_qubits = 14;

using amp_t = std::complex<double>;

class DenseState {
  public:
    explicit DenseState(node_t n);  // |0...0>

    node_t qubit_count() const { return n_; }
    std::span<const amp_t> amplitudes() const { return amps_; }
    std::span<amp_t> amplitudes() { return amps_; }
    double norm() const;

    void apply_h(node_t j);
    void apply_s(node_t j);
    void apply_sdg(node_t j);
    void apply_z(node_t j);
    void apply_x(node_t j);
    void apply_cz(node_t j, node_t k);

    bool operator==(const DenseState&) const = default;

  private:
    std::size_t bit_mask(node_t j) const { return std::size_t(1) << (n_ - 1 - j); }

    node_t n_ = 0;
    std::vector<amp_t> amps_;
};

// The preparation circuit of a decorated graph, applied to an existing state:
// H everywhere, controlled-sign on each edge, then Z on signs, S on loops and
// H on hollow nodes.
void apply_graph_circuit(DenseState& state, const StabilizerGraph& g);

DenseState graph_to_state(const StabilizerGraph& g);

DenseState apply_pauli(const DenseState& state, const PauliProduct& m);

struct Projection {
    double probability = 0.0;
    // Normalized post-measurement state; absent when the branch has
    // (numerically) zero probability.
    std::optional<DenseState> post;
};

// Projects with [I + (-1)^a M] / 2.
Projection project(const DenseState& state, const PauliProduct& m, int a);

// Post-measurement state of a random-outcome Z-type measurement built
// directly from the cat-state circuit: H on all of `solid_even`, Z on the
// chosen node if parity is odd, controlled-sign from the chosen node to each
// other member, H on the non-chosen members, then the graph's own
// preparation circuit.
DenseState cat_state_post(const StabilizerGraph& g, std::span<const node_t> solid_even,
                          node_t chosen, int parity);

// True iff some unit phase makes the states equal within `tol` (Euclidean
// norm).  The phase is anchored on the largest-magnitude amplitude of `s`.
bool equal_up_to_phase(const DenseState& s, const DenseState& t, double tol);

}  // namespace stabgraph::oracle
