#include "dense.hpp"

#include <algorithm>
#include <cmath>

namespace stabgraph::oracle {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

void require_oracle_size(node_t n) {
    if (n > max_oracle_qubits) fail(ErrorCode::too_many_qubits, "dense oracle capped at 14 qubits");
}

void require_same_length(const DenseState& state, const PauliProduct& m) {
    if (state.qubit_count() != m.size())
        fail(ErrorCode::length_mismatch, "Pauli product length does not match qubit count");
}

}  // namespace

DenseState::DenseState(node_t n) : n_(n) {
    if (n == 0) fail(ErrorCode::invalid_argument, "qubit count must be positive");
    require_oracle_size(n);
    amps_.assign(std::size_t(1) << n, amp_t(0.0, 0.0));
    amps_[0] = amp_t(1.0, 0.0);
}

double DenseState::norm() const {
    double s = 0.0;
    for (const amp_t& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void DenseState::apply_h(node_t j) {
    const std::size_t mask = bit_mask(j);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) continue;
        amp_t a = amps_[i];
        amp_t b = amps_[i | mask];
        amps_[i] = (a + b) * inv_sqrt2;
        amps_[i | mask] = (a - b) * inv_sqrt2;
    }
}

void DenseState::apply_s(node_t j) {
    const std::size_t mask = bit_mask(j);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & mask) amps_[i] *= amp_t(0.0, 1.0);
}

void DenseState::apply_sdg(node_t j) {
    const std::size_t mask = bit_mask(j);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & mask) amps_[i] *= amp_t(0.0, -1.0);
}

void DenseState::apply_z(node_t j) {
    const std::size_t mask = bit_mask(j);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & mask) amps_[i] = -amps_[i];
}

void DenseState::apply_x(node_t j) {
    const std::size_t mask = bit_mask(j);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (!(i & mask)) std::swap(amps_[i], amps_[i | mask]);
}

void DenseState::apply_cz(node_t j, node_t k) {
    const std::size_t mj = bit_mask(j);
    const std::size_t mk = bit_mask(k);
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if ((i & mj) && (i & mk)) amps_[i] = -amps_[i];
}

void apply_graph_circuit(DenseState& state, const StabilizerGraph& g) {
    const node_t n = g.node_count();
    if (state.qubit_count() != n) fail(ErrorCode::length_mismatch, "state size does not match graph");
    for (node_t j = 0; j < n; ++j) state.apply_h(j);
    for (const auto& [j, k] : g.edge_list()) state.apply_cz(j, k);
    for (node_t j : g.sign_nodes()) state.apply_z(j);
    for (node_t j : g.loop_nodes()) state.apply_s(j);
    for (node_t j : g.hollow_nodes()) state.apply_h(j);
}

DenseState graph_to_state(const StabilizerGraph& g) {
    require_oracle_size(g.node_count());
    DenseState state(g.node_count());
    apply_graph_circuit(state, g);
    return state;
}

DenseState apply_pauli(const DenseState& state, const PauliProduct& m) {
    require_same_length(state, m);
    DenseState out = state;
    for (node_t j = 0; j < m.size(); ++j) {
        switch (m.letter(j)) {
            case 'I': break;
            case 'X': out.apply_x(j); break;
            case 'Z': out.apply_z(j); break;
            case 'Y':
                // Y = i X Z
                out.apply_z(j);
                out.apply_x(j);
                for (amp_t& a : out.amplitudes()) a *= amp_t(0.0, 1.0);
                break;
            default: fail(ErrorCode::invalid_argument, "bad Pauli letter");
        }
    }
    return out;
}

Projection project(const DenseState& state, const PauliProduct& m, int a) {
    require_same_length(state, m);
    if (m.is_identity()) fail(ErrorCode::invalid_argument, "projection needs a nontrivial product");
    DenseState flipped = apply_pauli(state, m);
    const double sign = (a & 1) ? -1.0 : 1.0;

    DenseState half = state;
    auto amps = half.amplitudes();
    auto f = flipped.amplitudes();
    double prob = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = 0.5 * (amps[i] + sign * f[i]);
        prob += std::norm(amps[i]);
    }

    Projection out;
    out.probability = prob;
    if (prob > 1e-12) {
        const double scale = 1.0 / std::sqrt(prob);
        for (amp_t& v : amps) v *= scale;
        out.post = std::move(half);
    }
    return out;
}

DenseState cat_state_post(const StabilizerGraph& g, std::span<const node_t> solid_even,
                          node_t chosen, int parity) {
    require_oracle_size(g.node_count());
    bool eligible = false;
    for (node_t j : solid_even) {
        if (j >= g.node_count()) fail(ErrorCode::index_out_of_range, "node out of range");
        if (j == chosen) eligible = true;
    }
    if (!eligible) fail(ErrorCode::chosen_not_eligible, "chosen node not in the eligible set");

    DenseState state(g.node_count());
    for (node_t j : solid_even) state.apply_h(j);
    if (parity & 1) state.apply_z(chosen);
    for (node_t j : solid_even)
        if (j != chosen) state.apply_cz(chosen, j);
    for (node_t j : solid_even)
        if (j != chosen) state.apply_h(j);
    apply_graph_circuit(state, g);
    return state;
}

bool equal_up_to_phase(const DenseState& s, const DenseState& t, double tol) {
    if (s.qubit_count() != t.qubit_count())
        fail(ErrorCode::length_mismatch, "states have different qubit counts");
    auto sa = s.amplitudes();
    auto ta = t.amplitudes();

    std::size_t anchor = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        double mag = std::norm(sa[i]);
        if (mag > best) {
            best = mag;
            anchor = i;
        }
    }
    if (std::abs(ta[anchor]) == 0.0) return false;
    amp_t phase = sa[anchor] / ta[anchor];
    const double mag = std::abs(phase);
    if (mag == 0.0) return false;
    phase /= mag;

    double err = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) err += std::norm(sa[i] - phase * ta[i]);
    return std::sqrt(err) <= tol;
}

}  // namespace stabgraph::oracle
