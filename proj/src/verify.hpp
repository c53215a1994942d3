#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stabgraph::verify {

struct Options {
    std::uint32_t max_qubits = 8;   // cap for randomized sweeps
    std::uint32_t cases = 10000;    // randomized measurement cases
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string name;
    std::uint64_t cases_run = 0;
    bool passed = true;
    // First failing case, serialized as a JSON object.
    std::optional<std::string> counterexample;
    double seconds = 0.0;
};

// Gate rules against dense gates, exhaustive over all graphs with up to four
// nodes, randomized up to max_qubits.
SuiteResult check_gate_rules(const Options& options);

// E1/E2 state preservation plus reduce/disconnect postconditions, exhaustive
// up to three nodes, randomized up to max_qubits.
SuiteResult check_equivalence_rules(const Options& options);

// Every graph on 2 and 3 nodes x every nontrivial Pauli product x each
// feasible outcome: probability trichotomy, classification agreement,
// deterministic outcome, post-state projection match, cat-state match.
SuiteResult check_exhaustive_measurements(const Options& options);

// Randomized measurement cases up to max_qubits with the same checks plus
// chosen-node invariance and re-measurement idempotence.
SuiteResult check_randomized_measurements(const Options& options);

std::vector<SuiteResult> run_all(const Options& options);

// Random single-qubit measurements on a sparse random graph; letter is one
// of 'X','Y','Z' or 0 for a random letter per measurement.  Returns the
// elapsed seconds.
double bench_single_qubit(std::uint32_t nodes, std::uint32_t measurements, std::uint64_t seed,
                          char letter = 'Z');

}  // namespace stabgraph::verify
