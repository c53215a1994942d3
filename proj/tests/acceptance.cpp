// Acceptance suite.  Runs each criterion, prints one pass/fail line with its
// timing, and exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>

#include "clifford.hpp"
#include "dense.hpp"
#include "equivalence.hpp"
#include "graph.hpp"
#include "measurement.hpp"
#include "pauli.hpp"
#include "verify.hpp"

using namespace stabgraph;
using namespace stabgraph::oracle;

namespace {

using Clock = std::chrono::steady_clock;

int criteria_failed = 0;

void report(int index, const char* name, bool passed, double seconds, double budget_seconds,
            const std::string& detail = "") {
    const bool in_budget = seconds < budget_seconds;
    const bool ok = passed && in_budget;
    if (!ok) ++criteria_failed;
    std::printf("criterion %d (%s): %s (%.4f s, budget %.4g s)%s%s\n", index, name,
                ok ? "PASS" : "FAIL", seconds, budget_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

double elapsed(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// --- criterion 1: the four-qubit cluster measurement trace ----------------

void criterion_fig1() {
    const auto start = Clock::now();
    StabilizerGraph cluster =
        make_graph(4, EdgeList{{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {}, {}, {});
    MeasurementRecord rec =
        measure_pauli(cluster, PauliProduct{"IZZZ"}, OutcomePolicy::force(0));
    const double seconds = elapsed(start);

    bool ok = !rec.deterministic;
    ok = ok && rec.classification.solid_even == NodeList{1, 2, 3};
    ok = ok && rec.classification.parity_b == 0;
    ok = ok && rec.chosen_node && *rec.chosen_node == 1;
    ok = ok && rec.outcome_value() == +1;
    StabilizerGraph expected =
        make_graph(4, EdgeList{{0, 2}, {1, 2}, {1, 3}}, NodeList{1}, {}, NodeList{2});
    ok = ok && rec.post_graph == expected;  // exact structural equality
    report(1, "four-qubit cluster ZZZ trace", ok, seconds, 1e-3);
}

// --- criterion 2: the 2x3-cluster X1, Y2, Z6 sequence ---------------------

void criterion_fig2() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    auto stage = [&](bool cond, const char* name) {
        if (ok && !cond) {
            ok = false;
            detail = std::string("first failing stage: ") + name;
        }
    };

    // Nodes clockwise from the upper left: 1 2 3 / 6 5 4.
    StabilizerGraph g = make_graph(
        6, EdgeList{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}, {1, 4}, {2, 3}}, {}, {}, {});
    DenseState psi = graph_to_state(g);
    const double tol = 1e-9;
    auto in_sync = [&]() { return equal_up_to_phase(graph_to_state(g), psi, tol); };
    auto measure_stage = [&](node_t node, const char* name) {
        NodeList measured{node};
        Classification cls = classify(g, measured);
        stage(cls.solid_even == NodeList{node} && cls.parity_b == 0, name);
        g = post_transform(g, cls, node, 0);
        Projection pr = project(psi, PauliProduct::z_on(6, measured), 0);
        stage(pr.post && std::abs(pr.probability - 0.5) < 1e-12, name);
        if (pr.post) psi = *pr.post;
        stage(in_sync(), name);
    };

    // X on node 1: H basis change, the hollow node rewrites through its
    // loopless neighbor, measure, undo.
    g = apply_h(g, 0);
    psi.apply_h(0);
    stage(in_sync(), "a: basis change");
    g = apply_e2(g, 0, 5);
    stage(in_sync(), "a: E2 on nodes 1 and 6");
    measure_stage(0, "a: measurement transform");
    g = apply_h(g, 0);
    psi.apply_h(0);
    stage(in_sync(), "a: undo");

    // Y on node 2: the word ZSH leaves the node hollow with a loop, which
    // the loop rewrite clears before measuring; undo with HS.
    g = apply_z(g, 1);
    psi.apply_z(1);
    stage(in_sync(), "b: Z of basis word");
    g = apply_s(g, 1);
    psi.apply_s(1);
    stage(in_sync(), "b: S of basis word");
    g = apply_h(g, 1);
    psi.apply_h(1);
    stage(in_sync(), "b: H of basis word");
    stage(g.is_hollow(1) && g.has_loop(1), "b: node 2 hollow with loop");
    g = apply_e1(g, 1);
    stage(in_sync(), "b: E1 on node 2");
    measure_stage(1, "b: measurement transform");
    g = apply_h(g, 1);
    psi.apply_h(1);
    stage(in_sync(), "b: H of undo word");
    g = apply_s(g, 1);
    psi.apply_s(1);
    stage(in_sync(), "b: S of undo word");

    // Z on node 6: only the loop rewrite is needed before measuring.
    stage(g.is_hollow(5) && g.has_loop(5), "c: node 6 hollow with loop");
    g = apply_e1(g, 5);
    stage(in_sync(), "c: E1 on node 6");
    measure_stage(5, "c: measurement transform");

    // The packaged pipeline agrees with the staged replay state for the
    // same forced outcomes.
    StabilizerGraph pipeline = make_graph(
        6, EdgeList{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}, {1, 4}, {2, 3}}, {}, {}, {});
    for (auto [node, letter] : {std::pair<node_t, char>{0, 'X'}, {1, 'Y'}, {5, 'Z'}}) {
        MeasurementRecord rec = measure_single(pipeline, node, letter, OutcomePolicy::force(0));
        stage(!rec.deterministic, "pipeline: outcomes random");
        pipeline = rec.post_graph;
    }
    stage(equal_up_to_phase(graph_to_state(pipeline), psi, tol), "pipeline: final state");

    report(2, "2x3 cluster X1 Y2 Z6 sequence", ok, elapsed(start), 0.1, detail);
}

// --- criteria 3-5: the oracle sweep suites --------------------------------

void criterion_suite(int index, const char* name, const verify::SuiteResult& suite,
                     double budget_seconds) {
    std::string detail;
    if (suite.counterexample) detail = "counterexample: " + *suite.counterexample;
    report(index, name, suite.passed, suite.seconds, budget_seconds, detail);
}

// --- criterion 6: throughput ----------------------------------------------

void criterion_performance() {
    const double seconds = verify::bench_single_qubit(1000, 10000, 2026, 'Z');
    report(6, "10k single-qubit Z measurements on 1000 nodes", true, seconds, 1.0);
}

}  // namespace

int main() {
    criterion_fig1();
    criterion_fig2();

    verify::Options options;
    options.max_qubits = 8;
    options.cases = 10000;
    options.seed = 1;
    criterion_suite(3, "exhaustive oracle sweep (n = 2, 3)",
                    verify::check_exhaustive_measurements(options), 60.0);
    criterion_suite(4, "randomized sweep (10k cases, n <= 8)",
                    verify::check_randomized_measurements(options), 120.0);

    // Criterion 5 combines the gate-rule and equivalence-rule suites; an E1
    // loop-handling counterexample would surface here as a serialized case.
    verify::SuiteResult gates = verify::check_gate_rules(options);
    verify::SuiteResult rules = verify::check_equivalence_rules(options);
    verify::SuiteResult combined;
    combined.name = "rule-equivalence";
    combined.passed = gates.passed && rules.passed;
    combined.cases_run = gates.cases_run + rules.cases_run;
    combined.seconds = gates.seconds + rules.seconds;
    combined.counterexample = gates.counterexample ? gates.counterexample : rules.counterexample;
    criterion_suite(5, "rule-level equivalence suite", combined, 600.0);

    criterion_performance();

    if (criteria_failed == 0) {
        std::printf("ACCEPTANCE: all 6 criteria passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", criteria_failed);
    return 1;
}
