#include "verify.hpp"

#include <chrono>
#include <cmath>

#include <json.hpp>

#include "clifford.hpp"
#include "dense.hpp"
#include "equivalence.hpp"
#include "graph.hpp"
#include "measurement.hpp"
#include "random.hpp"
#include "serialize.hpp"

namespace stabgraph::verify {

namespace {

using oracle::DenseState;
using oracle::Projection;

constexpr double prob_tol = 1e-12;
constexpr double phase_tol = 1e-9;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string make_counterexample(const std::string& suite, const std::string& check,
                                const StabilizerGraph& g, const std::string& detail,
                                const std::string& product = "") {
    nlohmann::ordered_json doc;
    doc["suite"] = suite;
    doc["check"] = check;
    doc["graph"] = nlohmann::ordered_json::parse(graph_to_json(g));
    if (!product.empty()) doc["product"] = product;
    doc["detail"] = detail;
    return doc.dump();
}

// Walks every decorated graph on n nodes.
template <typename Fn>
void for_each_graph(node_t n, Fn&& fn) {
    const std::uint64_t edge_codes = std::uint64_t(1) << (n * (n - 1) / 2);
    const std::uint32_t deco_codes = std::uint32_t(1) << n;
    for (std::uint64_t e = 0; e < edge_codes; ++e)
        for (std::uint32_t h = 0; h < deco_codes; ++h)
            for (std::uint32_t l = 0; l < deco_codes; ++l)
                for (std::uint32_t s = 0; s < deco_codes; ++s)
                    fn(graph_from_code(n, e, h, l, s));
}

PauliProduct product_from_code(node_t n, std::uint64_t code) {
    static constexpr char letters[4] = {'I', 'X', 'Y', 'Z'};
    PauliProduct m;
    m.letters.assign(n, 'I');
    for (node_t j = 0; j < n; ++j, code /= 4) m.letters[j] = letters[code % 4];
    return m;
}

struct CaseOutcome {
    std::uint64_t checks = 0;
    std::optional<std::string> failure;
};

// The five measurement checks for one (graph, product) pair, optionally
// extended with chosen-node invariance and re-measurement idempotence.
CaseOutcome run_measurement_case(const std::string& suite, const StabilizerGraph& g,
                                 const PauliProduct& m, const DenseState& psi, bool thorough) {
    CaseOutcome out;
    auto failed = [&](const std::string& check, const std::string& detail) {
        out.failure = make_counterexample(suite, check, g, detail, m.letters);
    };

    Projection proj[2] = {oracle::project(psi, m, 0), oracle::project(psi, m, 1)};
    const double p0 = proj[0].probability;
    ++out.checks;
    const bool is_zero = std::abs(p0) <= prob_tol;
    const bool is_half = std::abs(p0 - 0.5) <= prob_tol;
    const bool is_one = std::abs(p0 - 1.0) <= prob_tol;
    if (!(is_zero || is_half || is_one) ||
        std::abs(proj[0].probability + proj[1].probability - 1.0) > prob_tol) {
        failed("probability-trichotomy", "oracle probability " + std::to_string(p0));
        return out;
    }
    const bool oracle_deterministic = is_zero || is_one;
    const int certain_a = is_one ? 0 : 1;

    // Graph-side pipeline, stopped before the post-measurement rewrite.
    StabilizerGraph frame = g;
    for (node_t j = 0; j < m.size(); ++j) {
        if (m.letter(j) == 'X') apply_word_inplace(frame, j, "H");
        if (m.letter(j) == 'Y') apply_word_inplace(frame, j, "ZSH");
    }
    const NodeList measured = m.measured_nodes();
    StabilizerGraph simplified = frame;
    reduce_nodes_inplace(simplified, measured);
    disconnect_hollow_measured_inplace(simplified, measured);
    const Classification cls = classify(simplified, measured);

    ++out.checks;
    if (cls.solid_even.empty() != oracle_deterministic) {
        failed("classification-agreement",
               cls.solid_even.empty() ? "graph says certain, oracle says random"
                                      : "graph says random, oracle says certain");
        return out;
    }

    if (oracle_deterministic) {
        ++out.checks;
        if (cls.parity_b != certain_a) {
            failed("deterministic-outcome", "b=" + std::to_string(cls.parity_b) +
                                                " oracle a=" + std::to_string(certain_a));
            return out;
        }
        MeasurementRecord rec = measure_pauli(g, m, OutcomePolicy::force(certain_a));
        ++out.checks;
        if (!rec.deterministic || rec.outcome_a != certain_a ||
            !oracle::equal_up_to_phase(oracle::graph_to_state(rec.post_graph), psi, phase_tol)) {
            failed("deterministic-post-state", "post graph state differs from input");
            return out;
        }
        return out;
    }

    const DenseState frame_psi = oracle::graph_to_state(frame);
    const PauliProduct mz = PauliProduct::z_on(m.size(), measured);
    for (int a = 0; a <= 1; ++a) {
        MeasurementRecord rec = measure_pauli(g, m, OutcomePolicy::force(a));
        ++out.checks;
        if (rec.deterministic || !rec.chosen_node || rec.probability != 0.5) {
            failed("random-record", "record fields wrong for outcome a=" + std::to_string(a));
            return out;
        }
        ++out.checks;
        if (!oracle::equal_up_to_phase(oracle::graph_to_state(rec.post_graph), *proj[a].post,
                                       phase_tol)) {
            failed("random-post-state", "post graph differs from projection, a=" + std::to_string(a));
            return out;
        }

        // Cat-state construction, compared in the Z-measurement frame.
        Projection frame_proj = oracle::project(frame_psi, mz, a);
        const int parity = (a + cls.parity_b) & 1;
        DenseState cat =
            oracle::cat_state_post(simplified, cls.solid_even, cls.solid_even.front(), parity);
        ++out.checks;
        if (!frame_proj.post || !oracle::equal_up_to_phase(cat, *frame_proj.post, phase_tol)) {
            failed("cat-state", "cat construction differs from projection, a=" + std::to_string(a));
            return out;
        }

        if (!thorough) continue;

        // Any eligible choice must give the same state.
        for (node_t p : cls.solid_even) {
            StabilizerGraph alt = post_transform(simplified, cls, p, parity);
            ++out.checks;
            if (!oracle::equal_up_to_phase(oracle::graph_to_state(alt), *frame_proj.post,
                                           phase_tol)) {
                failed("chosen-node-invariance", "choice p=" + std::to_string(p) + " diverges");
                return out;
            }
        }

        // Measuring the same product again must be certain with the same
        // outcome and leave the state alone.
        MeasurementRecord again = measure_pauli(rec.post_graph, m, OutcomePolicy::force(a));
        ++out.checks;
        if (!again.deterministic || again.outcome_a != a ||
            !oracle::equal_up_to_phase(oracle::graph_to_state(again.post_graph),
                                       oracle::graph_to_state(rec.post_graph), phase_tol)) {
            failed("re-measurement", "second measurement not idempotent, a=" + std::to_string(a));
            return out;
        }
    }
    return out;
}

}  // namespace

SuiteResult check_gate_rules(const Options& options) {
    SuiteResult result;
    result.name = "gate-rules";
    const auto start = Clock::now();

    const node_t exhaustive_cap = std::min<node_t>(4, options.max_qubits);
    for (node_t n = 1; n <= exhaustive_cap && result.passed; ++n) {
        for_each_graph(n, [&](const StabilizerGraph& g) {
            if (!result.passed) return;
            const DenseState psi = oracle::graph_to_state(g);
            for (node_t j = 0; j < n; ++j) {
                struct GateCase {
                    char letter;
                    void (DenseState::*dense)(node_t);
                };
                static constexpr GateCase gates[] = {
                    {'H', &DenseState::apply_h},
                    {'S', &DenseState::apply_s},
                    {'Z', &DenseState::apply_z},
                };
                for (const auto& gate : gates) {
                    DenseState want = psi;
                    (want.*gate.dense)(j);
                    StabilizerGraph got = apply_word(g, j, std::string_view(&gate.letter, 1));
                    ++result.cases_run;
                    if (!oracle::equal_up_to_phase(oracle::graph_to_state(got), want, phase_tol)) {
                        result.passed = false;
                        result.counterexample = make_counterexample(
                            result.name, "gate-vs-dense", g,
                            std::string("gate ") + gate.letter + " on node " + std::to_string(j));
                        return;
                    }
                }
            }
        });
    }

    // Randomized word checks, including the Z^2 and S^4 identities.
    std::mt19937_64 rng(options.seed);
    for (std::uint32_t c = 0; c < 2000 && result.passed; ++c) {
        const node_t n = 1 + rand_below(rng, std::min<node_t>(options.max_qubits, 8));
        const StabilizerGraph g = random_graph(rng, n);
        const node_t j = rand_below(rng, n);
        const DenseState psi = oracle::graph_to_state(g);

        DenseState want = psi;
        std::string word;
        for (int i = 0, len = 1 + static_cast<int>(rand_below(rng, 4)); i < len; ++i) {
            const char letter = "HSZ"[rand_below(rng, 3)];
            word.push_back(letter);
            if (letter == 'H') want.apply_h(j);
            if (letter == 'S') want.apply_s(j);
            if (letter == 'Z') want.apply_z(j);
        }
        ++result.cases_run;
        StabilizerGraph got = apply_word(g, j, word);
        bool ok = oracle::equal_up_to_phase(oracle::graph_to_state(got), want, phase_tol);
        // Z twice and S four times are identities up to phase.
        ok = ok && oracle::equal_up_to_phase(
                       oracle::graph_to_state(apply_word(g, j, "ZZ")), psi, phase_tol);
        ok = ok && oracle::equal_up_to_phase(
                       oracle::graph_to_state(apply_word(g, j, "SSSS")), psi, phase_tol);
        if (!ok) {
            result.passed = false;
            result.counterexample = make_counterexample(result.name, "word-vs-dense", g,
                                                        "word " + word + " on node " +
                                                            std::to_string(j));
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult check_equivalence_rules(const Options& options) {
    SuiteResult result;
    result.name = "equivalence-rules";
    const auto start = Clock::now();

    auto check_preserved = [&](const StabilizerGraph& before, const StabilizerGraph& after,
                               const DenseState& psi, const char* check, const std::string& what) {
        ++result.cases_run;
        if (!oracle::equal_up_to_phase(oracle::graph_to_state(after), psi, phase_tol)) {
            result.passed = false;
            result.counterexample = make_counterexample(result.name, check, before, what);
            return false;
        }
        return true;
    };

    const node_t exhaustive_cap = std::min<node_t>(3, options.max_qubits);
    for (node_t n = 1; n <= exhaustive_cap && result.passed; ++n) {
        for_each_graph(n, [&](const StabilizerGraph& g) {
            if (!result.passed) return;
            const DenseState psi = oracle::graph_to_state(g);
            for (node_t j = 0; j < n && result.passed; ++j) {
                if (g.has_loop(j)) {
                    if (!check_preserved(g, apply_e1(g, j), psi, "e1-preserves-state",
                                         "node " + std::to_string(j)))
                        return;
                }
                for (node_t k = 0; k < n && result.passed; ++k) {
                    if (j == k || !g.has_edge(j, k) || g.has_loop(j) || g.has_loop(k)) continue;
                    if (!check_preserved(g, apply_e2(g, j, k), psi, "e2-preserves-state",
                                         "edge " + std::to_string(j) + "," + std::to_string(k)))
                        return;
                }
            }
        });
    }

    // Randomized rule checks plus the reduction and disconnection pipelines.
    std::mt19937_64 rng(options.seed + 1);
    for (std::uint32_t c = 0; c < 2000 && result.passed; ++c) {
        const node_t n = 1 + rand_below(rng, std::min<node_t>(options.max_qubits, 8));
        const StabilizerGraph g = random_graph(rng, n);
        const DenseState psi = oracle::graph_to_state(g);

        for (node_t j = 0; j < n && result.passed; ++j) {
            if (g.has_loop(j))
                check_preserved(g, apply_e1(g, j), psi, "e1-preserves-state",
                                "node " + std::to_string(j));
            for (node_t k = j + 1; k < n && result.passed; ++k)
                if (g.has_edge(j, k) && !g.has_loop(j) && !g.has_loop(k))
                    check_preserved(g, apply_e2(g, j, k), psi, "e2-preserves-state",
                                    "edge " + std::to_string(j) + "," + std::to_string(k));
        }
        if (!result.passed) break;

        NodeList targets;
        for (node_t j = 0; j < n; ++j)
            if (rand_bit(rng)) targets.push_back(j);
        if (targets.empty()) targets.push_back(rand_below(rng, n));

        StabilizerGraph reduced = reduce_nodes(g, targets);
        ++result.cases_run;
        if (!is_reduced(reduced, targets) ||
            !oracle::equal_up_to_phase(oracle::graph_to_state(reduced), psi, phase_tol)) {
            result.passed = false;
            result.counterexample =
                make_counterexample(result.name, "reduce-nodes", g, "reduction failed");
            break;
        }
        StabilizerGraph simplified = disconnect_hollow_measured(reduced, targets);
        ++result.cases_run;
        if (!is_simplified(simplified, targets) ||
            !oracle::equal_up_to_phase(oracle::graph_to_state(simplified), psi, phase_tol)) {
            result.passed = false;
            result.counterexample =
                make_counterexample(result.name, "disconnect-hollow-measured", g,
                                    "disconnection failed");
            break;
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult check_exhaustive_measurements(const Options& options) {
    SuiteResult result;
    result.name = "measurements-exhaustive";
    const auto start = Clock::now();

    const node_t cap = std::min<node_t>(3, std::max<node_t>(2, options.max_qubits));
    for (node_t n = 2; n <= cap && result.passed; ++n) {
        std::uint64_t products = 1;
        for (node_t i = 0; i < n; ++i) products *= 4;
        for_each_graph(n, [&](const StabilizerGraph& g) {
            if (!result.passed) return;
            const DenseState psi = oracle::graph_to_state(g);
            for (std::uint64_t code = 1; code < products; ++code) {
                const PauliProduct m = product_from_code(n, code);
                if (m.is_identity()) continue;
                CaseOutcome c = run_measurement_case(result.name, g, m, psi, false);
                result.cases_run += c.checks;
                if (c.failure) {
                    result.passed = false;
                    result.counterexample = c.failure;
                    return;
                }
            }
        });
    }
    result.seconds = seconds_since(start);
    return result;
}

SuiteResult check_randomized_measurements(const Options& options) {
    SuiteResult result;
    result.name = "measurements-randomized";
    const auto start = Clock::now();

    std::mt19937_64 rng(options.seed + 2);
    const node_t cap = std::min<node_t>(options.max_qubits, 8);
    for (std::uint32_t c = 0; c < options.cases && result.passed; ++c) {
        const node_t n = 1 + rand_below(rng, cap);
        const StabilizerGraph g = random_graph(rng, n);
        const PauliProduct m = random_product(rng, n);
        const DenseState psi = oracle::graph_to_state(g);
        CaseOutcome outcome = run_measurement_case(result.name, g, m, psi, true);
        result.cases_run += outcome.checks;
        if (outcome.failure) {
            result.passed = false;
            result.counterexample = outcome.failure;
        }
    }
    result.seconds = seconds_since(start);
    return result;
}

std::vector<SuiteResult> run_all(const Options& options) {
    return {
        check_gate_rules(options),
        check_equivalence_rules(options),
        check_exhaustive_measurements(options),
        check_randomized_measurements(options),
    };
}

double bench_single_qubit(std::uint32_t nodes, std::uint32_t measurements, std::uint64_t seed,
                          char letter) {
    std::mt19937_64 rng(seed);
    StabilizerGraph g = random_sparse_graph(rng, nodes, std::size_t(nodes) * 4);
    const auto start = Clock::now();
    for (std::uint32_t i = 0; i < measurements; ++i) {
        const node_t j = rand_below(rng, nodes);
        const char pick = letter ? letter : "XYZ"[rand_below(rng, 3)];
        MeasurementRecord rec = measure_single(g, j, pick, OutcomePolicy::sample(rng));
        g = std::move(rec.post_graph);
    }
    return seconds_since(start);
}

}  // namespace stabgraph::verify
