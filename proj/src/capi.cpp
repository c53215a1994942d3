#include "stabgraph.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include <json.hpp>

#include "clifford.hpp"
#include "equivalence.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "measurement.hpp"
#include "program.hpp"
#include "serialize.hpp"
#include "verify.hpp"

using namespace stabgraph;

struct sg_graph {
    StabilizerGraph impl;
};

struct sg_record {
    MeasurementRecord impl;
    std::string product;
    sg_graph post;
};

struct sg_program {
    CircuitProgram impl;
};

struct sg_run_result {
    RunResult impl;
    std::vector<sg_record*> records;
    sg_graph final_graph;

    ~sg_run_result() {
        for (sg_record* r : records) delete r;
    }
};

struct sg_rng {
    std::mt19937_64 impl;
};

namespace {

thread_local std::string g_last_error = "";
thread_local int g_last_line = 0;
thread_local int g_last_col = 0;

sg_status map_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::index_out_of_range: return SG_ERR_INDEX_OUT_OF_RANGE;
        case ErrorCode::self_edge_rejected: return SG_ERR_SELF_EDGE;
        case ErrorCode::edge_required: return SG_ERR_EDGE_REQUIRED;
        case ErrorCode::loop_required: return SG_ERR_LOOP_REQUIRED;
        case ErrorCode::loop_forbidden: return SG_ERR_LOOP_FORBIDDEN;
        case ErrorCode::precondition_violated: return SG_ERR_PRECONDITION;
        case ErrorCode::not_simplified: return SG_ERR_NOT_SIMPLIFIED;
        case ErrorCode::chosen_not_eligible: return SG_ERR_CHOSEN_NOT_ELIGIBLE;
        case ErrorCode::impossible_outcome: return SG_ERR_IMPOSSIBLE_OUTCOME;
        case ErrorCode::too_many_qubits: return SG_ERR_TOO_MANY_QUBITS;
        case ErrorCode::length_mismatch: return SG_ERR_LENGTH_MISMATCH;
        case ErrorCode::schema_error: return SG_ERR_SCHEMA;
        case ErrorCode::syntax_error: return SG_ERR_SYNTAX;
        case ErrorCode::semantic_error: return SG_ERR_SEMANTIC;
        case ErrorCode::usage_error: return SG_ERR_USAGE;
        case ErrorCode::invalid_argument: return SG_ERR_INVALID_ARGUMENT;
        case ErrorCode::internal_error: return SG_ERR_INTERNAL;
    }
    return SG_ERR_INTERNAL;
}

// Runs the body, converting exceptions into status codes.
template <typename Fn>
sg_status guarded(Fn&& fn) {
    g_last_line = g_last_col = 0;
    try {
        fn();
        return SG_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        g_last_line = e.line();
        g_last_col = e.col();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SG_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& text) {
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

sg_status require(bool ok, const char* message) {
    if (ok) return SG_OK;
    g_last_error = message;
    return SG_ERR_INVALID_ARGUMENT;
}

OutcomePolicy make_policy(int forced_outcome, sg_rng* rng) {
    if (forced_outcome > 0) return OutcomePolicy::force(0);
    if (forced_outcome < 0) return OutcomePolicy::force(1);
    if (!rng) fail(ErrorCode::invalid_argument, "sampling needs an rng handle");
    return OutcomePolicy::sample(rng->impl);
}

sg_record* wrap_record(MeasurementRecord&& rec, std::string product) {
    sg_record* out = new sg_record;
    out->impl = std::move(rec);
    out->product = std::move(product);
    out->post.impl = out->impl.post_graph;
    return out;
}

}  // namespace

extern "C" {

const char* sg_status_name(sg_status status) {
    switch (status) {
        case SG_OK: return "OK";
        case SG_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
        case SG_ERR_SELF_EDGE: return "SelfEdgeRejected";
        case SG_ERR_EDGE_REQUIRED: return "EdgeRequired";
        case SG_ERR_LOOP_REQUIRED: return "LoopRequired";
        case SG_ERR_LOOP_FORBIDDEN: return "LoopForbidden";
        case SG_ERR_PRECONDITION: return "PreconditionViolated";
        case SG_ERR_NOT_SIMPLIFIED: return "NotSimplified";
        case SG_ERR_CHOSEN_NOT_ELIGIBLE: return "ChosenNotEligible";
        case SG_ERR_IMPOSSIBLE_OUTCOME: return "ImpossibleOutcome";
        case SG_ERR_TOO_MANY_QUBITS: return "TooManyQubits";
        case SG_ERR_LENGTH_MISMATCH: return "LengthMismatch";
        case SG_ERR_SCHEMA: return "SchemaError";
        case SG_ERR_SYNTAX: return "SyntaxError";
        case SG_ERR_SEMANTIC: return "SemanticError";
        case SG_ERR_USAGE: return "UsageError";
        case SG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case SG_ERR_INTERNAL: return "InternalError";
    }
    return "UnknownError";
}

const char* sg_last_error(void) { return g_last_error.c_str(); }
int sg_last_error_line(void) { return g_last_line; }
int sg_last_error_col(void) { return g_last_col; }

void sg_string_free(char* text) { std::free(text); }

/* ---------------- graphs ---------------- */

sg_status sg_graph_create(uint32_t n, const uint32_t* edge_pairs, size_t edge_count,
                          const uint32_t* hollow, size_t hollow_count, const uint32_t* loops,
                          size_t loop_count, const uint32_t* signs, size_t sign_count,
                          sg_graph** out) {
    if (sg_status s = require(out != nullptr, "out pointer is null")) return s;
    if (sg_status s = require((edge_pairs || edge_count == 0) && (hollow || hollow_count == 0) &&
                                  (loops || loop_count == 0) && (signs || sign_count == 0),
                              "null array with nonzero count"))
        return s;
    return guarded([&] {
        EdgeList edges;
        edges.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i)
            edges.emplace_back(edge_pairs[2 * i], edge_pairs[2 * i + 1]);
        NodeList h(hollow, hollow + hollow_count);
        NodeList l(loops, loops + loop_count);
        NodeList s(signs, signs + sign_count);
        *out = new sg_graph{make_graph(n, edges, h, l, s)};
    });
}

sg_graph* sg_graph_clone(const sg_graph* g) { return g ? new sg_graph{g->impl} : nullptr; }

void sg_graph_free(sg_graph* g) { delete g; }

uint32_t sg_graph_node_count(const sg_graph* g) { return g ? g->impl.node_count() : 0; }

static int graph_predicate(const sg_graph* g, uint32_t j, uint32_t k, int which) {
    if (!g) return -1;
    int result = -1;
    guarded([&] {
        switch (which) {
            case 0: result = g->impl.has_edge(j, k) ? 1 : 0; break;
            case 1: result = g->impl.is_hollow(j) ? 1 : 0; break;
            case 2: result = g->impl.has_loop(j) ? 1 : 0; break;
            case 3: result = g->impl.has_sign(j) ? 1 : 0; break;
        }
    });
    return result;
}

int sg_graph_has_edge(const sg_graph* g, uint32_t j, uint32_t k) {
    return graph_predicate(g, j, k, 0);
}
int sg_graph_is_hollow(const sg_graph* g, uint32_t j) { return graph_predicate(g, j, 0, 1); }
int sg_graph_has_loop(const sg_graph* g, uint32_t j) { return graph_predicate(g, j, 0, 2); }
int sg_graph_has_sign(const sg_graph* g, uint32_t j) { return graph_predicate(g, j, 0, 3); }

int sg_graph_equal(const sg_graph* a, const sg_graph* b) {
    if (!a || !b) return -1;
    return a->impl == b->impl ? 1 : 0;
}

sg_status sg_graph_neighbors(const sg_graph* g, uint32_t j, uint32_t* out, size_t cap,
                             size_t* count) {
    if (sg_status s = require(g && count, "null argument")) return s;
    return guarded([&] {
        NodeList nbrs = g->impl.neighbor_list(j);
        *count = nbrs.size();
        for (size_t i = 0; i < nbrs.size() && i < cap; ++i) out[i] = nbrs[i];
    });
}

sg_status sg_graph_toggle_edge(sg_graph* g, uint32_t j, uint32_t k) {
    if (sg_status s = require(g != nullptr, "null graph")) return s;
    return guarded([&] { g->impl.xor_edge(j, k); });
}

sg_status sg_graph_apply_gate(sg_graph* g, char letter, uint32_t node) {
    if (sg_status s = require(g != nullptr, "null graph")) return s;
    return guarded([&] { g->impl = apply_gate(g->impl, LocalGate{letter, node}); });
}

sg_status sg_graph_apply_word(sg_graph* g, uint32_t node, const char* word) {
    if (sg_status s = require(g && word, "null argument")) return s;
    return guarded([&] { g->impl = apply_word(g->impl, node, word); });
}

sg_status sg_graph_apply_e1(sg_graph* g, uint32_t node) {
    if (sg_status s = require(g != nullptr, "null graph")) return s;
    return guarded([&] { g->impl = apply_e1(g->impl, node); });
}

sg_status sg_graph_apply_e2(sg_graph* g, uint32_t j, uint32_t k) {
    if (sg_status s = require(g != nullptr, "null graph")) return s;
    return guarded([&] { g->impl = apply_e2(g->impl, j, k); });
}

sg_status sg_graph_reduce(sg_graph* g, const uint32_t* targets, size_t target_count) {
    if (sg_status s = require(g && (targets || target_count == 0), "null argument")) return s;
    return guarded([&] {
        NodeList t(targets, targets + target_count);
        reduce_nodes_inplace(g->impl, t);
    });
}

sg_status sg_graph_disconnect_hollow_measured(sg_graph* g, const uint32_t* measured,
                                              size_t measured_count) {
    if (sg_status s = require(g && (measured || measured_count == 0), "null argument")) return s;
    return guarded([&] {
        NodeList m(measured, measured + measured_count);
        disconnect_hollow_measured_inplace(g->impl, m);
    });
}

sg_status sg_graph_to_json(const sg_graph* g, char** out_text) {
    if (sg_status s = require(g && out_text, "null argument")) return s;
    return guarded([&] { *out_text = copy_string(graph_to_json(g->impl)); });
}

sg_status sg_graph_from_json(const char* text, sg_graph** out) {
    if (sg_status s = require(text && out, "null argument")) return s;
    return guarded([&] { *out = new sg_graph{graph_from_json(text)}; });
}

sg_status sg_graph_to_dot(const sg_graph* g, char** out_text) {
    if (sg_status s = require(g && out_text, "null argument")) return s;
    return guarded([&] { *out_text = copy_string(export_dot(g->impl)); });
}

/* ---------------- measurements ---------------- */

sg_rng* sg_rng_create(uint64_t seed) { return new sg_rng{std::mt19937_64(seed)}; }
void sg_rng_free(sg_rng* rng) { delete rng; }

sg_status sg_measure_pauli(const sg_graph* g, const char* letters, int forced_outcome,
                           sg_rng* rng, sg_record** out) {
    if (sg_status s = require(g && letters && out, "null argument")) return s;
    return guarded([&] {
        PauliProduct m{std::string(letters)};
        MeasurementRecord rec = measure_pauli(g->impl, m, make_policy(forced_outcome, rng));
        *out = wrap_record(std::move(rec), m.letters);
    });
}

sg_status sg_measure_single(const sg_graph* g, uint32_t node, char letter, int forced_outcome,
                            sg_rng* rng, sg_record** out) {
    if (sg_status s = require(g && out, "null argument")) return s;
    return guarded([&] {
        MeasurementRecord rec = measure_single(g->impl, node, letter,
                                               make_policy(forced_outcome, rng));
        std::string product(g->impl.node_count(), 'I');
        product[node] = letter;
        *out = wrap_record(std::move(rec), std::move(product));
    });
}

int sg_record_is_deterministic(const sg_record* record) {
    return record ? (record->impl.deterministic ? 1 : 0) : -1;
}

int sg_record_outcome(const sg_record* record) {
    return record ? record->impl.outcome_value() : 0;
}

double sg_record_probability(const sg_record* record) {
    return record ? record->impl.probability : 0.0;
}

int64_t sg_record_chosen_node(const sg_record* record) {
    if (!record || !record->impl.chosen_node) return -1;
    return static_cast<int64_t>(*record->impl.chosen_node);
}

int sg_record_parity_b(const sg_record* record) {
    return record ? record->impl.classification.parity_b : -1;
}

const char* sg_record_product(const sg_record* record) {
    return record ? record->product.c_str() : "";
}

const sg_graph* sg_record_post_graph(const sg_record* record) {
    return record ? &record->post : nullptr;
}

sg_status sg_record_words_json(const sg_record* record, char** out_text) {
    if (sg_status s = require(record && out_text, "null argument")) return s;
    return guarded([&] {
        auto words = [](const std::vector<std::pair<node_t, std::string>>& list) {
            auto arr = nlohmann::ordered_json::array();
            for (const auto& [node, word] : list)
                arr.push_back({{"node", node}, {"word", word}});
            return arr;
        };
        nlohmann::ordered_json doc;
        doc["basis_changes"] = words(record->impl.basis_changes);
        doc["undo"] = words(record->impl.undo_words);
        *out_text = copy_string(doc.dump());
    });
}

void sg_record_free(sg_record* record) { delete record; }

/* ---------------- programs ---------------- */

sg_status sg_program_parse(const char* text, sg_program** out) {
    if (sg_status s = require(text && out, "null argument")) return s;
    return guarded([&] { *out = new sg_program{parse_program(text)}; });
}

sg_status sg_program_print(const sg_program* program, char** out_text) {
    if (sg_status s = require(program && out_text, "null argument")) return s;
    return guarded([&] { *out_text = copy_string(print_program(program->impl)); });
}

uint32_t sg_program_qubits(const sg_program* program) {
    return program ? program->impl.qubits : 0;
}

void sg_program_free(sg_program* program) { delete program; }

sg_status sg_program_run(const sg_program* program, uint64_t seed, const int* forced_outcomes,
                         size_t forced_count, sg_run_result** out) {
    if (sg_status s = require(program && out, "null argument")) return s;
    return guarded([&] {
        RunOptions options;
        options.seed = seed;
        if (forced_outcomes)
            options.forced_outcomes = std::vector<int>(forced_outcomes,
                                                       forced_outcomes + forced_count);
        auto* result = new sg_run_result;
        try {
            result->impl = run_program(program->impl, options);
            result->final_graph.impl = result->impl.final_graph;
            for (size_t i = 0; i < result->impl.records.size(); ++i) {
                MeasurementRecord rec = result->impl.records[i];
                result->records.push_back(
                    wrap_record(std::move(rec), result->impl.products[i].letters));
            }
        } catch (...) {
            delete result;
            throw;
        }
        *out = result;
    });
}

size_t sg_run_record_count(const sg_run_result* result) {
    return result ? result->records.size() : 0;
}

const sg_record* sg_run_record(const sg_run_result* result, size_t index) {
    if (!result || index >= result->records.size()) return nullptr;
    return result->records[index];
}

const sg_graph* sg_run_final_graph(const sg_run_result* result) {
    return result ? &result->final_graph : nullptr;
}

sg_status sg_run_format(const sg_run_result* result, const char* mode, char** out_text) {
    if (sg_status s = require(result && mode && out_text, "null argument")) return s;
    return guarded([&] {
        EmitMode emit;
        std::string m(mode);
        if (m == "trace")
            emit = EmitMode::trace;
        else if (m == "json")
            emit = EmitMode::json;
        else if (m == "dot")
            emit = EmitMode::dot;
        else
            fail(ErrorCode::usage_error, "emit mode must be trace, json or dot");
        *out_text = copy_string(format_run(result->impl, emit));
    });
}

void sg_run_result_free(sg_run_result* result) { delete result; }

/* ---------------- verification ---------------- */

sg_status sg_verify(uint32_t max_qubits, uint32_t cases, uint64_t seed, char** out_report,
                    int* out_passed) {
    if (sg_status s = require(out_passed != nullptr, "null argument")) return s;
    return guarded([&] {
        verify::Options options;
        options.max_qubits = max_qubits;
        options.cases = cases;
        options.seed = seed;
        std::vector<verify::SuiteResult> suites = verify::run_all(options);

        bool all = true;
        auto arr = nlohmann::ordered_json::array();
        for (const verify::SuiteResult& suite : suites) {
            all = all && suite.passed;
            nlohmann::ordered_json entry;
            entry["suite"] = suite.name;
            entry["passed"] = suite.passed;
            entry["checks"] = suite.cases_run;
            entry["seconds"] = suite.seconds;
            if (suite.counterexample)
                entry["counterexample"] = nlohmann::ordered_json::parse(*suite.counterexample);
            arr.push_back(std::move(entry));
        }
        *out_passed = all ? 1 : 0;
        if (out_report) {
            nlohmann::ordered_json doc;
            doc["passed"] = all;
            doc["suites"] = std::move(arr);
            *out_report = copy_string(doc.dump());
        }
    });
}

sg_status sg_bench(uint32_t nodes, uint32_t measurements, uint64_t seed, char letter,
                   double* out_seconds) {
    if (sg_status s = require(out_seconds != nullptr, "null argument")) return s;
    if (sg_status s = require(nodes > 0, "need at least one node")) return s;
    return guarded([&] {
        *out_seconds = verify::bench_single_qubit(nodes, measurements, seed, letter);
    });
}

} /* extern "C" */
