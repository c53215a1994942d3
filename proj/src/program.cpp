#include "program.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include <json.hpp>

#include "clifford.hpp"
#include "serialize.hpp"

namespace stabgraph {

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#')
            ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start + 1)});
    }
    return out;
}

[[noreturn]] void syntax_fail(int line, int col, const std::string& message) {
    throw Error(ErrorCode::syntax_error, line, col, message);
}

[[noreturn]] void semantic_fail(int line, int col, const std::string& message) {
    throw Error(ErrorCode::semantic_error, line, col, message);
}

std::uint64_t parse_uint(const Token& tok, int line) {
    if (tok.text.empty() || tok.text.find_first_not_of("0123456789") != std::string::npos)
        syntax_fail(line, tok.col, "expected an unsigned integer, got \"" + tok.text + "\"");
    try {
        return std::stoull(tok.text);
    } catch (const std::exception&) {
        syntax_fail(line, tok.col, "integer out of range");
    }
}

// 1-based node reference from the text.
node_t parse_node(const Token& tok, int line, node_t qubits) {
    std::uint64_t raw = parse_uint(tok, line);
    if (raw == 0 || raw > qubits)
        semantic_fail(line, tok.col,
                      "node index " + tok.text + " out of range 1.." + std::to_string(qubits));
    return static_cast<node_t>(raw - 1);
}

void expect_arity(const std::vector<Token>& toks, std::size_t want, int line) {
    if (toks.size() != want)
        syntax_fail(line, toks.empty() ? 1 : toks.back().col,
                    "expected " + std::to_string(want - 1) + " argument(s) after \"" +
                        toks[0].text + "\"");
}

}  // namespace

CircuitProgram parse_program(const std::string& text) {
    CircuitProgram prog;
    bool have_qubits = false;
    bool seen_instruction = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::vector<Token> toks = tokenize_line(raw);
        if (toks.empty()) continue;
        const std::string& kw = toks[0].text;

        if (!have_qubits) {
            if (kw != "qubits")
                syntax_fail(line_no, toks[0].col, "program must start with \"qubits <n>\"");
            expect_arity(toks, 2, line_no);
            std::uint64_t n = parse_uint(toks[1], line_no);
            if (n == 0) semantic_fail(line_no, toks[1].col, "qubit count must be positive");
            if (n > 0xffffffffull) semantic_fail(line_no, toks[1].col, "qubit count too large");
            prog.qubits = static_cast<node_t>(n);
            have_qubits = true;
            continue;
        }

        if (kw == "qubits") {
            semantic_fail(line_no, toks[0].col, "duplicate qubits declaration");
        } else if (kw == "edge" || kw == "hollow" || kw == "loop" || kw == "sign") {
            if (seen_instruction)
                semantic_fail(line_no, toks[0].col, "declarations must precede instructions");
            if (kw == "edge") {
                expect_arity(toks, 3, line_no);
                node_t j = parse_node(toks[1], line_no, prog.qubits);
                node_t k = parse_node(toks[2], line_no, prog.qubits);
                if (j == k) semantic_fail(line_no, toks[2].col, "self edges are not allowed");
                auto key = std::minmax(j, k);
                for (const auto& e : prog.edges)
                    if (std::minmax(e.first, e.second) == key)
                        semantic_fail(line_no, toks[0].col, "duplicate edge declaration");
                prog.edges.emplace_back(j, k);
            } else {
                expect_arity(toks, 2, line_no);
                node_t j = parse_node(toks[1], line_no, prog.qubits);
                NodeList& set = kw == "hollow" ? prog.hollow : kw == "loop" ? prog.loops : prog.signs;
                if (std::find(set.begin(), set.end(), j) != set.end())
                    semantic_fail(line_no, toks[0].col, "duplicate " + kw + " declaration");
                set.push_back(j);
            }
        } else if (kw == "H" || kw == "S" || kw == "Z") {
            expect_arity(toks, 2, line_no);
            node_t j = parse_node(toks[1], line_no, prog.qubits);
            prog.instructions.push_back(GateInstruction{kw[0], j});
            seen_instruction = true;
        } else if (kw == "measure") {
            if (toks.size() < 1 + prog.qubits)
                syntax_fail(line_no, toks.back().col,
                            "measure needs one letter per qubit (" + std::to_string(prog.qubits) +
                                ")");
            MeasureInstruction instr;
            instr.product.letters.reserve(prog.qubits);
            for (node_t q = 0; q < prog.qubits; ++q) {
                const Token& tok = toks[1 + q];
                if (tok.text.size() != 1 || std::string("IXYZ").find(tok.text[0]) == std::string::npos)
                    syntax_fail(line_no, tok.col, "measure letters must be I, X, Y or Z");
                instr.product.letters.push_back(tok.text[0]);
            }
            std::size_t rest = 1 + prog.qubits;
            if (rest < toks.size()) {
                if (toks[rest].text != "outcome")
                    syntax_fail(line_no, toks[rest].col, "unexpected token \"" + toks[rest].text + "\"");
                if (rest + 1 >= toks.size())
                    syntax_fail(line_no, toks[rest].col, "outcome needs +1 or -1");
                const Token& val = toks[rest + 1];
                if (val.text == "+1")
                    instr.forced_outcome = +1;
                else if (val.text == "-1")
                    instr.forced_outcome = -1;
                else
                    syntax_fail(line_no, val.col, "outcome must be +1 or -1");
                if (rest + 2 != toks.size())
                    syntax_fail(line_no, toks[rest + 2].col, "trailing tokens after outcome");
            }
            if (instr.product.is_identity())
                semantic_fail(line_no, toks[0].col, "measurement needs a non-identity letter");
            prog.instructions.push_back(std::move(instr));
            seen_instruction = true;
        } else {
            syntax_fail(line_no, toks[0].col, "unknown statement \"" + kw + "\"");
        }
    }
    if (!have_qubits) syntax_fail(line_no + 1, 1, "program must start with \"qubits <n>\"");
    return prog;
}

std::string print_program(const CircuitProgram& p) {
    std::ostringstream out;
    out << "qubits " << p.qubits << "\n";
    for (const auto& [j, k] : p.edges) out << "edge " << (j + 1) << " " << (k + 1) << "\n";
    for (node_t j : p.hollow) out << "hollow " << (j + 1) << "\n";
    for (node_t j : p.loops) out << "loop " << (j + 1) << "\n";
    for (node_t j : p.signs) out << "sign " << (j + 1) << "\n";
    for (const Instruction& ins : p.instructions) {
        if (const auto* gate = std::get_if<GateInstruction>(&ins)) {
            out << gate->letter << " " << (gate->node + 1) << "\n";
        } else {
            const auto& m = std::get<MeasureInstruction>(ins);
            out << "measure";
            for (char c : m.product.letters) out << " " << c;
            if (m.forced_outcome) out << " outcome " << (*m.forced_outcome > 0 ? "+1" : "-1");
            out << "\n";
        }
    }
    return out.str();
}

RunResult run_program(const CircuitProgram& p, const RunOptions& options) {
    RunResult result;
    result.final_graph = make_graph(p.qubits, p.edges, p.hollow, p.loops, p.signs);

    std::mt19937_64 rng(options.seed);
    std::deque<int> queue;
    if (options.forced_outcomes)
        queue.assign(options.forced_outcomes->begin(), options.forced_outcomes->end());

    for (const Instruction& ins : p.instructions) {
        if (const auto* gate = std::get_if<GateInstruction>(&ins)) {
            StabilizerGraph& g = result.final_graph;
            switch (gate->letter) {
                case 'H': apply_h_inplace(g, gate->node); break;
                case 'S': apply_s_inplace(g, gate->node); break;
                case 'Z': apply_z_inplace(g, gate->node); break;
            }
            continue;
        }
        const auto& m = std::get<MeasureInstruction>(ins);
        OutcomePolicy policy = OutcomePolicy::sample(rng);
        if (m.forced_outcome) {
            policy = OutcomePolicy::force(*m.forced_outcome > 0 ? 0 : 1);
        } else if (options.forced_outcomes) {
            policy = OutcomePolicy::provider([&queue]() {
                if (queue.empty())
                    fail(ErrorCode::usage_error, "forced outcome list exhausted");
                int v = queue.front();
                queue.pop_front();
                return v > 0 ? 0 : 1;
            });
        }
        MeasurementRecord rec = measure_pauli(result.final_graph, m.product, policy);
        result.final_graph = rec.post_graph;
        result.products.push_back(m.product);
        result.records.push_back(std::move(rec));
    }
    if (!queue.empty()) fail(ErrorCode::usage_error, "unused forced outcomes remain");
    return result;
}

namespace {

std::string words_text(const std::vector<std::pair<node_t, std::string>>& words) {
    std::string out = "[";
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(words[i].first + 1) + ":" + words[i].second;
    }
    out += "]";
    return out;
}

nlohmann::ordered_json words_json(const std::vector<std::pair<node_t, std::string>>& words) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [node, word] : words)
        arr.push_back({{"node", node + 1}, {"word", word}});
    return arr;
}

std::string record_line(std::size_t index, const PauliProduct& product,
                        const MeasurementRecord& rec) {
    std::ostringstream out;
    out << "measurement " << (index + 1) << ": product=" << product.letters
        << " outcome=" << (rec.outcome_value() > 0 ? "+1" : "-1")
        << " deterministic=" << (rec.deterministic ? "true" : "false")
        << " probability=" << (rec.deterministic ? "1" : "1/2") << " chosen_node=";
    if (rec.chosen_node)
        out << (*rec.chosen_node + 1);
    else
        out << "-";
    out << " basis_changes=" << words_text(rec.basis_changes)
        << " undo=" << words_text(rec.undo_words);
    return out.str();
}

}  // namespace

std::string format_run(const RunResult& result, EmitMode mode) {
    std::ostringstream out;
    if (mode == EmitMode::json) {
        nlohmann::ordered_json doc;
        auto records = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < result.records.size(); ++i) {
            const MeasurementRecord& rec = result.records[i];
            nlohmann::ordered_json r;
            r["index"] = i + 1;
            r["product"] = result.products[i].letters;
            r["outcome"] = rec.outcome_value();
            r["a"] = rec.outcome_a;
            r["deterministic"] = rec.deterministic;
            r["probability"] = rec.probability;
            if (rec.chosen_node)
                r["chosen_node"] = *rec.chosen_node + 1;
            else
                r["chosen_node"] = nullptr;
            r["b"] = rec.classification.parity_b;
            r["basis_changes"] = words_json(rec.basis_changes);
            r["undo"] = words_json(rec.undo_words);
            r["post_graph"] = nlohmann::ordered_json::parse(graph_to_json(rec.post_graph));
            records.push_back(std::move(r));
        }
        doc["records"] = std::move(records);
        doc["final_graph"] = nlohmann::ordered_json::parse(graph_to_json(result.final_graph));
        out << doc.dump() << "\n";
        return out.str();
    }
    for (std::size_t i = 0; i < result.records.size(); ++i)
        out << record_line(i, result.products[i], result.records[i]) << "\n";
    if (mode == EmitMode::dot)
        out << export_dot(result.final_graph);
    else
        out << "final graph: " << graph_to_json(result.final_graph) << "\n";
    return out.str();
}

}  // namespace stabgraph
