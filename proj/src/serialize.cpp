#include "serialize.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace stabgraph {

namespace {

using nlohmann::ordered_json;

ordered_json node_array(const NodeList& nodes) {
    ordered_json arr = ordered_json::array();
    for (node_t j : nodes) arr.push_back(j);
    return arr;
}

[[noreturn]] void schema_fail(const std::string& what) {
    fail(ErrorCode::schema_error, "graph JSON: " + what);
}

std::uint64_t expect_uint(const ordered_json& v, const char* what) {
    if (!v.is_number_unsigned()) schema_fail(std::string(what) + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

node_t expect_node(const ordered_json& v, node_t n, const char* what) {
    std::uint64_t raw = expect_uint(v, what);
    if (raw >= n) schema_fail(std::string(what) + " out of range");
    return static_cast<node_t>(raw);
}

NodeList expect_node_array(const ordered_json& v, node_t n, const char* what) {
    if (!v.is_array()) schema_fail(std::string(what) + " must be an array");
    NodeList out;
    for (const auto& item : v) out.push_back(expect_node(item, n, what));
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1] >= out[i]) schema_fail(std::string(what) + " must be strictly ascending");
    return out;
}

}  // namespace

std::string graph_to_json(const StabilizerGraph& g) {
    ordered_json doc;
    doc["n"] = g.node_count();
    ordered_json edges = ordered_json::array();
    for (const auto& [j, k] : g.edge_list()) edges.push_back(ordered_json::array({j, k}));
    doc["edges"] = std::move(edges);
    doc["hollow"] = node_array(g.hollow_nodes());
    doc["loops"] = node_array(g.loop_nodes());
    doc["signs"] = node_array(g.sign_nodes());
    return doc.dump();
}

StabilizerGraph graph_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        schema_fail(std::string("parse error: ") + e.what());
    }
    if (!doc.is_object()) schema_fail("top level must be an object");
    static const char* keys[] = {"n", "edges", "hollow", "loops", "signs"};
    for (const char* key : keys)
        if (!doc.contains(key)) schema_fail(std::string("missing key \"") + key + "\"");
    if (doc.size() != 5) schema_fail("unexpected extra keys");

    std::uint64_t n_raw = expect_uint(doc["n"], "n");
    if (n_raw == 0) schema_fail("n must be positive");
    if (n_raw > 0xffffffffull) schema_fail("n too large");
    const node_t n = static_cast<node_t>(n_raw);

    StabilizerGraph g(n);
    if (!doc["edges"].is_array()) schema_fail("edges must be an array");
    std::pair<node_t, node_t> prev{0, 0};
    bool first = true;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2) schema_fail("each edge must be a pair");
        node_t j = expect_node(pair[0], n, "edge endpoint");
        node_t k = expect_node(pair[1], n, "edge endpoint");
        if (j >= k) schema_fail("edge pairs must satisfy j < k");
        if (!first && std::pair{j, k} <= prev) schema_fail("edges must be sorted and unique");
        prev = {j, k};
        first = false;
        g.xor_edge(j, k);
    }
    for (node_t j : expect_node_array(doc["hollow"], n, "hollow")) g.set_hollow(j, true);
    for (node_t j : expect_node_array(doc["loops"], n, "loops")) g.set_loop(j, true);
    for (node_t j : expect_node_array(doc["signs"], n, "signs")) g.set_sign(j, true);
    return g;
}

std::string export_dot(const StabilizerGraph& g) {
    std::ostringstream out;
    out << "graph stabilizer_state {\n";
    out << "  node [shape=circle];\n";
    for (node_t j = 0; j < g.node_count(); ++j) {
        out << "  " << (j + 1) << " [label=\"" << (j + 1);
        if (g.has_sign(j)) out << "\xe2\x88\x92";  // U+2212 minus sign
        out << "\"";
        if (!g.is_hollow(j)) out << ", style=filled, fillcolor=lightgray";
        out << "];\n";
    }
    for (node_t j : g.loop_nodes()) out << "  " << (j + 1) << " -- " << (j + 1) << ";\n";
    for (const auto& [j, k] : g.edge_list())
        out << "  " << (j + 1) << " -- " << (k + 1) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace stabgraph
