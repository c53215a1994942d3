#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "measurement.hpp"
#include "pauli.hpp"

namespace stabgraph {

// Line-oriented circuit programs.  `#` starts a comment, tokens are
// whitespace-separated and node indices are 1-based in the text (stored
// 0-based here).  The first statement declares the qubit count; edge/hollow/
// loop/sign declarations follow and must precede gate and measure
// instructions.
//
//   qubits 4
//   edge 1 2
//   hollow 3
//   H 1
//   measure I Z Z Z outcome +1

struct GateInstruction {
    char letter;  // 'H', 'S' or 'Z'
    node_t node;
    bool operator==(const GateInstruction&) const = default;
};

struct MeasureInstruction {
    PauliProduct product;
    std::optional<int> forced_outcome;  // +1 or -1
    bool operator==(const MeasureInstruction&) const = default;
};

using Instruction = std::variant<GateInstruction, MeasureInstruction>;

struct CircuitProgram {
    node_t qubits = 0;
    EdgeList edges;
    NodeList hollow;
    NodeList loops;
    NodeList signs;
    std::vector<Instruction> instructions;
    bool operator==(const CircuitProgram&) const = default;
};

CircuitProgram parse_program(const std::string& text);
// Canonical text form; parse_program(print_program(p)) == p.
std::string print_program(const CircuitProgram& p);

struct RunOptions {
    std::uint64_t seed = 0;
    // When set, outcomes for measurements that are random and carry no
    // program-level `outcome` are taken from this list, in order.  The list
    // must be consumed exactly.
    std::optional<std::vector<int>> forced_outcomes;  // entries +1 / -1
};

struct RunResult {
    std::vector<MeasurementRecord> records;
    std::vector<PauliProduct> products;  // one per record, in order
    StabilizerGraph final_graph;
};

RunResult run_program(const CircuitProgram& p, const RunOptions& options);

enum class EmitMode { trace, json, dot };

// Deterministic text rendering of a run: one line per measurement record
// (1-based nodes) plus the final graph in the requested format.
std::string format_run(const RunResult& result, EmitMode mode);

}  // namespace stabgraph
