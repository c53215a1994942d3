#pragma once

#include <stdexcept>
#include <string>

namespace stabgraph {

enum class ErrorCode {
    index_out_of_range,
    self_edge_rejected,
    edge_required,
    loop_required,
    loop_forbidden,
    precondition_violated,
    not_simplified,
    chosen_not_eligible,
    impossible_outcome,
    too_many_qubits,
    length_mismatch,
    schema_error,
    syntax_error,
    semantic_error,
    usage_error,
    invalid_argument,
    internal_error,
};

const char* error_code_name(ErrorCode code);

// Exception carrying a stable error code. Parser errors additionally carry a
// 1-based line and column.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    Error(ErrorCode code, int line, int col, std::string message)
        : std::runtime_error(std::move(message)), code_(code), line_(line), col_(col) {}

    ErrorCode code() const { return code_; }
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    ErrorCode code_;
    int line_ = 0;
    int col_ = 0;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message) {
    throw Error(code, std::move(message));
}

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::index_out_of_range: return "IndexOutOfRange";
        case ErrorCode::self_edge_rejected: return "SelfEdgeRejected";
        case ErrorCode::edge_required: return "EdgeRequired";
        case ErrorCode::loop_required: return "LoopRequired";
        case ErrorCode::loop_forbidden: return "LoopForbidden";
        case ErrorCode::precondition_violated: return "PreconditionViolated";
        case ErrorCode::not_simplified: return "NotSimplified";
        case ErrorCode::chosen_not_eligible: return "ChosenNotEligible";
        case ErrorCode::impossible_outcome: return "ImpossibleOutcome";
        case ErrorCode::too_many_qubits: return "TooManyQubits";
        case ErrorCode::length_mismatch: return "LengthMismatch";
        case ErrorCode::schema_error: return "SchemaError";
        case ErrorCode::syntax_error: return "SyntaxError";
        case ErrorCode::semantic_error: return "SemanticError";
        case ErrorCode::usage_error: return "UsageError";
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::internal_error: return "InternalError";
    }
    return "UnknownError";
}

}  // namespace stabgraph
