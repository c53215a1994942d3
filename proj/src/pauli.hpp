#pragma once

#include <span>
#include <string>

#include "error.hpp"
#include "graph.hpp"

namespace stabgraph {

// A tensor product of single-qubit Pauli operators, one letter per node.
struct PauliProduct {
    std::string letters;  // each 'I', 'X', 'Y' or 'Z'

    PauliProduct() = default;
    explicit PauliProduct(std::string s) : letters(std::move(s)) { validate(); }

    bool operator==(const PauliProduct&) const = default;

    node_t size() const { return static_cast<node_t>(letters.size()); }
    char letter(node_t j) const { return letters.at(j); }
    bool is_identity() const { return letters.find_first_not_of('I') == std::string::npos; }
    bool z_type() const {
        for (char c : letters)
            if (c != 'I' && c != 'Z') return false;
        return true;
    }

    NodeList measured_nodes() const {
        NodeList out;
        for (node_t j = 0; j < size(); ++j)
            if (letters[j] != 'I') out.push_back(j);
        return out;
    }

    void validate() const {
        if (letters.empty()) fail(ErrorCode::invalid_argument, "empty Pauli product");
        for (char c : letters)
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
                fail(ErrorCode::invalid_argument, "Pauli letters must be I, X, Y or Z");
    }

    static PauliProduct z_on(node_t n, std::span<const node_t> nodes) {
        PauliProduct m;
        m.letters.assign(n, 'I');
        for (node_t j : nodes) {
            if (j >= n) fail(ErrorCode::index_out_of_range, "measured node out of range");
            m.letters[j] = 'Z';
        }
        return m;
    }

    static PauliProduct single(node_t n, node_t j, char letter) {
        if (j >= n) fail(ErrorCode::index_out_of_range, "node out of range");
        PauliProduct m;
        m.letters.assign(n, 'I');
        m.letters[j] = letter;
        m.validate();
        return m;
    }
};

}  // namespace stabgraph
