// Command-line front end for the stabgraph shared library.  Talks to the
// library exclusively through the C interface in stabgraph.h.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 impossible forced outcome.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stabgraph.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_impossible = 3;

void print_error(sg_status status) {
    std::cerr << "error: code=" << sg_status_name(status);
    if (sg_last_error_line() > 0)
        std::cerr << " line=" << sg_last_error_line() << " col=" << sg_last_error_col();
    std::cerr << " message=\"" << sg_last_error() << "\"\n";
}

int exit_code_for(sg_status status) {
    return status == SG_ERR_IMPOSSIBLE_OUTCOME ? exit_impossible : exit_usage;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out = buffer.str();
    return true;
}

// "+1,-1,+1" -> {+1,-1,+1}
bool parse_outcome_list(const std::string& text, std::vector<int>& out) {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "+1")
            out.push_back(+1);
        else if (item == "-1")
            out.push_back(-1);
        else
            return false;
    }
    return !out.empty();
}

int run_command(const std::string& path, std::uint64_t seed, const std::string& outcomes,
                const std::string& emit) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: code=UsageError message=\"cannot read program file " << path
                  << "\"\n";
        return exit_usage;
    }

    std::vector<int> forced;
    bool use_forced = false;
    if (outcomes != "random") {
        if (!parse_outcome_list(outcomes, forced)) {
            std::cerr << "error: code=UsageError message=\"--outcomes must be 'random' or a "
                         "comma-separated list of +1/-1\"\n";
            return exit_usage;
        }
        use_forced = true;
    }

    sg_program* program = nullptr;
    sg_status status = sg_program_parse(text.c_str(), &program);
    if (status != SG_OK) {
        print_error(status);
        return exit_usage;
    }

    sg_run_result* result = nullptr;
    status = sg_program_run(program, seed, use_forced ? forced.data() : nullptr, forced.size(),
                            &result);
    sg_program_free(program);
    if (status != SG_OK) {
        print_error(status);
        return exit_code_for(status);
    }

    char* rendered = nullptr;
    status = sg_run_format(result, emit.c_str(), &rendered);
    if (status != SG_OK) {
        print_error(status);
        sg_run_result_free(result);
        return exit_usage;
    }
    std::cout << rendered;
    sg_string_free(rendered);
    sg_run_result_free(result);
    return exit_ok;
}

int verify_command(std::uint32_t max_qubits, std::uint32_t cases, std::uint64_t seed) {
    char* report = nullptr;
    int passed = 0;
    sg_status status = sg_verify(max_qubits, cases, seed, &report, &passed);
    if (status != SG_OK) {
        print_error(status);
        return exit_usage;
    }
    std::cout << report << "\n";
    sg_string_free(report);
    return passed ? exit_ok : exit_verify_failed;
}

int bench_command(std::uint32_t nodes, std::uint32_t measurements, std::uint64_t seed) {
    double seconds = 0.0;
    sg_status status = sg_bench(nodes, measurements, seed, 0, &seconds);
    if (status != SG_OK) {
        print_error(status);
        return exit_usage;
    }
    std::printf("nodes=%u measurements=%u elapsed_s=%.6f rate_per_s=%.1f\n", nodes, measurements,
                seconds, seconds > 0 ? measurements / seconds : 0.0);
    return exit_ok;
}

int export_dot_command(const std::string& path) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: code=UsageError message=\"cannot read graph file " << path << "\"\n";
        return exit_usage;
    }
    sg_graph* graph = nullptr;
    sg_status status = sg_graph_from_json(text.c_str(), &graph);
    if (status != SG_OK) {
        print_error(status);
        return exit_usage;
    }
    char* dot = nullptr;
    status = sg_graph_to_dot(graph, &dot);
    sg_graph_free(graph);
    if (status != SG_OK) {
        print_error(status);
        return exit_usage;
    }
    std::cout << dot;
    sg_string_free(dot);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer-state simulator on decorated graphs"};
    app.require_subcommand(1);

    std::string program_path;
    std::uint64_t seed = 0;
    std::string outcomes = "random";
    std::string emit = "trace";
    auto* run = app.add_subcommand("run", "execute a circuit program");
    run->add_option("program", program_path, "program file")->required();
    run->add_option("--seed", seed, "rng seed for sampled outcomes");
    run->add_option("--outcomes", outcomes, "'random' or comma-separated +1/-1 list");
    run->add_option("--emit", emit, "trace, json or dot")
        ->check(CLI::IsMember({"trace", "json", "dot"}));

    std::uint32_t max_qubits = 8;
    std::uint32_t cases = 10000;
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "run the oracle sweep suites");
    verify->add_option("--max-qubits", max_qubits, "cap for randomized sweeps")
        ->check(CLI::Range(1u, 14u));
    verify->add_option("--cases", cases, "randomized measurement cases");
    verify->add_option("--seed", verify_seed, "sweep seed");

    std::uint32_t nodes = 1000;
    std::uint32_t measurements = 10000;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "random single-qubit measurement throughput");
    bench->add_option("--nodes", nodes, "graph size")->check(CLI::Range(1u, 10000000u));
    bench->add_option("--measurements", measurements, "number of measurements");
    bench->add_option("--seed", bench_seed, "rng seed");

    std::string graph_path;
    auto* export_dot = app.add_subcommand("export-dot", "print a graph JSON file as DOT");
    export_dot->add_option("graph", graph_path, "graph JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return exit_usage;
    }

    if (run->parsed()) return run_command(program_path, seed, outcomes, emit);
    if (verify->parsed()) return verify_command(max_qubits, cases, verify_seed);
    if (bench->parsed()) return bench_command(nodes, measurements, bench_seed);
    if (export_dot->parsed()) return export_dot_command(graph_path);
    return exit_usage;
}
