#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gapcert::cli {

enum ExitCode : int {
    Success = 0,
    Inconclusive = 2,
    InputError = 3,
    ResourceLimit = 4,
};

/// Everything a subcommand needs, serialized verbatim into every output
/// for provenance.
struct RunConfig {
    std::string command;

    // certify
    mpq_class d{3, 4};
    mpq_class lambda_max{2501, 10000};

    // shared numerics
    int precision = 128;
    int threads = 0;
    int word_bound = 60;

    // covers / stats / pipeline
    std::uint64_t seed = 1;
    int n = 8;
    long samples = 5000;
    int cycle_length = 1;
    std::string word = "X";
    int retries = 64;
    int surface_word_len = 4;

    // classes / pipeline
    double L = 3.0;

    // ledger
    double eta = 0.1, w = 0.5, A = 1.0, B = 1.0, eps = 0.1;

    // bounds inputs
    double sys = 6.283185307179586;
    double ell = 1.7627471740390861;

    std::string out;            // empty: stdout
    std::string format = "json";

    std::string to_json() const;
    std::string content_hash() const;
};

int cmd_certify(const RunConfig& cfg);
int cmd_classes(const RunConfig& cfg);
int cmd_covers(const RunConfig& cfg);
int cmd_stats(const RunConfig& cfg);
int cmd_bounds(const RunConfig& cfg);
int cmd_pipeline(const RunConfig& cfg);

/// Shared by main and tests: dispatch with spec exit-code mapping.
int run_command(const RunConfig& cfg);

} // namespace gapcert::cli
