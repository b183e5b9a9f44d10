#pragma once

#include <birank/ingest.hpp>
#include <birank/operators.hpp>
#include <birank/rankers.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace birank::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kNotConverged = 3,
};

/// Everything a command needs, filled from flags.
struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string format = "auto";
    bool one_based = false;
    std::string algorithm = "bipartite";
    RankParams params;
    std::string h_mode = "uniform";
    std::string partition_path;
    std::string output_path;
    std::string report_path;
    std::string histogram_path;
    std::size_t top_k = 0;
    std::vector<double> epsilons{0.8, 0.85, 0.9, 0.95};
    std::vector<std::string> algorithms{"bipartite", "pagerank"};
    bool allow_partial = false;
    bool clean_first = false;
    double threshold = 0.02;
    double spectral_tol = 1e-12;
    std::size_t synth_m = 500;
    std::size_t synth_n = 700;
    double mean_degree = 10.0;
    double gamma = 2.5;
    std::uint64_t seed = 1;
};

/// Picks the parser from the extension: .mtx/.mm, .tsv/.txt/.csv, else KONECT.
Format detect_format(const std::string& path, const std::string& requested);

/// Partition file: "global_index block" per line, '#' comments.
Partition read_partition(const std::string& path, std::size_t size);

/// Parses a ranking CSV written by `rank` into scores by global index.
std::vector<double> read_ranking_csv(const std::string& path);

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_clean(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_rank(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spectral(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and runs the chosen command. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace birank::cli
