#pragma once

#include <birank/graph.hpp>
#include <birank/operators.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace birank {

struct ConvergenceReport {
    std::size_t iterations = 0;
    bool converged = false;
    /// L1 distance between successive iterates, one per iteration.
    std::vector<double> residuals;
    /// Geometric mean of the last ten residual ratios; approximates |lambda_2|.
    double rate_estimate = 0.0;
    std::chrono::duration<double, std::milli> runtime{0};
};

enum class Algorithm { BipartiteRank, PageRank, NcdAwareRank };

std::string_view to_string(Algorithm a) noexcept;
/// Accepts "bipartite", "pagerank", "ncdaware". Throws InvalidParameter.
Algorithm parse_algorithm(std::string_view name);

struct RankingResult {
    RankVector pi;
    ConvergenceReport report;
    Algorithm algorithm = Algorithm::BipartiteRank;
    RankParams params;
    std::vector<std::string> warnings;
};

/// Writes one application of the chain's transition into `out`.
using StepFunction = std::function<void(std::span<const double> in, std::span<double> out)>;

/// Geometric mean of the last `window` ratios r[k]/r[k-1], skipping zeros.
double residual_rate(std::span<const double> residuals, std::size_t window = 10);

/**
 * Iterates pi <- step(pi), renormalizing each iterate, until the L1
 * difference drops to `tol` or `max_iter` steps ran. Non-convergence is
 * reported through `report.converged`, never thrown.
 */
RankingResult power_method(const StepFunction& step, std::size_t size, double tol, std::size_t max_iter,
                           const std::optional<RankVector>& init = std::nullopt);

RankingResult bipartite_rank(const BipartiteGraph& g, const RankParams& params,
                             const std::optional<RankVector>& init = std::nullopt);

RankingResult page_rank(const BipartiteGraph& g, const RankParams& params,
                        const std::optional<RankVector>& init = std::nullopt);

RankingResult ncdaware_rank(const BipartiteGraph& g, const Partition& partition, const RankParams& params,
                            const std::optional<RankVector>& init = std::nullopt);

/// Dispatches on `algorithm`; NCDawareRank uses `partition` or the sides.
RankingResult rank(const BipartiteGraph& g, Algorithm algorithm, const RankParams& params,
                   const std::optional<Partition>& partition = std::nullopt,
                   const std::optional<RankVector>& init = std::nullopt);

} // namespace birank
