#include <birank/errors.hpp>
#include <birank/ingest.hpp>
#include <birank/rankers.hpp>

#include <cmath>

namespace birank {

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::BipartiteRank: return "bipartite";
    case Algorithm::PageRank: return "pagerank";
    case Algorithm::NcdAwareRank: return "ncdaware";
    }
    return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
    if (name == "bipartite" || name == "bipartiterank" || name == "br") {
        return Algorithm::BipartiteRank;
    }
    if (name == "pagerank" || name == "pr") {
        return Algorithm::PageRank;
    }
    if (name == "ncdaware" || name == "ncdawarerank" || name == "ncd") {
        return Algorithm::NcdAwareRank;
    }
    throw Error(ErrorCode::InvalidParameter, "unknown algorithm '" + std::string(name) + "'");
}

double residual_rate(std::span<const double> residuals, std::size_t window) {
    double log_sum = 0.0;
    std::size_t used = 0;
    for (std::size_t k = residuals.size(); k >= 2 && used < window; --k) {
        const double prev = residuals[k - 2];
        const double cur = residuals[k - 1];
        if (prev > 0.0 && cur > 0.0) {
            log_sum += std::log(cur / prev);
            ++used;
        }
    }
    return used == 0 ? 0.0 : std::exp(log_sum / static_cast<double>(used));
}

RankingResult power_method(const StepFunction& step, std::size_t size, double tol, std::size_t max_iter,
                           const std::optional<RankVector>& init) {
    if (!(tol > 0.0) || max_iter < 1 || size == 0) {
        throw Error(ErrorCode::InvalidParameter, "power_method needs tol > 0, max_iter >= 1, size > 0");
    }
    const auto start = std::chrono::steady_clock::now();
    std::vector<double> current;
    if (init) {
        if (init->size() != size) {
            throw Error(ErrorCode::DimensionMismatch, "initial vector has wrong length");
        }
        if (!init->is_distribution()) {
            throw Error(ErrorCode::InvalidParameter, "initial vector is not a probability distribution");
        }
        current.assign(init->values().begin(), init->values().end());
    } else {
        current.assign(size, 1.0 / static_cast<double>(size));
    }
    std::vector<double> next(size);

    RankingResult result;
    auto& report = result.report;
    while (report.iterations < max_iter) {
        step(current, next);
        const double total = stable_sum(next);
        if (total != 1.0) {
            for (auto& x : next) {
                x /= total;
            }
        }
        double diff = 0.0;
        for (std::size_t i = 0; i < size; ++i) {
            diff += std::abs(next[i] - current[i]);
        }
        ++report.iterations;
        report.residuals.push_back(diff);
        current.swap(next);
        if (diff <= tol) {
            report.converged = true;
            break;
        }
    }
    report.rate_estimate = residual_rate(report.residuals);
    report.runtime = std::chrono::steady_clock::now() - start;
    result.pi = RankVector(std::move(current));
    return result;
}

namespace {

void warn_if_disconnected(const BipartiteGraph& g, RankingResult& result) {
    const auto comps = connected_components(g);
    if (comps.count() > 1) {
        result.warnings.push_back("DisconnectedInput: graph has " + std::to_string(comps.count()) +
                                  " components; the stationary distribution is not unique");
    }
}

} // namespace

RankingResult bipartite_rank(const BipartiteGraph& g, const RankParams& params, const std::optional<RankVector>& init) {
    params.validate_pagerank();
    const auto sides = side_partition(g);
    const TransitionOperator h(g, params.h_mode);
    const BlockTeleport jump(sides);
    const double eps = params.epsilon;
    std::vector<double> scratch(g.size());
    auto step = [&](std::span<const double> in, std::span<double> out) {
        h.apply_left(in, out);
        jump.apply(in, scratch);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = eps * out[i] + (1.0 - eps) * scratch[i];
        }
    };
    auto result = power_method(step, g.size(), params.tol, params.max_iter, init);
    result.algorithm = Algorithm::BipartiteRank;
    result.params = params;
    warn_if_disconnected(g, result);
    return result;
}

RankingResult page_rank(const BipartiteGraph& g, const RankParams& params, const std::optional<RankVector>& init) {
    params.validate_pagerank();
    const TransitionOperator h(g, params.h_mode);
    const double eps = params.epsilon;
    const double n = static_cast<double>(g.size());
    auto step = [&](std::span<const double> in, std::span<double> out) {
        h.apply_left(in, out);
        const double teleport = (eps * h.dangling_mass(in) + (1.0 - eps) * stable_sum(in)) / n;
        for (auto& x : out) {
            x = eps * x + teleport;
        }
    };
    auto result = power_method(step, g.size(), params.tol, params.max_iter, init);
    result.algorithm = Algorithm::PageRank;
    result.params = params;
    warn_if_disconnected(g, result);
    return result;
}

RankingResult ncdaware_rank(const BipartiteGraph& g, const Partition& partition, const RankParams& params,
                            const std::optional<RankVector>& init) {
    params.validate_ncdaware();
    const auto factors = ncdaware_factorize(g, partition);
    const TransitionOperator h(g, params.h_mode);
    const double eta = params.eta;
    const double mu = params.mu;
    const double n = static_cast<double>(g.size());
    std::vector<double> scratch(g.size());
    auto step = [&](std::span<const double> in, std::span<double> out) {
        h.apply_left(in, out);
        factors.apply_left(in, scratch);
        const double teleport = (eta * h.dangling_mass(in) + (1.0 - eta - mu) * stable_sum(in)) / n;
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = eta * out[i] + mu * scratch[i] + teleport;
        }
    };
    auto result = power_method(step, g.size(), params.tol, params.max_iter, init);
    result.algorithm = Algorithm::NcdAwareRank;
    result.params = params;
    warn_if_disconnected(g, result);
    return result;
}

RankingResult rank(const BipartiteGraph& g, Algorithm algorithm, const RankParams& params,
                   const std::optional<Partition>& partition, const std::optional<RankVector>& init) {
    switch (algorithm) {
    case Algorithm::BipartiteRank: return bipartite_rank(g, params, init);
    case Algorithm::PageRank: return page_rank(g, params, init);
    case Algorithm::NcdAwareRank: return ncdaware_rank(g, partition ? *partition : side_partition(g), params, init);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown algorithm");
}

} // namespace birank
