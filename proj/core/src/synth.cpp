#include <birank/errors.hpp>
#include <birank/ingest.hpp>
#include <birank/synth.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace birank {

namespace {

double truncated_pareto_mean(double lo, double hi, double gamma) {
    const double a = 1.0 - gamma;
    const double norm = (std::pow(hi, a) - std::pow(lo, a)) / a;
    if (std::abs(gamma - 2.0) < 1e-12) {
        return std::log(hi / lo) / norm;
    }
    return (std::pow(hi, 2.0 - gamma) - std::pow(lo, 2.0 - gamma)) / (2.0 - gamma) / norm;
}

// Smallest-value cutoff whose truncated continuous mean matches the target.
double solve_lower_cutoff(double target, double hi, double gamma) {
    double lo_bound = 0.5;
    double hi_bound = hi;
    if (truncated_pareto_mean(lo_bound, hi, gamma) >= target) {
        return lo_bound;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo_bound + hi_bound);
        if (truncated_pareto_mean(mid, hi, gamma) < target) {
            lo_bound = mid;
        } else {
            hi_bound = mid;
        }
    }
    return 0.5 * (lo_bound + hi_bound);
}

std::vector<std::size_t> sample_degrees(std::size_t count, std::size_t stubs, std::size_t max_degree, double gamma,
                                        std::mt19937_64& rng) {
    const double target = static_cast<double>(stubs) / static_cast<double>(count);
    const double hi = static_cast<double>(max_degree) + 0.5;
    const double lo = solve_lower_cutoff(target, hi, gamma);
    const double a = 1.0 - gamma;
    const double lo_a = std::pow(lo, a);
    const double hi_a = std::pow(hi, a);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<std::size_t> degrees(count);
    std::size_t total = 0;
    for (auto& d : degrees) {
        const double x = std::pow(lo_a + unit(rng) * (hi_a - lo_a), 1.0 / a);
        d = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(x)), 1, max_degree);
        total += d;
    }
    // Nudge random vertices until the stub total is exact.
    std::uniform_int_distribution<std::size_t> pick(0, count - 1);
    while (total != stubs) {
        auto& d = degrees[pick(rng)];
        if (total < stubs && d < max_degree) {
            ++d;
            ++total;
        } else if (total > stubs && d > 1) {
            --d;
            --total;
        }
    }
    return degrees;
}

} // namespace

double fit_degree_exponent(const std::map<std::size_t, std::size_t>& histogram) {
    if (histogram.empty()) {
        return 0.0;
    }
    const double ratio = std::sqrt(2.0);
    std::map<int, std::size_t> bins;
    std::size_t total = 0;
    for (const auto& [deg, cnt] : histogram) {
        if (deg == 0) {
            continue;
        }
        bins[static_cast<int>(std::floor(std::log(static_cast<double>(deg)) / std::log(ratio)))] += cnt;
        total += cnt;
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [b, cnt] : bins) {
        const double lo = std::ceil(std::pow(ratio, b) - 1e-9);
        const double hi = std::ceil(std::pow(ratio, b + 1) - 1e-9);
        const double width = std::max(1.0, hi - lo);
        const double centre = std::sqrt(lo * std::max(lo, hi - 1.0));
        xs.push_back(std::log(centre));
        ys.push_back(std::log(static_cast<double>(cnt) / (width * static_cast<double>(total))));
    }
    if (xs.size() < 2) {
        return 0.0;
    }
    const double n = static_cast<double>(xs.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return -slope;
}

SyntheticResult generate_bipartite(const SyntheticSpec& spec) {
    if (spec.m == 0 || spec.n == 0 || !(spec.mean_degree > 0.0) || !(spec.gamma > 1.0)) {
        throw Error(ErrorCode::InvalidParameter, "synthetic graph needs m, n >= 1, mean_degree > 0, gamma > 1");
    }
    const auto stubs_wanted = static_cast<std::size_t>(
        std::llround(spec.mean_degree * static_cast<double>(spec.m + spec.n) / 2.0));
    const std::size_t stubs = std::clamp<std::size_t>(stubs_wanted, std::max(spec.m, spec.n), spec.m * spec.n);

    std::mt19937_64 rng(spec.seed);
    const auto deg_u = sample_degrees(spec.m, stubs, spec.n, spec.gamma, rng);
    const auto deg_v = sample_degrees(spec.n, stubs, spec.m, spec.gamma, rng);

    std::vector<vertex_t> v_stubs;
    v_stubs.reserve(stubs);
    for (std::size_t v = 0; v < spec.n; ++v) {
        v_stubs.insert(v_stubs.end(), deg_v[v], static_cast<vertex_t>(v));
    }
    std::shuffle(v_stubs.begin(), v_stubs.end(), rng);

    EdgeList list;
    list.declared_m = spec.m;
    list.declared_n = spec.n;
    list.entries.reserve(stubs);
    std::size_t cursor = 0;
    for (std::size_t u = 0; u < spec.m; ++u) {
        for (std::size_t k = 0; k < deg_u[u]; ++k) {
            list.entries.push_back({static_cast<vertex_t>(u), v_stubs[cursor++], std::nullopt});
        }
    }

    SyntheticResult result;
    auto [compact, dropped] = drop_isolated(list);
    auto [giant, report] = giant_component(to_graph(compact));
    result.retained_fraction =
        static_cast<double>(report.kept_component_vertices) / static_cast<double>(spec.m + spec.n);
    if (result.retained_fraction < 1.0) {
        result.warnings.push_back("DisconnectedAfterCleaning: giant component keeps " +
                                  std::to_string(report.kept_component_vertices) + " of " +
                                  std::to_string(spec.m + spec.n) + " vertices");
    }
    if (stubs != stubs_wanted) {
        result.warnings.push_back("mean degree clamped to keep the degree sequence feasible");
    }

    std::map<std::size_t, std::size_t> hist;
    for (std::size_t i = 0; i < giant.size(); ++i) {
        ++hist[giant.degree(i)];
    }
    result.realized_gamma = fit_degree_exponent(hist);
    result.realized_mean_degree = 2.0 * static_cast<double>(giant.nnz()) / static_cast<double>(giant.size());
    result.graph = std::move(giant);
    return result;
}

} // namespace birank
