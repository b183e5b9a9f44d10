#pragma once

#include <birank/graph.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace birank {

/// Per-side power-law degrees joined by a configuration-model pairing.
struct SyntheticSpec {
    std::size_t m = 500;
    std::size_t n = 700;
    /// 2|E| / (m + n) before multi-edges collapse.
    double mean_degree = 10.0;
    double gamma = 2.5;
    std::uint64_t seed = 1;
};

struct SyntheticResult {
    /// Giant component of the generated graph.
    BipartiteGraph graph;
    double realized_gamma = 0.0;
    double realized_mean_degree = 0.0;
    /// Fraction of the m+n requested vertices kept after cleaning.
    double retained_fraction = 1.0;
    std::vector<std::string> warnings;
};

/// Throws InvalidParameter unless gamma > 1, m, n >= 1, mean_degree > 0.
SyntheticResult generate_bipartite(const SyntheticSpec& spec);

/**
 * Least-squares slope of log density vs log degree over logarithmic bins
 * (ratio sqrt 2). Returns the exponent gamma (negated slope).
 */
double fit_degree_exponent(const std::map<std::size_t, std::size_t>& histogram);

} // namespace birank
