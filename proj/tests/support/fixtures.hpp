#pragma once

#include <birank/graph.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <cstdint>
#include <random>
#include <vector>

namespace birank::testing {

// Two U vertices, four V vertices: u0 links to every v, u1 only to v3.
inline BipartiteGraph example_graph() {
    const std::vector<Edge> edges{{0, 0, {}}, {0, 1, {}}, {0, 2, {}}, {0, 3, {}}, {1, 3, {}}};
    return build_graph(edges, 2, 4);
}

inline BipartiteGraph k11() {
    const std::vector<Edge> edges{{0, 0, {}}};
    return build_graph(edges, 1, 1);
}

// Random spanning tree across the sides plus `extra` random edges.
inline BipartiteGraph random_connected(std::size_t m, std::size_t n, std::size_t extra, std::uint64_t seed,
                                       bool weighted = false) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> wdist(0.5, 2.0);
    auto weight = [&]() -> std::optional<double> {
        if (weighted) {
            return wdist(rng);
        }
        return std::nullopt;
    };
    std::vector<Edge> edges;
    edges.push_back({0, 0, weight()});
    std::vector<int> order;
    order.insert(order.end(), m - 1, 0);
    order.insert(order.end(), n - 1, 1);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t placed_u = 1;
    std::size_t placed_v = 1;
    for (int side : order) {
        if (side == 0) {
            std::uniform_int_distribution<std::size_t> pick(0, placed_v - 1);
            edges.push_back({static_cast<vertex_t>(placed_u++), static_cast<vertex_t>(pick(rng)), weight()});
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, placed_u - 1);
            edges.push_back({static_cast<vertex_t>(pick(rng)), static_cast<vertex_t>(placed_v++), weight()});
        }
    }
    std::uniform_int_distribution<std::size_t> pu(0, m - 1);
    std::uniform_int_distribution<std::size_t> pv(0, n - 1);
    for (std::size_t k = 0; k < extra; ++k) {
        edges.push_back({static_cast<vertex_t>(pu(rng)), static_cast<vertex_t>(pv(rng)), weight()});
    }
    return build_graph(edges, m, n);
}

// Random sizes with m + n <= max_total, both sides >= 1.
inline BipartiteGraph random_fixture(std::uint64_t seed, std::size_t max_total = 200, bool weighted = false) {
    std::mt19937_64 rng(seed * 7919 + 17);
    std::uniform_int_distribution<std::size_t> side(1, max_total / 2);
    const std::size_t m = side(rng);
    const std::size_t n = side(rng);
    std::uniform_int_distribution<std::size_t> extra(0, 3 * (m + n));
    return random_connected(m, n, extra(rng), seed, weighted);
}

inline double linf(std::span<const double> a, std::span<const double> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

} // namespace birank::testing
