#include <birank/analysis.hpp>
#include <birank/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>

namespace birank {

namespace {

std::vector<double> signed_side_indicator(const Partition& sides) {
    if (sides.block_count() != 2) {
        throw Error(ErrorCode::InvalidParameter, "structural eigenpair needs a two-block side partition");
    }
    std::vector<double> v(sides.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = sides.block_of(i) == 0 ? 1.0 : -1.0;
    }
    return v;
}

// Deterministic, mode-generic start vector for spectral probing.
RankVector probe_vector(std::size_t size) {
    std::vector<double> v(size);
    std::uint64_t state = 0x9E3779B97F4A7C15ull;
    for (auto& x : v) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        x = 0.5 + static_cast<double>(state >> 11) * 0x1.0p-53;
    }
    const double total = std::accumulate(v.begin(), v.end(), 0.0);
    for (auto& x : v) {
        x /= total;
    }
    return RankVector(std::move(v));
}

void require_dense_size(std::size_t n) {
    if (n > kDenseOracleLimit) {
        throw Error(ErrorCode::TooLarge, "dense oracle limited to " + std::to_string(kDenseOracleLimit) +
                                             " vertices, got " + std::to_string(n));
    }
}

} // namespace

SpectralReport verify_structural_eigenpair(const BipartiteGraph& g, const Partition& sides, double epsilon,
                                           HMode mode) {
    const auto upsilon = signed_side_indicator(sides);
    std::vector<double> walk(g.size());
    std::vector<double> jump(g.size());
    TransitionOperator(g, mode).apply_right(upsilon, walk);
    BlockTeleport(sides).apply(upsilon, jump);

    SpectralReport report;
    report.epsilon = epsilon;
    report.structural_eigenvalue = (1.0 - epsilon) - epsilon;
    double worst = 0.0;
    for (std::size_t i = 0; i < upsilon.size(); ++i) {
        const double pv = epsilon * walk[i] + (1.0 - epsilon) * jump[i];
        worst = std::max(worst, std::abs(pv - report.structural_eigenvalue * upsilon[i]));
    }
    report.eigenpair_residual = worst;
    return report;
}

double estimate_lambda2(const BipartiteGraph& g, const Partition& sides, double epsilon, double tol,
                        std::size_t max_iter, HMode mode) {
    const TransitionOperator h(g, mode);
    const BlockTeleport jump(sides);
    std::vector<double> scratch(g.size());
    auto step = [&](std::span<const double> in, std::span<double> out) {
        h.apply_left(in, out);
        jump.apply(in, scratch);
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = epsilon * out[i] + (1.0 - epsilon) * scratch[i];
        }
    };
    const auto result = power_method(step, g.size(), tol, max_iter, probe_vector(g.size()));
    return result.report.rate_estimate;
}

SpectralReport spectral_report(const BipartiteGraph& g, double epsilon, double tol, double threshold, HMode mode) {
    const auto sides = side_partition(g);
    auto report = verify_structural_eigenpair(g, sides, epsilon, mode);
    report.lambda2_estimate = estimate_lambda2(g, sides, epsilon, tol, 100000, mode);
    report.structural_is_subdominant =
        std::abs(report.lambda2_estimate - std::abs(report.structural_eigenvalue)) <= threshold;
    return report;
}

Connectivity is_strongly_connected(const SparseRows& structure) {
    if (structure.rows() != structure.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "structure must be square");
    }
    const std::size_t n = structure.rows();
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> scc_stack;
    // (vertex, next edge cursor) frames replace recursion.
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    std::size_t counter = 0;
    std::size_t components = 0;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
            continue;
        }
        frames.emplace_back(root, structure.row_offsets()[root]);
        index[root] = low[root] = counter++;
        scc_stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            auto& [v, cursor] = frames.back();
            if (cursor < structure.row_offsets()[v + 1]) {
                const std::size_t w = structure.col_indices()[cursor++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    scc_stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, structure.row_offsets()[w]);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                ++components;
                std::size_t w = 0;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = false;
                } while (w != done);
            }
        }
    }
    return {components == 1, components};
}

std::size_t period(const SparseRows& structure) {
    const auto conn = is_strongly_connected(structure);
    if (!conn.strongly_connected) {
        throw Error(ErrorCode::NotStronglyConnected,
                    "period undefined: " + std::to_string(conn.components) + " strongly connected components");
    }
    const std::size_t n = structure.rows();
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n, unseen);
    std::queue<std::size_t> queue;
    dist[0] = 0;
    queue.push(0);
    while (!queue.empty()) {
        const auto u = queue.front();
        queue.pop();
        for (auto v : structure.row(u)) {
            if (dist[v] == unseen) {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    std::size_t result = 0;
    for (std::size_t u = 0; u < n; ++u) {
        for (auto v : structure.row(u)) {
            const auto lhs = static_cast<std::int64_t>(dist[u]) + 1;
            const auto rhs = static_cast<std::int64_t>(dist[v]);
            const auto term = static_cast<std::size_t>(lhs > rhs ? lhs - rhs : rhs - lhs);
            if (term != 0) {
                result = std::gcd(result, term);
            }
        }
    }
    return result;
}

SparseRows h_structure(const BipartiteGraph& g) {
    std::vector<SparseRows::Triplet> t;
    t.reserve(2 * g.nnz());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t offset = i < g.m() ? g.m() : 0;
        for (auto local : g.neighbors(i)) {
            t.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(offset + local), 1.0});
        }
    }
    return SparseRows::from_triplets(g.size(), g.size(), std::move(t), false);
}

SparseRows p_structure(const BipartiteGraph& g) {
    std::vector<SparseRows::Triplet> t;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t offset = i < g.m() ? g.m() : 0;
        for (auto local : g.neighbors(i)) {
            t.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(offset + local), 1.0});
        }
        const std::size_t lo = i < g.m() ? 0 : g.m();
        const std::size_t hi = i < g.m() ? g.m() : g.size();
        for (std::size_t j = lo; j < hi; ++j) {
            t.push_back({static_cast<vertex_t>(i), static_cast<vertex_t>(j), 1.0});
        }
    }
    return SparseRows::from_triplets(g.size(), g.size(), std::move(t), false);
}

CouplingReport ncd_coupling(const SparseRows& matrix, const Partition& partition) {
    if (matrix.rows() != matrix.cols() || partition.size() != matrix.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "coupling needs a square matrix matching the partition");
    }
    CouplingReport report;
    report.per_row_offblock.resize(matrix.rows(), 0.0);
    double total_off = 0.0;
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        const auto cols = matrix.row(r);
        double row_sum = 0.0;
        double off = 0.0;
        for (std::size_t e = 0; e < cols.size(); ++e) {
            const double x = matrix.value_at(matrix.row_offsets()[r] + e);
            if (x < 0.0) {
                throw Error(ErrorCode::NotStochastic, "negative entry in row " + std::to_string(r));
            }
            row_sum += x;
            if (partition.block_of(cols[e]) != partition.block_of(r)) {
                off += x;
            }
        }
        if (std::abs(row_sum - 1.0) > 1e-10) {
            throw Error(ErrorCode::NotStochastic,
                        "row " + std::to_string(r) + " sums to " + std::to_string(row_sum));
        }
        report.per_row_offblock[r] = off;
        report.max_offblock = std::max(report.max_offblock, off);
        total_off += off;
    }
    report.zeta = report.max_offblock;
    report.mean_offblock = matrix.rows() ? total_off / static_cast<double>(matrix.rows()) : 0.0;
    return report;
}

std::vector<std::size_t> top_k(std::span<const double> scores, std::size_t k) {
    std::vector<std::size_t> idx(scores.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    k = std::min(k, idx.size());
    auto before = [&](std::size_t a, std::size_t b) { return scores[a] != scores[b] ? scores[a] > scores[b] : a < b; };
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(), before);
    idx.resize(k);
    return idx;
}

double kendall_tau_b(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "kendall tau needs equal lengths");
    }
    const std::size_t n = a.size();
    if (n < 2) {
        return 1.0;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a[i] != a[j] ? a[i] < a[j] : b[i] < b[j];
    });

    auto pairs = [](std::int64_t t) { return t * (t - 1) / 2; };
    const std::int64_t n0 = pairs(static_cast<std::int64_t>(n));
    std::int64_t ties_a = 0;
    std::int64_t ties_joint = 0;
    {
        std::int64_t run_a = 1;
        std::int64_t run_joint = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            const bool same_a = i < n && a[order[i]] == a[order[i - 1]];
            const bool same_joint = same_a && b[order[i]] == b[order[i - 1]];
            if (same_joint) {
                ++run_joint;
            } else {
                ties_joint += pairs(run_joint);
                run_joint = 1;
            }
            if (same_a) {
                ++run_a;
            } else {
                ties_a += pairs(run_a);
                run_a = 1;
            }
        }
    }

    // Bottom-up merge sort on b counts the discordant swaps.
    std::vector<double> keys(n);
    for (std::size_t i = 0; i < n; ++i) {
        keys[i] = b[order[i]];
    }
    std::vector<double> buffer(n);
    std::int64_t swaps = 0;
    for (std::size_t width = 1; width < n; width *= 2) {
        for (std::size_t lo = 0; lo < n; lo += 2 * width) {
            const std::size_t mid = std::min(lo + width, n);
            const std::size_t hi = std::min(lo + 2 * width, n);
            std::size_t i = lo;
            std::size_t j = mid;
            std::size_t out = lo;
            while (i < mid && j < hi) {
                if (keys[j] < keys[i]) {
                    buffer[out++] = keys[j++];
                    swaps += static_cast<std::int64_t>(mid - i);
                } else {
                    buffer[out++] = keys[i++];
                }
            }
            while (i < mid) {
                buffer[out++] = keys[i++];
            }
            while (j < hi) {
                buffer[out++] = keys[j++];
            }
        }
        keys.swap(buffer);
    }
    std::int64_t ties_b = 0;
    {
        std::int64_t run = 1;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i < n && keys[i] == keys[i - 1]) {
                ++run;
            } else {
                ties_b += pairs(run);
                run = 1;
            }
        }
    }

    const double left = static_cast<double>(n0 - ties_a);
    const double right = static_cast<double>(n0 - ties_b);
    if (left == 0.0 || right == 0.0) {
        return left == right ? 1.0 : 0.0;
    }
    const double numerator = static_cast<double>(n0 - ties_a - ties_b + ties_joint - 2 * swaps);
    return numerator / std::sqrt(left * right);
}

ComparisonReport compare_rankings(std::span<const double> a, std::span<const double> b, std::size_t k) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::DimensionMismatch, "rankings have lengths " + std::to_string(a.size()) + " and " +
                                                      std::to_string(b.size()));
    }
    if (k == 0 || k > a.size()) {
        k = a.size();
    }
    ComparisonReport r;
    r.k = k;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::abs(a[i] - b[i]);
        r.l1_distance += d;
        r.linf_distance = std::max(r.linf_distance, d);
    }
    auto top_a = top_k(a, k);
    auto top_b = top_k(b, k);
    std::sort(top_a.begin(), top_a.end());
    std::sort(top_b.begin(), top_b.end());
    std::vector<std::size_t> common;
    std::vector<std::size_t> either;
    std::set_intersection(top_a.begin(), top_a.end(), top_b.begin(), top_b.end(), std::back_inserter(common));
    std::set_union(top_a.begin(), top_a.end(), top_b.begin(), top_b.end(), std::back_inserter(either));
    r.topk_jaccard = either.empty() ? 1.0 : static_cast<double>(common.size()) / static_cast<double>(either.size());

    std::vector<double> sub_a;
    std::vector<double> sub_b;
    for (auto i : either) {
        sub_a.push_back(a[i]);
        sub_b.push_back(b[i]);
    }
    r.kendall_tau_topk = kendall_tau_b(sub_a, sub_b);
    return r;
}

DenseMatrix dense_h(const BipartiteGraph& g, HMode mode) {
    require_dense_size(g.size());
    DenseMatrix h(g.size(), g.size());
    const bool use_weights = mode == HMode::Weighted && g.weighted();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const std::size_t offset = i < g.m() ? g.m() : 0;
        const auto nbrs = g.neighbors(i);
        const auto ws = g.neighbor_weights(i);
        double total = 0.0;
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            total += use_weights ? ws[k] : 1.0;
        }
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            h(i, offset + nbrs[k]) = (use_weights ? ws[k] : 1.0) / total;
        }
    }
    return h;
}

DenseMatrix dense_block_teleport(const Partition& sides) {
    require_dense_size(sides.size());
    DenseMatrix m(sides.size(), sides.size());
    for (std::size_t i = 0; i < sides.size(); ++i) {
        for (std::size_t j = 0; j < sides.size(); ++j) {
            if (sides.block_of(i) == sides.block_of(j)) {
                m(i, j) = 1.0 / static_cast<double>(sides.block_sizes()[sides.block_of(i)]);
            }
        }
    }
    return m;
}

DenseMatrix dense_ncd_teleport(const BipartiteGraph& g, const Partition& partition) {
    require_dense_size(g.size());
    if (partition.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "partition does not match graph");
    }
    DenseMatrix m(g.size(), g.size());
    for (std::size_t u = 0; u < g.size(); ++u) {
        std::set<vertex_t> blocks{partition.block_of(u)};
        const std::size_t offset = u < g.m() ? g.m() : 0;
        for (auto local : g.neighbors(u)) {
            blocks.insert(partition.block_of(offset + local));
        }
        const double n_u = static_cast<double>(blocks.size());
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto bv = partition.block_of(v);
            if (blocks.count(bv) != 0) {
                m(u, v) = 1.0 / (n_u * static_cast<double>(partition.block_sizes()[bv]));
            }
        }
    }
    return m;
}

DenseMatrix dense_transition(const BipartiteGraph& g, Algorithm algorithm, const RankParams& params,
                             const std::optional<Partition>& partition) {
    require_dense_size(g.size());
    const std::size_t n = g.size();
    const double inv_n = 1.0 / static_cast<double>(n);
    DenseMatrix h = dense_h(g, params.h_mode);
    // S = H + a (1/n) e^T.
    DenseMatrix s = h;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row += h(i, j);
        }
        if (row == 0.0) {
            for (std::size_t j = 0; j < n; ++j) {
                s(i, j) = inv_n;
            }
        }
    }
    DenseMatrix out(n, n);
    switch (algorithm) {
    case Algorithm::BipartiteRank: {
        const auto m = dense_block_teleport(side_partition(g));
        for (std::size_t k = 0; k < out.data.size(); ++k) {
            out.data[k] = params.epsilon * h.data[k] + (1.0 - params.epsilon) * m.data[k];
        }
        break;
    }
    case Algorithm::PageRank:
        for (std::size_t k = 0; k < out.data.size(); ++k) {
            out.data[k] = params.epsilon * s.data[k] + (1.0 - params.epsilon) * inv_n;
        }
        break;
    case Algorithm::NcdAwareRank: {
        const auto m = dense_ncd_teleport(g, partition ? *partition : side_partition(g));
        for (std::size_t k = 0; k < out.data.size(); ++k) {
            out.data[k] = params.eta * s.data[k] + params.mu * m.data[k] + (1.0 - params.eta - params.mu) * inv_n;
        }
        break;
    }
    }
    return out;
}

RankVector dense_oracle(const BipartiteGraph& g, Algorithm algorithm, const RankParams& params,
                        const std::optional<Partition>& partition) {
    const auto p = dense_transition(g, algorithm, params, partition);
    const std::size_t n = p.rows;
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    std::vector<double> y(n);
    for (std::size_t iter = 0; iter < 1000000; ++iter) {
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                y[j] += x[i] * p(i, j);
            }
        }
        const double total = std::accumulate(y.begin(), y.end(), 0.0);
        double diff = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            y[j] /= total;
            diff += std::abs(y[j] - x[j]);
        }
        x.swap(y);
        if (diff <= 1e-13) {
            break;
        }
    }
    return RankVector(std::move(x));
}

} // namespace birank
