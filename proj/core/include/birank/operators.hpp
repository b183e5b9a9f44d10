#pragma once

#include <birank/graph.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace birank {

/// Probability distribution over the m+n vertices, global order.
class RankVector {
public:
    RankVector() = default;
    /// Takes ownership without normalizing; see is_distribution().
    explicit RankVector(std::vector<double> values) : values_(std::move(values)) {}

    static RankVector uniform(std::size_t size);
    /// Point mass on one vertex.
    static RankVector unit(std::size_t size, std::size_t at);

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    std::span<const double> values() const noexcept { return values_; }
    std::vector<double>& mutable_values() noexcept { return values_; }

    /// Non-negative entries summing to 1 within `tol`.
    bool is_distribution(double tol = 1e-10) const noexcept;

private:
    std::vector<double> values_;
};

enum class HMode { Uniform, Weighted };

struct RankParams {
    double epsilon = 0.85;
    double eta = 0.85;
    double mu = 0.1;
    double tol = 1e-8;
    std::size_t max_iter = 10000;
    HMode h_mode = HMode::Uniform;

    /// Throws InvalidParameter when a range is violated.
    void validate_pagerank() const;
    void validate_ncdaware() const;
};

/// Block id per vertex. Block ids are dense in [0, K).
class Partition {
public:
    Partition() = default;
    /// Throws EmptyBlock when some id in [0, K) has no member.
    explicit Partition(std::vector<vertex_t> block_of);

    std::size_t size() const noexcept { return block_of_.size(); }
    std::size_t block_count() const noexcept { return block_sizes_.size(); }
    vertex_t block_of(std::size_t v) const noexcept { return block_of_[v]; }
    std::span<const vertex_t> blocks() const noexcept { return block_of_; }
    std::span<const std::size_t> block_sizes() const noexcept { return block_sizes_; }

private:
    std::vector<vertex_t> block_of_;
    std::vector<std::size_t> block_sizes_;
};

/// Block 0 = U, block 1 = V.
Partition side_partition(const BipartiteGraph& g);

/**
 * Row-stochastic transition H of the bipartite walk, applied matrix-free.
 * Uniform mode uses 1/d_i, weighted mode w_ij / sum_k w_ik. The inverse row
 * scales are cached, so build once per ranking.
 */
class TransitionOperator {
public:
    TransitionOperator(const BipartiteGraph& g, HMode mode);

    std::size_t size() const noexcept { return graph_->size(); }
    HMode mode() const noexcept { return mode_; }

    /// out = x^T H (left action, the power-method direction).
    void apply_left(std::span<const double> x, std::span<double> out) const;
    /// out = H x (right action).
    void apply_right(std::span<const double> x, std::span<double> out) const;
    /// Sum of x over rows of H that are all zero. Always 0 for a built graph.
    double dangling_mass(std::span<const double> x) const;

    double entry(std::size_t from, std::size_t to) const;

private:
    const BipartiteGraph* graph_;
    HMode mode_;
    std::vector<double> row_scale_; // 1/d_i or 1/sum_k w_ik; 0 for dangling rows
};

/**
 * Within-side averaging M = R A, where R routes each vertex to its side and
 * A spreads a side's mass uniformly. Never materialized.
 */
class BlockTeleport {
public:
    explicit BlockTeleport(const Partition& sides);

    /// out_j = (1/|s|) * sum_{i in s} x_i for j in block s. M is symmetric,
    /// so this is both the left and the right action.
    void apply(std::span<const double> x, std::span<double> out) const;

private:
    const Partition* sides_;
};

/**
 * Sum with a fixed chunk size and a pairwise tree over chunk sums. The
 * result does not depend on the number of threads.
 */
double stable_sum(std::span<const double> x);

std::vector<double> h_matvec(const BipartiteGraph& g, std::span<const double> pi, HMode mode = HMode::Uniform);
std::vector<double> m_matvec(const BipartiteGraph& g, const Partition& sides, std::span<const double> pi);

/// One step of G = eps*S + (1-eps)*E over all m+n vertices.
std::vector<double> pagerank_step(const BipartiteGraph& g, std::span<const double> pi, const RankParams& params);

/// One step of P = eps*H + (1-eps)*M.
std::vector<double> bipartiterank_step(const BipartiteGraph& g, const Partition& sides, std::span<const double> pi,
                                       const RankParams& params);

/**
 * NCD-aware teleportation factors. Row u of R puts 1/N_u on every block in
 * X_u (u's block plus its neighbors' blocks); row k of A is uniform 1/|A_k|
 * over block k. The column pattern of R is the set X_u.
 */
struct NcdFactorization {
    Partition partition;
    SparseRows r; // N x K
    SparseRows a; // K x N

    std::size_t block_set_size(std::size_t u) const noexcept { return r.row_length(u); }
    std::span<const vertex_t> block_set(std::size_t u) const noexcept { return r.row(u); }

    /// out = x^T R A.
    void apply_left(std::span<const double> x, std::span<double> out) const;
};

/// Edges are treated as bidirectional. Throws DimensionMismatch / EmptyBlock.
NcdFactorization ncdaware_factorize(const BipartiteGraph& g, const Partition& partition);

/// One step of eta*S + mu*M + (1-eta-mu)*E.
std::vector<double> ncdaware_step(const BipartiteGraph& g, const NcdFactorization& factors, std::span<const double> pi,
                                  const RankParams& params);

} // namespace birank
