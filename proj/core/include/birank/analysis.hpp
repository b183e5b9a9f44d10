#pragma once

#include <birank/graph.hpp>
#include <birank/operators.hpp>
#include <birank/rankers.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace birank {

/// Row-major dense matrix for small instances and test oracles.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct SpectralReport {
    double epsilon = 0.0;
    /// (1 - eps) - eps.
    double structural_eigenvalue = 0.0;
    /// ||P v - (1-2 eps) v||_inf for v = [+1 on U, -1 on V].
    double eigenpair_residual = 0.0;
    double lambda2_estimate = 0.0;
    bool structural_is_subdominant = false;
    std::size_t iterations = 0;
};

/// Residual of the signed side indicator as a right eigenvector of P.
SpectralReport verify_structural_eigenpair(const BipartiteGraph& g, const Partition& sides, double epsilon,
                                           HMode mode = HMode::Uniform);

/**
 * Estimates |lambda_2| of P from the residual decay of the power method.
 * Starts from a fixed non-uniform vector so that every mode is excited.
 */
double estimate_lambda2(const BipartiteGraph& g, const Partition& sides, double epsilon, double tol = 1e-12,
                        std::size_t max_iter = 100000, HMode mode = HMode::Uniform);

/// Both checks together; `threshold` gates structural_is_subdominant.
SpectralReport spectral_report(const BipartiteGraph& g, double epsilon, double tol = 1e-12, double threshold = 0.02,
                               HMode mode = HMode::Uniform);

struct Connectivity {
    bool strongly_connected = false;
    std::size_t components = 0;
};

/// Tarjan SCC count of a square sparse pattern read as a digraph.
Connectivity is_strongly_connected(const SparseRows& structure);

/// Period of a strongly connected digraph. Throws NotStronglyConnected.
std::size_t period(const SparseRows& structure);

/// Directed pattern of H: both directions of every edge.
SparseRows h_structure(const BipartiteGraph& g);

/// Pattern of P: H plus complete within-side teleport edges (with self
/// loops). Quadratic in side sizes; meant for fixtures.
SparseRows p_structure(const BipartiteGraph& g);

struct CouplingReport {
    double zeta = 0.0;
    double max_offblock = 0.0;
    double mean_offblock = 0.0;
    std::vector<double> per_row_offblock;
};

/// Max over rows of the mass leaving the row's block. Throws NotStochastic.
CouplingReport ncd_coupling(const SparseRows& matrix, const Partition& partition);

struct ComparisonReport {
    double l1_distance = 0.0;
    double linf_distance = 0.0;
    std::size_t k = 0;
    double topk_jaccard = 0.0;
    double kendall_tau_topk = 0.0;
};

/// Indices of the k largest scores, ties broken by ascending index.
std::vector<std::size_t> top_k(std::span<const double> scores, std::size_t k);

/// Kendall tau-b between two score lists (ties handled), O(n log n).
double kendall_tau_b(std::span<const double> a, std::span<const double> b);

/// Tau is computed over the union of both top-k sets. Throws DimensionMismatch.
ComparisonReport compare_rankings(std::span<const double> a, std::span<const double> b, std::size_t k);

inline constexpr std::size_t kDenseOracleLimit = 512;

/**
 * Materializes the full transition matrix from its entrywise definition:
 * P for BipartiteRank, G for PageRank, the eta/mu matrix for NCDawareRank.
 * Throws TooLarge above kDenseOracleLimit vertices.
 */
DenseMatrix dense_transition(const BipartiteGraph& g, Algorithm algorithm, const RankParams& params,
                             const std::optional<Partition>& partition = std::nullopt);

/// Dense H, M (within-side averaging) and NCD M, straight from the definitions.
DenseMatrix dense_h(const BipartiteGraph& g, HMode mode);
DenseMatrix dense_block_teleport(const Partition& sides);
DenseMatrix dense_ncd_teleport(const BipartiteGraph& g, const Partition& partition);

/// Dense power iteration on dense_transition to L1 tolerance 1e-13.
RankVector dense_oracle(const BipartiteGraph& g, Algorithm algorithm, const RankParams& params,
                        const std::optional<Partition>& partition = std::nullopt);

} // namespace birank
