#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace birank {

using vertex_t = std::uint32_t;

enum class Side : std::uint8_t { U = 0, V = 1 };

/**
 * Compressed sparse rows in canonical form: column indices strictly
 * increasing within each row. An empty `values` array means every stored
 * entry is implicitly 1.
 */
class SparseRows {
public:
    struct Triplet {
        vertex_t row;
        vertex_t col;
        double value;
    };

    SparseRows() = default;

    /// Validates canonical form; throws Error on any violation.
    SparseRows(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_offsets,
               std::vector<vertex_t> col_indices, std::vector<double> values = {});

    /// Sorts and merges duplicates (summing values when `weighted`).
    static SparseRows from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets,
                                    bool weighted);

    /// Keeps entries with nonzero value. `dense` is row-major rows x cols.
    static SparseRows from_dense(std::size_t rows, std::size_t cols, std::span<const double> dense);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t nnz() const noexcept { return col_indices_.size(); }
    bool has_values() const noexcept { return !values_.empty(); }

    std::span<const std::size_t> row_offsets() const noexcept { return row_offsets_; }
    std::span<const vertex_t> col_indices() const noexcept { return col_indices_; }
    std::span<const double> values() const noexcept { return values_; }

    std::size_t row_length(std::size_t r) const noexcept { return row_offsets_[r + 1] - row_offsets_[r]; }
    std::span<const vertex_t> row(std::size_t r) const noexcept {
        return {col_indices_.data() + row_offsets_[r], row_length(r)};
    }
    /// Empty span when the matrix carries no explicit values.
    std::span<const double> row_values(std::size_t r) const noexcept {
        if (values_.empty()) {
            return {};
        }
        return {values_.data() + row_offsets_[r], row_length(r)};
    }
    double value_at(std::size_t entry) const noexcept { return values_.empty() ? 1.0 : values_[entry]; }

    SparseRows transpose() const;

    friend bool operator==(const SparseRows&, const SparseRows&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> row_offsets_{0};
    std::vector<vertex_t> col_indices_;
    std::vector<double> values_;
};

struct Edge {
    vertex_t u;
    vertex_t v;
    std::optional<double> weight;
};

/**
 * Immutable bipartite graph. U occupies global indices [0, m), V occupies
 * [m, m+n); every rank vector in the library uses this order.
 *
 * `fwd` is the U->V adjacency, `bwd` its transpose. Both carry the same
 * weights when the graph is weighted.
 */
class BipartiteGraph {
public:
    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_ + n_; }
    std::size_t nnz() const noexcept { return fwd_.nnz(); }
    bool weighted() const noexcept { return fwd_.has_values(); }

    const SparseRows& fwd() const noexcept { return fwd_; }
    const SparseRows& bwd() const noexcept { return bwd_; }

    Side side_of(std::size_t global) const noexcept { return global < m_ ? Side::U : Side::V; }
    std::size_t global_u(std::size_t u) const noexcept { return u; }
    std::size_t global_v(std::size_t v) const noexcept { return m_ + v; }

    /// Unweighted neighbor count. Throws IndexOutOfRange.
    std::size_t degree(std::size_t global) const;

    /// Neighbors of a global vertex as local ids on the opposite side.
    std::span<const vertex_t> neighbors(std::size_t global) const noexcept {
        return global < m_ ? fwd_.row(global) : bwd_.row(global - m_);
    }
    std::span<const double> neighbor_weights(std::size_t global) const noexcept {
        return global < m_ ? fwd_.row_values(global) : bwd_.row_values(global - m_);
    }

    /// External id per vertex; falls back to the global index.
    std::string label(std::size_t global) const;
    bool has_labels() const noexcept { return !labels_.empty(); }
    BipartiteGraph with_labels(std::vector<std::string> labels) const;

    friend BipartiteGraph build_graph(std::span<const Edge> edges, std::size_t m, std::size_t n);

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    SparseRows fwd_;
    SparseRows bwd_;
    std::vector<std::string> labels_;
};

/**
 * Canonicalizes an edge list into a BipartiteGraph. Duplicate weighted
 * edges are summed; duplicates without weights collapse. If any edge carries
 * a weight, edges without one count as weight 1.
 *
 * Throws EmptySide, IndexOutOfRange, NonPositiveWeight, IsolatedVertex.
 */
BipartiteGraph build_graph(std::span<const Edge> edges, std::size_t m, std::size_t n);

/// Free-function form of BipartiteGraph::degree.
std::size_t degree(const BipartiteGraph& g, std::size_t global);

} // namespace birank
