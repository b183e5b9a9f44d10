#include <birank/errors.hpp>
#include <birank/graph.hpp>

#include <algorithm>
#include <limits>

namespace birank {

SparseRows::SparseRows(std::size_t rows, std::size_t cols, std::vector<std::size_t> row_offsets,
                       std::vector<vertex_t> col_indices, std::vector<double> values)
    : rows_(rows), cols_(cols), row_offsets_(std::move(row_offsets)), col_indices_(std::move(col_indices)),
      values_(std::move(values)) {
    if (row_offsets_.size() != rows_ + 1 || row_offsets_.front() != 0 ||
        row_offsets_.back() != col_indices_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "row_offsets inconsistent with rows/nnz");
    }
    if (!values_.empty() && values_.size() != col_indices_.size()) {
        throw Error(ErrorCode::DimensionMismatch, "values length differs from nnz");
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        if (row_offsets_[r] > row_offsets_[r + 1]) {
            throw Error(ErrorCode::DimensionMismatch, "row_offsets decreasing at row " + std::to_string(r));
        }
        for (std::size_t e = row_offsets_[r]; e < row_offsets_[r + 1]; ++e) {
            if (col_indices_[e] >= cols_) {
                throw Error(ErrorCode::IndexOutOfRange, "column index out of range in row " + std::to_string(r));
            }
            if (e > row_offsets_[r] && col_indices_[e - 1] >= col_indices_[e]) {
                throw Error(ErrorCode::DimensionMismatch,
                            "row " + std::to_string(r) + " is not strictly increasing");
            }
        }
    }
}

SparseRows SparseRows::from_triplets(std::size_t rows, std::size_t cols, std::vector<Triplet> triplets,
                                     bool weighted) {
    for (const auto& t : triplets) {
        if (t.row >= rows || t.col >= cols) {
            throw Error(ErrorCode::IndexOutOfRange, "triplet outside " + std::to_string(rows) + "x" +
                                                        std::to_string(cols));
        }
    }
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    std::vector<std::size_t> offsets(rows + 1, 0);
    std::vector<vertex_t> cols_out;
    std::vector<double> vals_out;
    cols_out.reserve(triplets.size());
    if (weighted) {
        vals_out.reserve(triplets.size());
    }
    for (std::size_t i = 0; i < triplets.size(); ++i) {
        const auto& t = triplets[i];
        if (i > 0 && triplets[i - 1].row == t.row && triplets[i - 1].col == t.col) {
            if (weighted) {
                vals_out.back() += t.value;
            }
            continue;
        }
        cols_out.push_back(t.col);
        if (weighted) {
            vals_out.push_back(t.value);
        }
        ++offsets[t.row + 1];
    }
    for (std::size_t r = 0; r < rows; ++r) {
        offsets[r + 1] += offsets[r];
    }
    return SparseRows(rows, cols, std::move(offsets), std::move(cols_out), std::move(vals_out));
}

SparseRows SparseRows::from_dense(std::size_t rows, std::size_t cols, std::span<const double> dense) {
    if (dense.size() != rows * cols) {
        throw Error(ErrorCode::DimensionMismatch, "dense buffer size differs from rows*cols");
    }
    std::vector<std::size_t> offsets{0};
    std::vector<vertex_t> idx;
    std::vector<double> vals;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const double x = dense[r * cols + c];
            if (x != 0.0) {
                idx.push_back(static_cast<vertex_t>(c));
                vals.push_back(x);
            }
        }
        offsets.push_back(idx.size());
    }
    return SparseRows(rows, cols, std::move(offsets), std::move(idx), std::move(vals));
}

SparseRows SparseRows::transpose() const {
    std::vector<std::size_t> offsets(cols_ + 1, 0);
    for (auto c : col_indices_) {
        ++offsets[c + 1];
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        offsets[c + 1] += offsets[c];
    }
    std::vector<vertex_t> idx(nnz());
    std::vector<double> vals(values_.empty() ? 0 : nnz());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    // Rows visited in increasing order keep each output row sorted.
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t e = row_offsets_[r]; e < row_offsets_[r + 1]; ++e) {
            const auto slot = cursor[col_indices_[e]]++;
            idx[slot] = static_cast<vertex_t>(r);
            if (!values_.empty()) {
                vals[slot] = values_[e];
            }
        }
    }
    return SparseRows(cols_, rows_, std::move(offsets), std::move(idx), std::move(vals));
}

std::size_t BipartiteGraph::degree(std::size_t global) const {
    if (global >= size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "vertex " + std::to_string(global) + " >= " + std::to_string(size()));
    }
    return neighbors(global).size();
}

std::string BipartiteGraph::label(std::size_t global) const {
    if (global < labels_.size()) {
        return labels_[global];
    }
    return std::to_string(global);
}

BipartiteGraph BipartiteGraph::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != size()) {
        throw Error(ErrorCode::DimensionMismatch, "label count differs from vertex count");
    }
    BipartiteGraph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

BipartiteGraph build_graph(std::span<const Edge> edges, std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
        throw Error(ErrorCode::EmptySide, "both sides must be non-empty (m=" + std::to_string(m) +
                                              ", n=" + std::to_string(n) + ")");
    }
    if (m + n > std::numeric_limits<vertex_t>::max()) {
        throw Error(ErrorCode::TooLarge, "vertex count exceeds 32-bit index range");
    }
    const bool weighted = std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.weight.has_value(); });

    std::vector<SparseRows::Triplet> triplets;
    triplets.reserve(edges.size());
    for (const auto& e : edges) {
        if (e.u >= m || e.v >= n) {
            throw Error(ErrorCode::IndexOutOfRange, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                        ") outside " + std::to_string(m) + "x" + std::to_string(n));
        }
        const double w = e.weight.value_or(1.0);
        if (!(w > 0.0)) {
            throw Error(ErrorCode::NonPositiveWeight, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                                          ") has weight " + std::to_string(w));
        }
        triplets.push_back({e.u, e.v, w});
    }

    BipartiteGraph g;
    g.m_ = m;
    g.n_ = n;
    g.fwd_ = SparseRows::from_triplets(m, n, std::move(triplets), weighted);
    g.bwd_ = g.fwd_.transpose();

    for (std::size_t v = 0; v < g.size(); ++v) {
        if (g.neighbors(v).empty()) {
            throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v) + " has degree 0");
        }
    }
    return g;
}

std::size_t degree(const BipartiteGraph& g, std::size_t global) { return g.degree(global); }

} // namespace birank
