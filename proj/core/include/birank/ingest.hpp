#pragma once

#include <birank/graph.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace birank {

/// Parsed edges with 0-based ids per side.
struct EdgeList {
    std::vector<Edge> entries;
    std::optional<std::size_t> declared_m;
    std::optional<std::size_t> declared_n;
    /// Base of the ids in the source file; used to reconstruct labels.
    unsigned id_base = 0;
    /// Original ids (as written in the source) after compaction; empty means identity.
    std::vector<std::string> u_labels;
    std::vector<std::string> v_labels;
};

enum class Format { Konect, MatrixMarket, Tsv };

/// KONECT "out.*" files: '%' comments, "u v [weight [timestamp]]", 1-based.
EdgeList parse_konect(std::istream& in);

/// MatrixMarket coordinate (real|integer|pattern) general.
EdgeList parse_matrix_market(std::istream& in);

/// Whitespace separated "u v [weight]"; '%' and '#' start comments.
EdgeList parse_tsv(std::istream& in, bool one_based = false);

EdgeList read_edge_list(const std::filesystem::path& path, Format format, bool one_based = false);

/// Drops every weight, turning the list into a pattern.
EdgeList without_weights(EdgeList list);

struct CleanReport {
    static constexpr std::size_t dropped = std::numeric_limits<std::size_t>::max();

    std::size_t removed_isolated = 0;
    std::size_t kept_component_vertices = 0;
    double retained_fraction = 1.0;
    /// Old global index -> new global index, or `dropped`.
    std::vector<std::size_t> index_map;
};

/**
 * Removes degree-0 vertices and compacts ids. Sizes default to the declared
 * sizes of the list (or the max id seen). Throws AllVerticesIsolated.
 */
std::pair<EdgeList, CleanReport> drop_isolated(const EdgeList& edges, std::size_t m, std::size_t n);
std::pair<EdgeList, CleanReport> drop_isolated(const EdgeList& edges);

/// Builds the graph from declared sizes, carrying labels over.
BipartiteGraph to_graph(const EdgeList& edges);

/// Connected components of the undirected graph. Component ids follow the
/// order of each component's smallest global index.
struct Components {
    std::vector<vertex_t> component_of;
    std::vector<std::size_t> sizes;

    std::size_t count() const noexcept { return sizes.size(); }
};

Components connected_components(const BipartiteGraph& g);

/**
 * Keeps the largest connected component. Equal sizes are broken by the
 * smallest minimum global index. A connected graph is returned unchanged.
 */
std::pair<BipartiteGraph, CleanReport> giant_component(const BipartiteGraph& g);

struct GraphStats {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nnz = 0;
    double density = 0.0;
    bool connected = false;
    std::vector<std::size_t> component_sizes; // descending
    double largest_fraction = 0.0;
    std::map<std::size_t, std::size_t> degree_histogram_u;
    std::map<std::size_t, std::size_t> degree_histogram_v;

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats compute_stats(const BipartiteGraph& g);

/// Writes "u v [weight]" lines, 0-based, preceded by a '#' header.
void write_tsv(std::ostream& out, const BipartiteGraph& g);

} // namespace birank
