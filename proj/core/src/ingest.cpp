#include <birank/errors.hpp>
#include <birank/ingest.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace birank {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != ',') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

[[noreturn]] void malformed(std::size_t line_no, std::string_view why) {
    throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": " + std::string(why));
}

template <class T>
T parse_number(std::string_view tok, std::size_t line_no) {
    T value{};
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        malformed(line_no, "cannot parse '" + std::string(tok) + "'");
    }
    return value;
}

vertex_t parse_id(std::string_view tok, unsigned base, std::size_t line_no) {
    const auto raw = parse_number<std::uint64_t>(tok, line_no);
    if (raw < base) {
        malformed(line_no, "id " + std::string(tok) + " below base " + std::to_string(base));
    }
    const auto id = raw - base;
    if (id >= std::numeric_limits<vertex_t>::max()) {
        malformed(line_no, "id " + std::string(tok) + " too large");
    }
    return static_cast<vertex_t>(id);
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Shared by the KONECT and TSV readers: "u v [weight [extra]]".
EdgeList parse_pairs(std::istream& in, unsigned base, std::size_t max_columns, std::string_view comment_chars) {
    EdgeList list;
    list.id_base = base;
    std::size_t max_u = 0;
    std::size_t max_v = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (is_blank(view)) {
            continue;
        }
        const auto first = view.find_first_not_of(" \t");
        if (comment_chars.find(view[first]) != std::string_view::npos) {
            continue;
        }
        const auto tokens = split_ws(view);
        if (tokens.size() < 2 || tokens.size() > max_columns) {
            malformed(line_no, "expected 2.." + std::to_string(max_columns) + " columns, got " +
                                   std::to_string(tokens.size()));
        }
        Edge e{parse_id(tokens[0], base, line_no), parse_id(tokens[1], base, line_no), std::nullopt};
        if (tokens.size() >= 3) {
            e.weight = parse_number<double>(tokens[2], line_no);
        }
        // Any further column (KONECT timestamp) is validated and discarded.
        if (tokens.size() >= 4) {
            (void)parse_number<double>(tokens[3], line_no);
        }
        max_u = std::max<std::size_t>(max_u, e.u + 1);
        max_v = std::max<std::size_t>(max_v, e.v + 1);
        list.entries.push_back(e);
    }
    if (list.entries.empty()) {
        throw Error(ErrorCode::EmptyFile, "no edges found");
    }
    list.declared_m = max_u;
    list.declared_n = max_v;
    return list;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::size_t resolve_size(const std::optional<std::size_t>& declared, const std::vector<Edge>& entries, bool u_side) {
    std::size_t seen = 0;
    for (const auto& e : entries) {
        seen = std::max<std::size_t>(seen, (u_side ? e.u : e.v) + 1);
    }
    return std::max(declared.value_or(0), seen);
}

} // namespace

EdgeList parse_konect(std::istream& in) { return parse_pairs(in, 1, 4, "%"); }

EdgeList parse_tsv(std::istream& in, bool one_based) { return parse_pairs(in, one_based ? 1 : 0, 3, "%#"); }

EdgeList parse_matrix_market(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::EmptyFile, "empty MatrixMarket stream");
    }
    ++line_no;
    const auto header = split_ws(line);
    if (header.size() != 5 || lower(header[0]) != "%%matrixmarket" || lower(header[1]) != "matrix" ||
        lower(header[2]) != "coordinate" || lower(header[4]) != "general") {
        throw Error(ErrorCode::UnsupportedHeader, "expected '%%MatrixMarket matrix coordinate <field> general', got '" +
                                                      line + "'");
    }
    const auto field = lower(header[3]);
    if (field != "real" && field != "integer" && field != "pattern") {
        throw Error(ErrorCode::UnsupportedHeader, "unsupported field '" + field + "'");
    }
    const bool pattern = field == "pattern";

    EdgeList list;
    list.id_base = 1;
    bool have_dims = false;
    std::size_t expected_nnz = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (is_blank(view) || view[view.find_first_not_of(" \t")] == '%') {
            continue;
        }
        const auto tokens = split_ws(view);
        if (!have_dims) {
            if (tokens.size() != 3) {
                malformed(line_no, "expected dimension line 'rows cols nnz'");
            }
            list.declared_m = parse_number<std::size_t>(tokens[0], line_no);
            list.declared_n = parse_number<std::size_t>(tokens[1], line_no);
            expected_nnz = parse_number<std::size_t>(tokens[2], line_no);
            have_dims = true;
            continue;
        }
        const std::size_t want = pattern ? 2 : 3;
        if (tokens.size() != want) {
            malformed(line_no, "expected " + std::to_string(want) + " columns");
        }
        Edge e{parse_id(tokens[0], 1, line_no), parse_id(tokens[1], 1, line_no), std::nullopt};
        if (e.u >= *list.declared_m || e.v >= *list.declared_n) {
            malformed(line_no, "entry outside declared dimensions");
        }
        if (!pattern) {
            e.weight = parse_number<double>(tokens[2], line_no);
        }
        list.entries.push_back(e);
    }
    if (!have_dims) {
        throw Error(ErrorCode::EmptyFile, "missing dimension line");
    }
    if (list.entries.size() != expected_nnz) {
        throw Error(ErrorCode::NnzMismatch, "dimension line declares " + std::to_string(expected_nnz) +
                                                " entries, file has " + std::to_string(list.entries.size()));
    }
    if (list.entries.empty()) {
        throw Error(ErrorCode::EmptyFile, "no entries");
    }
    return list;
}

EdgeList read_edge_list(const std::filesystem::path& path, Format format, bool one_based) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    switch (format) {
    case Format::Konect: return parse_konect(in);
    case Format::MatrixMarket: return parse_matrix_market(in);
    case Format::Tsv: return parse_tsv(in, one_based);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown format");
}

EdgeList without_weights(EdgeList list) {
    for (auto& e : list.entries) {
        e.weight.reset();
    }
    return list;
}

std::pair<EdgeList, CleanReport> drop_isolated(const EdgeList& edges, std::size_t m, std::size_t n) {
    m = std::max(m, resolve_size(std::nullopt, edges.entries, true));
    n = std::max(n, resolve_size(std::nullopt, edges.entries, false));
    if (edges.entries.empty()) {
        throw Error(ErrorCode::AllVerticesIsolated, "edge list is empty");
    }
    std::vector<bool> seen_u(m, false);
    std::vector<bool> seen_v(n, false);
    for (const auto& e : edges.entries) {
        seen_u[e.u] = true;
        seen_v[e.v] = true;
    }

    auto label_of = [&](bool u_side, std::size_t local) {
        const auto& labels = u_side ? edges.u_labels : edges.v_labels;
        return local < labels.size() ? labels[local] : std::to_string(local + edges.id_base);
    };

    EdgeList out;
    out.id_base = edges.id_base;
    std::vector<std::size_t> new_u(m, CleanReport::dropped);
    std::vector<std::size_t> new_v(n, CleanReport::dropped);
    for (std::size_t u = 0; u < m; ++u) {
        if (seen_u[u]) {
            new_u[u] = out.u_labels.size();
            out.u_labels.push_back(label_of(true, u));
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (seen_v[v]) {
            new_v[v] = out.v_labels.size();
            out.v_labels.push_back(label_of(false, v));
        }
    }
    const std::size_t new_m = out.u_labels.size();
    const std::size_t new_n = out.v_labels.size();
    out.declared_m = new_m;
    out.declared_n = new_n;
    out.entries.reserve(edges.entries.size());
    for (const auto& e : edges.entries) {
        out.entries.push_back({static_cast<vertex_t>(new_u[e.u]), static_cast<vertex_t>(new_v[e.v]), e.weight});
    }

    CleanReport report;
    report.removed_isolated = (m + n) - (new_m + new_n);
    report.kept_component_vertices = new_m + new_n;
    report.retained_fraction = static_cast<double>(new_m + new_n) / static_cast<double>(m + n);
    report.index_map.resize(m + n, CleanReport::dropped);
    for (std::size_t u = 0; u < m; ++u) {
        report.index_map[u] = new_u[u];
    }
    for (std::size_t v = 0; v < n; ++v) {
        report.index_map[m + v] = new_v[v] == CleanReport::dropped ? CleanReport::dropped : new_m + new_v[v];
    }
    return {std::move(out), std::move(report)};
}

std::pair<EdgeList, CleanReport> drop_isolated(const EdgeList& edges) {
    return drop_isolated(edges, edges.declared_m.value_or(0), edges.declared_n.value_or(0));
}

BipartiteGraph to_graph(const EdgeList& edges) {
    const std::size_t m = resolve_size(edges.declared_m, edges.entries, true);
    const std::size_t n = resolve_size(edges.declared_n, edges.entries, false);
    auto g = build_graph(edges.entries, m, n);
    std::vector<std::string> labels;
    labels.reserve(m + n);
    for (std::size_t u = 0; u < m; ++u) {
        labels.push_back(u < edges.u_labels.size() ? edges.u_labels[u] : std::to_string(u + edges.id_base));
    }
    for (std::size_t v = 0; v < n; ++v) {
        labels.push_back(v < edges.v_labels.size() ? edges.v_labels[v] : std::to_string(v + edges.id_base));
    }
    return g.with_labels(std::move(labels));
}

Components connected_components(const BipartiteGraph& g) {
    constexpr auto unset = std::numeric_limits<vertex_t>::max();
    Components c;
    c.component_of.assign(g.size(), unset);
    std::vector<std::size_t> stack;
    const std::size_t m = g.m();
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (c.component_of[root] != unset) {
            continue;
        }
        const auto id = static_cast<vertex_t>(c.sizes.size());
        std::size_t size = 0;
        c.component_of[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const auto x = stack.back();
            stack.pop_back();
            ++size;
            const std::size_t offset = x < m ? m : 0;
            for (auto local : g.neighbors(x)) {
                const auto y = offset + local;
                if (c.component_of[y] == unset) {
                    c.component_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
        c.sizes.push_back(size);
    }
    return c;
}

std::pair<BipartiteGraph, CleanReport> giant_component(const BipartiteGraph& g) {
    const auto comps = connected_components(g);
    CleanReport report;
    if (comps.count() == 1) {
        report.kept_component_vertices = g.size();
        report.retained_fraction = 1.0;
        report.index_map.resize(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            report.index_map[i] = i;
        }
        return {g, std::move(report)};
    }
    // Component ids are ordered by smallest member, so the first maximum wins ties.
    const auto best = static_cast<vertex_t>(
        std::distance(comps.sizes.begin(), std::max_element(comps.sizes.begin(), comps.sizes.end())));

    const std::size_t m = g.m();
    std::vector<std::size_t> new_u(m, CleanReport::dropped);
    std::vector<std::size_t> new_v(g.n(), CleanReport::dropped);
    std::size_t new_m = 0;
    std::size_t new_n = 0;
    for (std::size_t u = 0; u < m; ++u) {
        if (comps.component_of[u] == best) {
            new_u[u] = new_m++;
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (comps.component_of[m + v] == best) {
            new_v[v] = new_n++;
        }
    }

    std::vector<Edge> edges;
    for (std::size_t u = 0; u < m; ++u) {
        if (new_u[u] == CleanReport::dropped) {
            continue;
        }
        const auto nbrs = g.fwd().row(u);
        const auto ws = g.fwd().row_values(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            Edge e{static_cast<vertex_t>(new_u[u]), static_cast<vertex_t>(new_v[nbrs[k]]), std::nullopt};
            if (!ws.empty()) {
                e.weight = ws[k];
            }
            edges.push_back(e);
        }
    }
    std::vector<std::string> labels(new_m + new_n);
    report.index_map.assign(g.size(), CleanReport::dropped);
    for (std::size_t u = 0; u < m; ++u) {
        if (new_u[u] != CleanReport::dropped) {
            labels[new_u[u]] = g.label(u);
            report.index_map[u] = new_u[u];
        }
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        if (new_v[v] != CleanReport::dropped) {
            labels[new_m + new_v[v]] = g.label(m + v);
            report.index_map[m + v] = new_m + new_v[v];
        }
    }
    report.kept_component_vertices = new_m + new_n;
    report.retained_fraction = static_cast<double>(new_m + new_n) / static_cast<double>(g.size());
    auto out = build_graph(edges, new_m, new_n).with_labels(std::move(labels));
    return {std::move(out), std::move(report)};
}

GraphStats compute_stats(const BipartiteGraph& g) {
    GraphStats s;
    s.rows = g.m();
    s.cols = g.n();
    s.nnz = g.nnz();
    s.density = static_cast<double>(s.nnz) / (static_cast<double>(s.rows) * static_cast<double>(s.cols));
    const auto comps = connected_components(g);
    s.connected = comps.count() == 1;
    s.component_sizes = comps.sizes;
    std::sort(s.component_sizes.begin(), s.component_sizes.end(), std::greater<>());
    s.largest_fraction = static_cast<double>(s.component_sizes.front()) / static_cast<double>(g.size());
    for (std::size_t u = 0; u < g.m(); ++u) {
        ++s.degree_histogram_u[g.fwd().row_length(u)];
    }
    for (std::size_t v = 0; v < g.n(); ++v) {
        ++s.degree_histogram_v[g.bwd().row_length(v)];
    }
    return s;
}

void write_tsv(std::ostream& out, const BipartiteGraph& g) {
    out << "# u v" << (g.weighted() ? " weight" : "") << " (0-based, m=" << g.m() << " n=" << g.n() << ")\n";
    char buf[64];
    for (std::size_t u = 0; u < g.m(); ++u) {
        const auto nbrs = g.fwd().row(u);
        const auto ws = g.fwd().row_values(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            out << u << '\t' << nbrs[k];
            if (!ws.empty()) {
                auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, ws[k]);
                out << '\t' << std::string_view(buf, static_cast<std::size_t>(ptr - buf));
            }
            out << '\n';
        }
    }
}

} // namespace birank
