#include "cli.hpp"

#include <birank/analysis.hpp>
#include <birank/errors.hpp>
#include <birank/synth.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

namespace birank::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kSchema = "birank/1";

// Writes to a file, or to `fallback` when the path is empty or "-".
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) {
                throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
            }
            stream_ = &file_;
        }
    }

    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

bool names_file(const std::string& path) { return !path.empty() && path != "-"; }

// The JSON report goes to --report, else stdout when the main artifact
// went to a file, else stderr.
void emit_report(const Json& report, const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ostream& fallback = names_file(config.output_path) ? out : err;
    Sink sink(config.report_path, fallback);
    sink.get() << report.dump(2) << '\n';
}

std::string format_double(double x) {
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

std::string format_short(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

HMode parse_h_mode(const std::string& s) {
    if (s == "uniform") {
        return HMode::Uniform;
    }
    if (s == "weighted") {
        return HMode::Weighted;
    }
    throw Error(ErrorCode::InvalidParameter, "h-mode must be 'uniform' or 'weighted'");
}

EdgeList load_list(const RunConfig& config, const std::string& path) {
    return read_edge_list(path, detect_format(path, config.format), config.one_based);
}

BipartiteGraph load_graph(const RunConfig& config, const std::string& path, std::ostream& err) {
    auto list = load_list(config, path);
    if (config.clean_first) {
        auto [giant, report] = giant_component(to_graph(drop_isolated(list).first));
        if (report.retained_fraction < 1.0) {
            err << "note: kept the giant component, " << report.kept_component_vertices << " vertices\n";
        }
        return std::move(giant);
    }
    try {
        return to_graph(list);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::IsolatedVertex) {
            throw Error(ErrorCode::IsolatedVertex,
                        std::string(e.what()) + " (run 'birank clean' first or pass --clean)");
        }
        throw;
    }
}

RankParams params_for(const RunConfig& config) {
    RankParams p = config.params;
    p.h_mode = parse_h_mode(config.h_mode);
    return p;
}

Json histogram_json(const std::map<std::size_t, std::size_t>& h) {
    Json arr = Json::array();
    for (const auto& [deg, cnt] : h) {
        arr.push_back(Json{{"degree", deg}, {"count", cnt}});
    }
    return arr;
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const auto& w : warnings) {
        err << "warning: " << w << '\n';
    }
}

bool parse_size(std::string_view s, std::size_t& value) {
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    return ec == std::errc{} && ptr == end;
}

bool parse_number(const std::string& s, double& value) {
    try {
        std::size_t used = 0;
        value = std::stod(s, &used);
        return used == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c != '\r') {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + '"';
}

} // namespace

Format detect_format(const std::string& path, const std::string& requested) {
    if (requested == "konect") {
        return Format::Konect;
    }
    if (requested == "mm" || requested == "mtx") {
        return Format::MatrixMarket;
    }
    if (requested == "tsv") {
        return Format::Tsv;
    }
    if (requested != "auto") {
        throw Error(ErrorCode::InvalidParameter, "format must be konect, mm, tsv or auto");
    }
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".mtx" || ext == ".mm") {
        return Format::MatrixMarket;
    }
    if (ext == ".tsv" || ext == ".txt" || ext == ".csv") {
        return Format::Tsv;
    }
    return Format::Konect;
}

Partition read_partition(const std::string& path, std::size_t size) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open partition file '" + path + "'");
    }
    constexpr auto unset = std::numeric_limits<vertex_t>::max();
    std::vector<vertex_t> block_of(size, unset);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a) || a.front() == '#' || a.front() == '%') {
            continue;
        }
        std::size_t vertex = 0;
        std::size_t block = 0;
        if (!(fields >> b) || (fields >> extra) || !parse_size(a, vertex) || !parse_size(b, block) ||
            block >= unset) {
            throw Error(ErrorCode::MalformedLine,
                        path + " line " + std::to_string(line_no) + ": expected 'global_index block'");
        }
        if (vertex >= size) {
            throw Error(ErrorCode::IndexOutOfRange, path + " line " + std::to_string(line_no) + ": vertex " +
                                                        std::to_string(vertex) + " outside [0, " +
                                                        std::to_string(size) + ")");
        }
        block_of[vertex] = static_cast<vertex_t>(block);
    }
    const auto missing = std::find(block_of.begin(), block_of.end(), unset);
    if (missing != block_of.end()) {
        throw Error(ErrorCode::DimensionMismatch, "partition does not assign vertex " +
                                                      std::to_string(missing - block_of.begin()));
    }
    return Partition(std::move(block_of));
}

std::vector<double> read_ranking_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open ranking '" + path + "'");
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorCode::EmptyFile, path + " is empty");
    }
    const auto header = split_csv_line(line);
    const auto col = [&](const char* name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw Error(ErrorCode::MalformedLine, path + ": header lacks '" + name + "'");
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t idx_col = col("global_index");
    const std::size_t score_col = col("score");

    std::vector<std::pair<std::size_t, double>> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") {
            continue;
        }
        const auto fields = split_csv_line(line);
        std::size_t index = 0;
        double score = 0.0;
        if (fields.size() != header.size() || !parse_size(fields[idx_col], index) ||
            !parse_number(fields[score_col], score)) {
            throw Error(ErrorCode::MalformedLine, path + " line " + std::to_string(line_no));
        }
        rows.emplace_back(index, score);
    }
    if (rows.empty()) {
        throw Error(ErrorCode::EmptyFile, path + " has no ranking rows");
    }
    std::vector<double> scores(rows.size(), -1.0);
    for (const auto& [index, score] : rows) {
        if (index >= scores.size() || scores[index] >= 0.0) {
            throw Error(ErrorCode::MalformedLine, path + ": global indices must cover 0.." +
                                                      std::to_string(rows.size() - 1) + " once each");
        }
        scores[index] = score;
    }
    return scores;
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
    const auto& path = config.inputs.at(0);
    const auto [list, clean] = drop_isolated(load_list(config, path));
    const auto g = to_graph(list);
    const auto s = compute_stats(g);

    Json j;
    j["schema"] = kSchema;
    j["input"] = path;
    j["rows"] = s.rows;
    j["cols"] = s.cols;
    j["nnz"] = s.nnz;
    j["density"] = s.density;
    j["connected"] = s.connected;
    j["components"] = s.component_sizes.size();
    j["component_sizes"] = s.component_sizes;
    j["largest_fraction"] = s.largest_fraction;
    j["isolated_removed"] = clean.removed_isolated;
    j["weighted"] = g.weighted();
    j["degree_histogram_u"] = histogram_json(s.degree_histogram_u);
    j["degree_histogram_v"] = histogram_json(s.degree_histogram_v);
    Sink(config.output_path, out).get() << j.dump(2) << '\n';

    if (!config.histogram_path.empty()) {
        Sink hist(config.histogram_path, out);
        hist.get() << "degree,count,side\n";
        for (const auto& [deg, cnt] : s.degree_histogram_u) {
            hist.get() << deg << ',' << cnt << ",U\n";
        }
        for (const auto& [deg, cnt] : s.degree_histogram_v) {
            hist.get() << deg << ',' << cnt << ",V\n";
        }
    }
    return kOk;
}

int cmd_clean(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto& path = config.inputs.at(0);
    const auto list = load_list(config, path);
    const auto [compact, dropped] = drop_isolated(list);
    const auto g = to_graph(compact);
    const auto [giant, report] = giant_component(g);

    Sink sink(config.output_path, out);
    write_tsv(sink.get(), giant);

    const std::size_t declared = dropped.index_map.size();
    Json j;
    j["schema"] = kSchema;
    j["input"] = path;
    j["removed_isolated"] = dropped.removed_isolated;
    j["vertices_after_isolated"] = g.size();
    j["kept_component_vertices"] = report.kept_component_vertices;
    j["retained_fraction"] = report.retained_fraction;
    j["retained_fraction_of_declared"] =
        static_cast<double>(report.kept_component_vertices) / static_cast<double>(declared);
    j["m"] = giant.m();
    j["n"] = giant.n();
    j["nnz"] = giant.nnz();
    emit_report(j, config, out, err);
    return kOk;
}

int cmd_rank(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(config, config.inputs.at(0), err);
    const auto params = params_for(config);
    const auto algorithm = parse_algorithm(config.algorithm);
    std::optional<Partition> partition;
    if (!config.partition_path.empty()) {
        if (algorithm != Algorithm::NcdAwareRank) {
            throw Error(ErrorCode::InvalidParameter, "--partition only applies to ncdaware");
        }
        partition = read_partition(config.partition_path, g.size());
    }
    const auto result = rank(g, algorithm, params, partition);
    print_warnings(result.warnings, err);

    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    const auto scores = result.pi.values();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    const std::size_t rows = config.top_k == 0 ? order.size() : std::min(config.top_k, order.size());

    Sink sink(config.output_path, out);
    auto& csv = sink.get();
    csv << "rank,global_index,side,label,score\n";
    for (std::size_t r = 0; r < rows; ++r) {
        const auto v = order[r];
        csv << r + 1 << ',' << v << ',' << (g.side_of(v) == Side::U ? 'U' : 'V') << ',' << csv_escape(g.label(v))
            << ',' << format_double(scores[v]) << '\n';
    }

    Json j;
    j["schema"] = kSchema;
    j["input"] = config.inputs.at(0);
    j["algorithm"] = to_string(algorithm);
    j["epsilon"] = params.epsilon;
    j["eta"] = params.eta;
    j["mu"] = params.mu;
    j["tol"] = params.tol;
    j["max_iter"] = params.max_iter;
    j["h_mode"] = config.h_mode;
    j["iterations"] = result.report.iterations;
    j["converged"] = result.report.converged;
    j["residuals"] = result.report.residuals;
    j["rate_estimate"] = result.report.rate_estimate;
    j["runtime_ms"] = result.report.runtime.count();
    j["warnings"] = result.warnings;
    if (names_file(config.report_path) || names_file(config.output_path)) {
        emit_report(j, config, out, err);
    }

    if (!result.report.converged) {
        err << "error: no convergence after " << result.report.iterations << " iterations\n";
        return config.allow_partial ? kOk : kNotConverged;
    }
    return kOk;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<Algorithm> algorithms;
    for (const auto& name : config.algorithms) {
        algorithms.push_back(parse_algorithm(name));
    }
    for (double eps : config.epsilons) {
        RankParams p = params_for(config);
        p.epsilon = eps;
        p.eta = eps;
        p.validate_pagerank();
        if (std::find(algorithms.begin(), algorithms.end(), Algorithm::NcdAwareRank) != algorithms.end()) {
            p.validate_ncdaware();
        }
    }

    Sink sink(config.output_path, out);
    auto& csv = sink.get();
    csv << "dataset,algorithm,epsilon,iterations,converged\n";
    Json cells = Json::array();
    bool all_converged = true;
    for (const auto& path : config.inputs) {
        const auto g = load_graph(config, path, err);
        const auto dataset = std::filesystem::path(path).stem().string();
        for (auto algorithm : algorithms) {
            for (double eps : config.epsilons) {
                RankParams p = params_for(config);
                p.epsilon = eps;
                p.eta = eps;
                const auto result = rank(g, algorithm, p);
                all_converged &= result.report.converged;
                csv << csv_escape(dataset) << ',' << to_string(algorithm) << ',' << format_short(eps) << ','
                    << result.report.iterations << ',' << (result.report.converged ? "true" : "false") << '\n';
                csv.flush();
                cells.push_back(Json{{"dataset", dataset},
                                     {"algorithm", to_string(algorithm)},
                                     {"epsilon", eps},
                                     {"iterations", result.report.iterations},
                                     {"converged", result.report.converged},
                                     {"rate_estimate", result.report.rate_estimate},
                                     {"residuals", result.report.residuals}});
            }
        }
    }
    if (names_file(config.report_path)) {
        Json j;
        j["schema"] = kSchema;
        j["tol"] = config.params.tol;
        j["cells"] = std::move(cells);
        emit_report(j, config, out, err);
    }
    if (!all_converged) {
        err << "error: some cells did not converge\n";
        return config.allow_partial ? kOk : kNotConverged;
    }
    return kOk;
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
    if (config.inputs.size() != 2) {
        throw Error(ErrorCode::InvalidParameter, "compare takes exactly two ranking files");
    }
    const auto a = read_ranking_csv(config.inputs[0]);
    const auto b = read_ranking_csv(config.inputs[1]);
    const auto r = compare_rankings(a, b, config.top_k);
    Json j;
    j["schema"] = kSchema;
    j["a"] = config.inputs[0];
    j["b"] = config.inputs[1];
    j["k"] = r.k;
    j["l1_distance"] = r.l1_distance;
    j["linf_distance"] = r.linf_distance;
    j["topk_jaccard"] = r.topk_jaccard;
    j["kendall_tau_topk"] = r.kendall_tau_topk;
    Sink(config.output_path, out).get() << j.dump(2) << '\n';
    return kOk;
}

int cmd_spectral(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto g = load_graph(config, config.inputs.at(0), err);
    const auto params = params_for(config);
    params.validate_pagerank();
    const auto rep = spectral_report(g, params.epsilon, config.spectral_tol, config.threshold, params.h_mode);
    const auto h = h_structure(g);
    const auto conn = is_strongly_connected(h);

    Json j;
    j["schema"] = kSchema;
    j["input"] = config.inputs.at(0);
    j["epsilon"] = rep.epsilon;
    j["structural_eigenvalue"] = rep.structural_eigenvalue;
    j["eigenpair_residual"] = rep.eigenpair_residual;
    j["lambda2_estimate"] = rep.lambda2_estimate;
    j["structural_is_subdominant"] = rep.structural_is_subdominant;
    j["threshold"] = config.threshold;
    j["connected"] = conn.strongly_connected;
    j["components"] = conn.components;
    if (conn.strongly_connected) {
        j["period_h"] = period(h);
    }
    Sink(config.output_path, out).get() << j.dump(2) << '\n';
    return kOk;
}

int cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err) {
    SyntheticSpec spec;
    spec.m = config.synth_m;
    spec.n = config.synth_n;
    spec.mean_degree = config.mean_degree;
    spec.gamma = config.gamma;
    spec.seed = config.seed;
    const auto result = generate_bipartite(spec);
    print_warnings(result.warnings, err);

    Sink sink(config.output_path, out);
    write_tsv(sink.get(), result.graph);

    Json j;
    j["schema"] = kSchema;
    j["m"] = spec.m;
    j["n"] = spec.n;
    j["mean_degree"] = spec.mean_degree;
    j["gamma"] = spec.gamma;
    j["seed"] = spec.seed;
    j["realized_m"] = result.graph.m();
    j["realized_n"] = result.graph.n();
    j["nnz"] = result.graph.nnz();
    j["realized_gamma"] = result.realized_gamma;
    j["realized_mean_degree"] = result.realized_mean_degree;
    j["retained_fraction"] = result.retained_fraction;
    j["warnings"] = result.warnings;
    emit_report(j, config, out, err);
    return kOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Ranking toolkit for bipartite graphs", "birank"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "birank 0.1.0");

    const auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", config.inputs, "Edge list")->required()->expected(1);
        sub->add_option("-f,--format", config.format, "konect, mm, tsv or auto")
            ->check(CLI::IsMember({"auto", "konect", "mm", "mtx", "tsv"}));
        sub->add_flag("--one-based", config.one_based, "TSV ids start at 1");
    };
    const auto add_params = [&](CLI::App* sub) {
        sub->add_option("-e,--epsilon", config.params.epsilon, "Probability of following an edge")
            ->capture_default_str();
        sub->add_option("--tol", config.params.tol, "L1 stopping threshold")->capture_default_str();
        sub->add_option("--max-iter", config.params.max_iter)->capture_default_str();
        sub->add_option("--h-mode", config.h_mode, "uniform or weighted")
            ->check(CLI::IsMember({"uniform", "weighted"}))
            ->capture_default_str();
        sub->add_flag("--clean", config.clean_first, "Drop isolated vertices and keep the giant component");
    };

    auto* stats = app.add_subcommand("stats", "Size, density, components and degree histograms");
    add_input(stats);
    stats->add_option("-o,--output", config.output_path, "JSON output (default stdout)");
    stats->add_option("--histogram", config.histogram_path, "Degree histogram CSV");

    auto* clean = app.add_subcommand("clean", "Drop isolated vertices, keep the giant component");
    add_input(clean);
    clean->add_option("-o,--output", config.output_path, "Cleaned TSV (default stdout)");
    clean->add_option("--report", config.report_path, "Report JSON");

    auto* rank_cmd = app.add_subcommand("rank", "Rank every vertex");
    add_input(rank_cmd);
    add_params(rank_cmd);
    rank_cmd->add_option("-a,--algorithm", config.algorithm, "bipartite, pagerank or ncdaware")
        ->capture_default_str();
    rank_cmd->add_option("--eta", config.params.eta)->capture_default_str();
    rank_cmd->add_option("--mu", config.params.mu)->capture_default_str();
    rank_cmd->add_option("--partition", config.partition_path, "Blocks for ncdaware: 'global_index block' lines");
    rank_cmd->add_option("-o,--output", config.output_path, "Ranking CSV (default stdout)");
    rank_cmd->add_option("--report", config.report_path, "Convergence JSON");
    rank_cmd->add_option("-k,--top-k", config.top_k, "Only write the first k rows");
    rank_cmd->add_flag("--allow-partial", config.allow_partial, "Exit 0 even without convergence");

    auto* sweep = app.add_subcommand("sweep", "Iteration counts over a grid of epsilon values");
    sweep->add_option("inputs", config.inputs, "Edge lists")->required();
    sweep->add_option("-f,--format", config.format)->check(CLI::IsMember({"auto", "konect", "mm", "mtx", "tsv"}));
    sweep->add_flag("--one-based", config.one_based);
    sweep->add_option("--epsilons", config.epsilons, "Epsilon grid")->delimiter(',')->capture_default_str();
    sweep->add_option("--algorithms", config.algorithms)->delimiter(',')->capture_default_str();
    sweep->add_option("--mu", config.params.mu, "mu for ncdaware; eta follows epsilon")->capture_default_str();
    sweep->add_option("--tol", config.params.tol)->capture_default_str();
    sweep->add_option("--max-iter", config.params.max_iter)->capture_default_str();
    sweep->add_option("--h-mode", config.h_mode)->check(CLI::IsMember({"uniform", "weighted"}));
    sweep->add_flag("--clean", config.clean_first);
    sweep->add_option("-o,--output", config.output_path, "CSV (default stdout)");
    sweep->add_option("--report", config.report_path, "JSON with residual histories");
    sweep->add_flag("--allow-partial", config.allow_partial);

    auto* compare = app.add_subcommand("compare", "Compare two ranking CSVs");
    compare->add_option("rankings", config.inputs, "Two CSVs written by 'rank'")->required()->expected(2);
    compare->add_option("-k,--top-k", config.top_k, "Top-k size (0 = all)")->capture_default_str();
    compare->add_option("-o,--output", config.output_path);

    auto* spectral = app.add_subcommand("spectral", "Check the 1-2eps eigenpair and estimate |lambda_2|");
    add_input(spectral);
    spectral->add_option("-e,--epsilon", config.params.epsilon)->capture_default_str();
    spectral->add_option("--tol", config.spectral_tol)->capture_default_str();
    spectral->add_option("--threshold", config.threshold)->capture_default_str();
    spectral->add_option("--h-mode", config.h_mode)->check(CLI::IsMember({"uniform", "weighted"}));
    spectral->add_flag("--clean", config.clean_first);
    spectral->add_option("-o,--output", config.output_path);

    auto* synth = app.add_subcommand("synth", "Generate a power-law bipartite graph");
    synth->add_option("--m", config.synth_m)->capture_default_str();
    synth->add_option("--n", config.synth_n)->capture_default_str();
    synth->add_option("--mean-degree", config.mean_degree)->capture_default_str();
    synth->add_option("--gamma", config.gamma)->capture_default_str();
    synth->add_option("--seed", config.seed)->capture_default_str();
    synth->add_option("-o,--output", config.output_path, "TSV (default stdout)");
    synth->add_option("--report", config.report_path);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        for (auto* sub : app.get_subcommands()) {
            config.command = sub->get_name();
        }
        if (config.command == "stats") return cmd_stats(config, out, err);
        if (config.command == "clean") return cmd_clean(config, out, err);
        if (config.command == "rank") return cmd_rank(config, out, err);
        if (config.command == "sweep") return cmd_sweep(config, out, err);
        if (config.command == "compare") return cmd_compare(config, out, err);
        if (config.command == "spectral") return cmd_spectral(config, out, err);
        if (config.command == "synth") return cmd_synth(config, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return kInputError;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace birank::cli
