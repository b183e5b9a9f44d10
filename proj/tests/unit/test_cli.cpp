#include <cli/cli.hpp>

#include <birank/ingest.hpp>

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <sys/wait.h>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

const std::string kFixtures = BIRANK_FIXTURE_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = birank::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / ("birank_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("stats") {
    SUBCASE("example graph") {
        const auto r = run({"stats", kFixtures + "/example.mtx"});
        REQUIRE(r.code == 0);
        const auto j = Json::parse(r.out);
        CHECK(j["schema"] == "birank/1");
        CHECK(j["density"] == 0.625);
        CHECK(j["connected"] == true);
        CHECK(j["rows"] == 2);
        CHECK(j["nnz"] == 5);
    }
    SUBCASE("histogram csv") {
        const auto dir = scratch_dir();
        const auto r = run({"stats", kFixtures + "/example.konect", "--histogram", (dir / "h.csv").string()});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(slurp(dir / "h.csv"));
        CHECK(rows.front() == std::vector<std::string>{"degree", "count", "side"});
        CHECK(rows.size() == 5);
        CHECK(rows[1] == std::vector<std::string>{"1", "1", "U"});
    }
    SUBCASE("empty file") {
        const auto r = run({"stats", kFixtures + "/empty.tsv"});
        CHECK(r.code == 2);
        CHECK(r.err.find("error") != std::string::npos);
    }
    SUBCASE("missing file") {
        CHECK(run({"stats", kFixtures + "/nope.tsv"}).code == 2);
    }
}

TEST_CASE("clean") {
    const auto dir = scratch_dir();
    SUBCASE("connected input is kept whole") {
        const auto out = (dir / "clean.tsv").string();
        const auto r = run({"clean", kFixtures + "/example.konect", "-o", out});
        REQUIRE(r.code == 0);
        CHECK(Json::parse(r.out)["retained_fraction"] == 1.0);
    }
    SUBCASE("round trip keeps stats") {
        const auto out = (dir / "giant.tsv").string();
        const auto r = run({"clean", kFixtures + "/two_components.tsv", "-o", out});
        REQUIRE(r.code == 0);
        CHECK(Json::parse(r.out)["retained_fraction"] == 0.5);
        const auto g = birank::to_graph(birank::read_edge_list(out, birank::Format::Tsv));
        const auto again = (dir / "again.tsv").string();
        REQUIRE(run({"clean", out, "-o", again}).code == 0);
        const auto h = birank::to_graph(birank::read_edge_list(again, birank::Format::Tsv));
        CHECK(birank::compute_stats(g) == birank::compute_stats(h));
        CHECK(slurp(out) == slurp(again));
    }
    SUBCASE("nothing to keep") {
        CHECK(run({"clean", kFixtures + "/no_edges.konect", "-o", (dir / "x.tsv").string()}).code == 2);
    }
}

TEST_CASE("rank") {
    const auto dir = scratch_dir();
    SUBCASE("bipartite on the example graph") {
        const auto r = run({"rank", kFixtures + "/example.konect"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        CHECK(rows[0] == std::vector<std::string>{"rank", "global_index", "side", "label", "score"});
        CHECK(rows.size() == 7);
        CHECK(rows[1][1] == "0");
        CHECK(rows[1][2] == "U");
        CHECK(rows[1][3] == "1");
        CHECK(std::stod(rows[1][4]) == doctest::Approx(0.3757).epsilon(5e-4));
    }
    SUBCASE("pagerank needs more iterations") {
        const auto br = run({"rank", kFixtures + "/example.mtx", "-o", (dir / "br.csv").string()});
        const auto pr = run({"rank", kFixtures + "/example.mtx", "-a", "pagerank", "-o", (dir / "pr.csv").string()});
        REQUIRE(br.code == 0);
        REQUIRE(pr.code == 0);
        const auto jb = Json::parse(br.out);
        const auto jp = Json::parse(pr.out);
        CHECK(jb["algorithm"] == "bipartite");
        CHECK(jp["algorithm"] == "pagerank");
        CHECK(jp["iterations"].get<int>() > jb["iterations"].get<int>());
        CHECK(jb["residuals"].size() == jb["iterations"].get<std::size_t>());
        CHECK(jb["converged"] == true);
    }
    SUBCASE("K11 ties broken by index") {
        const auto rows = csv_rows(run({"rank", kFixtures + "/k11.tsv"}).out);
        REQUIRE(rows.size() == 3);
        CHECK(rows[1][1] == "0");
        CHECK(rows[2][1] == "1");
        CHECK(std::stod(rows[1][4]) == doctest::Approx(0.5));
    }
    SUBCASE("non-convergence exits 3 unless partial") {
        CHECK(run({"rank", kFixtures + "/example.mtx", "--max-iter", "3"}).code == 3);
        CHECK(run({"rank", kFixtures + "/example.mtx", "--max-iter", "3", "--allow-partial"}).code == 0);
    }
    SUBCASE("ncdaware with a partition file") {
        const auto part = dir / "blocks.txt";
        std::ofstream(part) << "# global_index block\n0 0\n1 0\n2 1\n3 1\n4 1\n5 1\n";
        const auto r = run({"rank", kFixtures + "/example.mtx", "-a", "ncdaware", "--eta", "0.8", "--mu", "0.1",
                            "--partition", part.string(), "--tol", "1e-12"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        CHECK(std::stod(rows[1][4]) == doctest::Approx(0.36890838206627696).epsilon(1e-9));
        std::ofstream(dir / "short.txt") << "0 0\n";
        CHECK(run({"rank", kFixtures + "/example.mtx", "-a", "ncdaware", "--partition", (dir / "short.txt").string()})
                  .code == 2);
    }
    SUBCASE("bad parameters") {
        CHECK(run({"rank", kFixtures + "/example.mtx", "-e", "1.5"}).code == 2);
        CHECK(run({"rank", kFixtures + "/example.mtx", "-a", "hits"}).code == 2);
        CHECK(run({"rank"}).code == 2);
    }
    SUBCASE("isolated vertices need cleaning") {
        std::ofstream(dir / "gap.konect") << "1 1\n3 1\n";
        CHECK(run({"rank", (dir / "gap.konect").string()}).code == 2);
        CHECK(run({"rank", (dir / "gap.konect").string(), "--clean"}).code == 0);
    }
}

TEST_CASE("sweep") {
    SUBCASE("default grid") {
        const auto r = run({"sweep", kFixtures + "/example.mtx"});
        REQUIRE(r.code == 0);
        const auto rows = csv_rows(r.out);
        CHECK(rows[0] == std::vector<std::string>{"dataset", "algorithm", "epsilon", "iterations", "converged"});
        CHECK(rows.size() == 9);
        CHECK(rows[1][0] == "example");
        CHECK(rows[2][2] == "0.85");
    }
    SUBCASE("small epsilon converges in a handful of steps") {
        const auto rows = csv_rows(run({"sweep", kFixtures + "/example.mtx", "--epsilons", "0.5",
                                        "--algorithms", "bipartite"})
                                       .out);
        REQUIRE(rows.size() == 2);
        CHECK(std::stoi(rows[1][3]) <= 25);
    }
}

TEST_CASE("compare") {
    const auto dir = scratch_dir();
    const auto br = (dir / "cbr.csv").string();
    const auto pr = (dir / "cpr.csv").string();
    REQUIRE(run({"rank", kFixtures + "/example.mtx", "-o", br}).code == 0);
    REQUIRE(run({"rank", kFixtures + "/example.mtx", "-a", "pagerank", "-o", pr}).code == 0);
    SUBCASE("identity") {
        const auto j = Json::parse(run({"compare", br, br}).out);
        CHECK(j["kendall_tau_topk"] == 1.0);
        CHECK(j["l1_distance"] == 0.0);
    }
    SUBCASE("bipartite vs pagerank") {
        const auto j = Json::parse(run({"compare", br, pr, "-k", "3"}).out);
        CHECK(j["topk_jaccard"] == 1.0);
        CHECK(j["l1_distance"].get<double>() == doctest::Approx(0.04294435884663032).epsilon(1e-6));
    }
    SUBCASE("reversed") {
        std::ofstream(dir / "up.csv") << "rank,global_index,side,label,score\n1,0,U,a,0.1\n2,1,U,b,0.2\n3,2,V,c,0.7\n";
        std::ofstream(dir / "down.csv") << "rank,global_index,side,label,score\n1,0,U,a,0.7\n2,1,U,b,0.2\n3,2,V,c,0.1\n";
        const auto j = Json::parse(run({"compare", (dir / "up.csv").string(), (dir / "down.csv").string()}).out);
        CHECK(j["kendall_tau_topk"] == -1.0);
    }
    SUBCASE("different vertex sets") {
        std::ofstream(dir / "two.csv") << "rank,global_index,side,label,score\n1,0,U,a,0.5\n2,1,V,b,0.5\n";
        CHECK(run({"compare", br, (dir / "two.csv").string()}).code == 2);
    }
}

TEST_CASE("spectral") {
    const auto j = Json::parse(run({"spectral", kFixtures + "/example.mtx"}).out);
    CHECK(j["structural_eigenvalue"].get<double>() == doctest::Approx(-0.7));
    CHECK(j["eigenpair_residual"].get<double>() <= 1e-12);
    CHECK(std::abs(j["lambda2_estimate"].get<double>() - 0.7) <= 0.02);
    CHECK(j["structural_is_subdominant"] == true);
    CHECK(j["period_h"] == 2);
    const auto half = Json::parse(run({"spectral", kFixtures + "/example.mtx", "-e", "0.5"}).out);
    CHECK(half["structural_eigenvalue"] == 0.0);
}

TEST_CASE("synth") {
    const auto dir = scratch_dir();
    const auto a = (dir / "a.tsv").string();
    const auto b = (dir / "b.tsv").string();
    const auto ra = run({"synth", "--m", "300", "--n", "400", "--seed", "9", "-o", a});
    REQUIRE(ra.code == 0);
    REQUIRE(run({"synth", "--m", "300", "--n", "400", "--seed", "9", "-o", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    const auto j = Json::parse(ra.out);
    CHECK(j["schema"] == "birank/1");
    CHECK(j["realized_mean_degree"].get<double>() > 5.0);
    const auto sparse = run({"synth", "--m", "1000", "--n", "20", "--mean-degree", "2", "-o", (dir / "s.tsv").string()});
    CHECK(sparse.code == 0);
    CHECK(sparse.err.find("warning") != std::string::npos);
}

TEST_CASE("executable exit codes") {
    const std::string exe = BIRANK_EXE;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    CHECK(status("--help") == 0);
    CHECK(status("stats " + kFixtures + "/example.mtx") == 0);
    CHECK(status("stats " + kFixtures + "/empty.tsv") == 2);
    CHECK(status("rank " + kFixtures + "/example.mtx --max-iter 2") == 3);
    CHECK(status("frobnicate") == 2);
}
