#include <birank/errors.hpp>
#include <birank/graph.hpp>

#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace birank;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected birank::Error");
    return ErrorCode::Io;
}

} // namespace

TEST_CASE("example graph degrees") {
    const auto g = testing::example_graph();
    CHECK(g.m() == 2);
    CHECK(g.n() == 4);
    CHECK(g.nnz() == 5);
    CHECK(g.degree(0) == 4); // u0
    CHECK(g.degree(1) == 1); // u1
    CHECK(g.degree(5) == 2); // v3
    CHECK(degree(g, 2) == 1);
    CHECK(g.side_of(1) == Side::U);
    CHECK(g.side_of(2) == Side::V);
}

TEST_CASE("smallest legal graph") {
    const auto g = testing::k11();
    CHECK(g.size() == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("duplicate edges") {
    SUBCASE("unweighted collapse") {
        const std::vector<Edge> edges{{0, 0, {}}, {0, 0, {}}};
        const auto g = build_graph(edges, 1, 1);
        CHECK(g.fwd().nnz() == 1);
        CHECK_FALSE(g.weighted());
    }
    SUBCASE("weighted sum") {
        const std::vector<Edge> edges{{0, 0, 1.5}, {0, 0, 2.0}, {0, 1, 1.0}};
        const auto g = build_graph(edges, 1, 2);
        REQUIRE(g.weighted());
        CHECK(g.fwd().nnz() == 2);
        CHECK(g.fwd().row_values(0)[0] == doctest::Approx(3.5));
        CHECK(g.bwd().row_values(0)[0] == doctest::Approx(3.5));
        CHECK(g.degree(0) == 2);
    }
    SUBCASE("missing weights default to one when others are weighted") {
        const std::vector<Edge> edges{{0, 0, 2.0}, {0, 1, {}}};
        const auto g = build_graph(edges, 1, 2);
        CHECK(g.fwd().row_values(0)[1] == 1.0);
    }
}

TEST_CASE("build_graph errors") {
    const std::vector<Edge> ok{{0, 0, {}}};
    CHECK(code_of([&] { build_graph(ok, 0, 1); }) == ErrorCode::EmptySide);
    CHECK(code_of([&] { build_graph(ok, 1, 0); }) == ErrorCode::EmptySide);
    const std::vector<Edge> out_of_range{{0, 3, {}}};
    CHECK(code_of([&] { build_graph(out_of_range, 1, 2); }) == ErrorCode::IndexOutOfRange);
    const std::vector<Edge> bad_weight{{0, 0, -1.0}};
    CHECK(code_of([&] { build_graph(bad_weight, 1, 1); }) == ErrorCode::NonPositiveWeight);
    const std::vector<Edge> zero_weight{{0, 0, 0.0}};
    CHECK(code_of([&] { build_graph(zero_weight, 1, 1); }) == ErrorCode::NonPositiveWeight);
    CHECK(code_of([&] { build_graph(ok, 1, 2); }) == ErrorCode::IsolatedVertex);
    const auto g = testing::k11();
    CHECK(code_of([&] { (void)g.degree(2); }) == ErrorCode::IndexOutOfRange);
}

TEST_CASE("SparseRows rejects non-canonical input") {
    CHECK_THROWS_AS(SparseRows(1, 3, {0, 2}, {2, 1}), Error);
    CHECK_THROWS_AS(SparseRows(1, 3, {0, 2}, {1, 1}), Error);
    CHECK_THROWS_AS(SparseRows(1, 3, {0, 1}, {5}), Error);
    CHECK_THROWS_AS(SparseRows(2, 3, {0, 1}, {0}), Error);
    CHECK_NOTHROW(SparseRows(2, 3, {0, 1, 3}, {2, 0, 1}));
}

TEST_CASE("graph invariants on random graphs") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto g = testing::random_fixture(seed, 200, seed % 2 == 0);
        CAPTURE(seed);
        CHECK(g.fwd().transpose().transpose() == g.fwd());
        CHECK(g.fwd().transpose() == g.bwd());
        std::size_t sum_u = 0;
        std::size_t sum_v = 0;
        for (std::size_t i = 0; i < g.m(); ++i) {
            sum_u += g.degree(i);
        }
        for (std::size_t i = g.m(); i < g.size(); ++i) {
            CHECK(g.degree(i) >= 1);
            sum_v += g.degree(i);
        }
        CHECK(sum_u == g.nnz());
        CHECK(sum_v == g.nnz());
        CHECK(g.fwd().nnz() == g.bwd().nnz());
        // (u,v) in fwd <=> (v,u) in bwd
        for (std::size_t u = 0; u < g.m(); ++u) {
            for (auto v : g.fwd().row(u)) {
                const auto back = g.bwd().row(v);
                CHECK(std::binary_search(back.begin(), back.end(), static_cast<vertex_t>(u)));
            }
        }
    }
}

TEST_CASE("labels") {
    const auto g = testing::k11();
    CHECK(g.label(1) == "1");
    const auto named = g.with_labels({"alice", "doc"});
    CHECK(named.label(0) == "alice");
    CHECK_THROWS_AS(g.with_labels({"only-one"}), Error);
}
