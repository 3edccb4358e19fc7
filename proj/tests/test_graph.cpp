#include <vector>

#include "doctest.h"
#include "ncut/graph.hpp"
#include "ncut/synthetic.hpp"
#include "test_util.hpp"

using namespace ncut;

TEST_CASE("from_edges computes degrees of the G4 path") {
    const SparseSymGraph g = testutil::make_g4();
    CHECK(g.num_nodes() == 4);
    CHECK(g.degree(0) == doctest::Approx(1.0));
    CHECK(g.degree(1) == doctest::Approx(1.1));
    CHECK(g.degree(2) == doctest::Approx(1.1));
    CHECK(g.degree(3) == doctest::Approx(1.0));
}

TEST_CASE("diagonal entries are dropped with a counter") {
    const std::vector<Edge> edges = {{0, 0, 5.0}, {0, 1, 1.0}};
    const SparseSymGraph g = SparseSymGraph::from_edges(2, edges);
    CHECK(g.dropped_diagonal() == 1);
    CHECK(g.degree(0) == 1.0);
    CHECK(g.degree(1) == 1.0);
}

TEST_CASE("isolated nodes are rejected") {
    const std::vector<Edge> edges = {{0, 1, 1.0}};
    CHECK_THROWS_AS(SparseSymGraph::from_edges(3, edges), IsolatedNode);
}

TEST_CASE("out-of-range indices are rejected") {
    const std::vector<Edge> edges = {{0, 5, 1.0}};
    CHECK_THROWS_AS(SparseSymGraph::from_edges(3, edges), InvalidIndex);
}

TEST_CASE("duplicate edges are summed regardless of orientation") {
    const std::vector<Edge> a = {{0, 1, 0.25}, {1, 0, 0.5}, {0, 1, 0.25}};
    const SparseSymGraph g = SparseSymGraph::from_edges(2, a);
    CHECK(g.weight(0, 1) == 1.0);
    CHECK(g.weight(1, 0) == 1.0);
}

TEST_CASE("explicit zero weights are dropped") {
    const std::vector<Edge> edges = {{0, 1, 1.0}, {1, 2, 0.0}, {2, 0, 0.5}};
    const SparseSymGraph g = SparseSymGraph::from_edges(3, edges);
    CHECK(g.weight(1, 2) == 0.0);
    CHECK(g.num_edges() == 2);
}

TEST_CASE("neighbors yields stored entries ascending") {
    const SparseSymGraph g = testutil::make_g4();
    auto [cols, ws] = g.neighbors(1);
    REQUIRE(cols.size() == 2);
    CHECK(cols[0] == 0);
    CHECK(ws[0] == 1.0);
    CHECK(cols[1] == 2);
    CHECK(ws[1] == 0.1);

    auto [cols0, ws0] = g.neighbors(0);
    REQUIRE(cols0.size() == 1);
    CHECK(cols0[0] == 1);

    for (Index i = 0; i < g.num_nodes(); ++i)
        CHECK(g.neighbors(i).first.size() > 0);  // degree invariant
}

TEST_CASE("structural invariants hold on random graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const SparseSymGraph g = gen_random_graph(20, 0.3, seed);

        double total = 0.0;
        for (Index i = 0; i < g.num_nodes(); ++i) {
            auto [cols, ws] = g.neighbors(i);
            double row_sum = 0.0;
            for (std::size_t e = 0; e < cols.size(); ++e) {
                row_sum += ws[e];
                // symmetry with bitwise-equal weights
                CHECK(g.weight(cols[e], i) == ws[e]);
                CHECK(cols[e] != i);  // zero diagonal
                if (e > 0) CHECK(cols[e] > cols[e - 1]);
            }
            CHECK(g.degree(i) == doctest::Approx(row_sum).epsilon(1e-12));
            total += g.degree(i);
        }

        double twice_weight = 0.0;
        for (double w : g.weights()) twice_weight += w;
        CHECK(total == doctest::Approx(twice_weight).epsilon(1e-12));
    }
}
