#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "ncut/features.hpp"

using namespace ncut;

namespace {

FeatureMatrix points_1d(std::initializer_list<double> xs) {
    FeatureMatrix f;
    f.n = static_cast<Index>(xs.size());
    f.d = 1;
    f.values.assign(xs);
    return f;
}

}  // namespace

TEST_CASE("knn on collinear points") {
    const FeatureMatrix f = points_1d({0.0, 1.0, 3.0});
    const auto knn = knn_index(f, 1);
    CHECK(knn[0][0].index == 1);
    CHECK(knn[0][0].distance == doctest::Approx(1.0));
    CHECK(knn[1][0].index == 0);
    CHECK(knn[2][0].index == 1);
    CHECK(knn[2][0].distance == doctest::Approx(2.0));
}

TEST_CASE("duplicated points are mutual 1-nn at distance 0") {
    const FeatureMatrix f = points_1d({2.0, 2.0, 9.0});
    const auto knn = knn_index(f, 1);
    CHECK(knn[0][0].index == 1);
    CHECK(knn[0][0].distance == 0.0);
    CHECK(knn[1][0].index == 0);
    CHECK(knn[1][0].distance == 0.0);
}

TEST_CASE("k equal to n-1 lists every other node") {
    const FeatureMatrix f = points_1d({0.0, 1.0, 3.0, 10.0});
    const auto knn = knn_index(f, 3);
    for (const auto& nbrs : knn) CHECK(nbrs.size() == 3);
    CHECK_THROWS_AS(knn_index(f, 4), KTooLarge);
    CHECK_THROWS_AS(knn_index(f, 0), KTooLarge);
}

TEST_CASE("two-point self-tuning affinity is exp(-1)") {
    const FeatureMatrix f = points_1d({0.0, 0.7});
    const SparseSymGraph g = self_tuning_affinity(f, 1, 1);
    CHECK(g.weight(0, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
}

TEST_CASE("regular simplex yields equal affinities") {
    // Equilateral triangle in 2D: all pairwise distances equal.
    FeatureMatrix f;
    f.n = 3;
    f.d = 2;
    f.values = {0.0, 0.0, 1.0, 0.0, 0.5, std::sqrt(3.0) / 2.0};
    const SparseSymGraph g = self_tuning_affinity(f, 2, 1);
    const double w01 = g.weight(0, 1);
    CHECK(g.weight(0, 2) == doctest::Approx(w01).epsilon(1e-15));
    CHECK(g.weight(1, 2) == doctest::Approx(w01).epsilon(1e-15));
    CHECK(w01 > 0.0);
    CHECK(w01 <= 1.0);
}

TEST_CASE("zero sigma from duplicates is reported with the node") {
    const FeatureMatrix f = points_1d({2.0, 2.0, 5.0, 9.0});
    try {
        self_tuning_affinity(f, 2, 1);
        FAIL("expected ZeroSigma");
    } catch (const ZeroSigma& e) {
        CHECK(e.node == 0);
    }
}

TEST_CASE("affinity decreases with distance") {
    const FeatureMatrix f = points_1d({0.0, 1.0, 2.5, 6.0});
    const SparseSymGraph g = self_tuning_affinity(f, 3, 2);
    CHECK(g.weight(0, 1) > g.weight(0, 2));
    CHECK(g.weight(0, 2) > g.weight(0, 3));
    for (double w : g.weights()) {
        CHECK(w > 0.0);
        CHECK(w <= 1.0);
    }
}

TEST_CASE("relabeling determinism: permuted input gives isomorphic graph") {
    const FeatureMatrix f = points_1d({0.0, 1.0, 3.0, 10.0, 11.5});
    const FeatureMatrix perm = points_1d({11.5, 3.0, 0.0, 10.0, 1.0});
    const Index to_orig[] = {4, 2, 0, 3, 1};  // perm row -> original row
    const SparseSymGraph a = self_tuning_affinity(f, 2, 2);
    const SparseSymGraph b = self_tuning_affinity(perm, 2, 2);
    for (Index i = 0; i < 5; ++i)
        for (Index j = 0; j < 5; ++j)
            CHECK(b.weight(i, j) == a.weight(to_orig[i], to_orig[j]));
}

TEST_CASE("csv parse errors carry line numbers") {
    const auto path = std::filesystem::temp_directory_path() / "ncut_feat.csv";
    {
        std::ofstream out(path);
        out << "1.0,2.0\n1.0,oops\n";
    }
    try {
        read_features_csv(path.string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    std::filesystem::remove(path);
}
