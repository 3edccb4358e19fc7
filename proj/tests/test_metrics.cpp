#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "ncut/metrics.hpp"

using namespace ncut;

namespace {
const std::vector<Index> kSplit = {0, 0, 1, 1};
const std::vector<Index> kFlipped = {1, 1, 0, 0};
const std::vector<Index> kAlternating = {0, 1, 0, 1};
}  // namespace

TEST_CASE("accuracy") {
    CHECK(accuracy(kSplit, kFlipped) == 1.0);
    CHECK(accuracy(kSplit, kAlternating) == 0.5);
    CHECK(accuracy(kSplit, kSplit) == 1.0);
    CHECK_THROWS_AS(accuracy(kSplit, std::vector<Index>{0, 1}), LengthMismatch);
}

TEST_CASE("accuracy with rectangular contingency") {
    const std::vector<Index> pred = {0, 0, 1, 1, 2, 2};
    const std::vector<Index> truth = {0, 0, 1, 1, 1, 1};
    CHECK(accuracy(pred, truth) == doctest::Approx(6.0 / 6.0 - 2.0 / 6.0));
    CHECK(accuracy(truth, pred) == accuracy(pred, truth));
}

TEST_CASE("nmi") {
    CHECK(nmi(kSplit, kFlipped) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(nmi(kSplit, kAlternating) == doctest::Approx(0.0));
    // zero-entropy prediction against a real split
    CHECK(nmi(std::vector<Index>{0, 0, 0, 0}, kSplit) == 0.0);
    // both single-cluster: identical partitions by convention
    CHECK(nmi(std::vector<Index>{3, 3}, std::vector<Index>{7, 7}) == 1.0);
    CHECK(nmi(kSplit, kAlternating) == nmi(kAlternating, kSplit));
}

TEST_CASE("ari") {
    CHECK(ari(kSplit, kFlipped) == doctest::Approx(1.0));
    CHECK(ari(kSplit, kAlternating) == doctest::Approx(-0.5));
    CHECK(ari(kSplit, kSplit) == doctest::Approx(1.0));
    CHECK(ari(kSplit, kAlternating) == ari(kAlternating, kSplit));
}

TEST_CASE("random labelings have near-zero mean ARI") {
    std::mt19937_64 rng(12345);
    double sum = 0.0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        std::vector<Index> a(50), b(50);
        for (std::size_t i = 0; i < 50; ++i) {
            a[i] = static_cast<Index>(rng() % 3);
            b[i] = static_cast<Index>(rng() % 3);
        }
        sum += ari(a, b);
    }
    CHECK(std::abs(sum / trials) < 0.05);
}

TEST_CASE("permutation invariance of all three metrics") {
    std::mt19937_64 rng(99);
    std::vector<Index> pred(40), truth(40);
    for (std::size_t i = 0; i < 40; ++i) {
        pred[i] = static_cast<Index>(rng() % 4);
        truth[i] = static_cast<Index>(rng() % 3);
    }
    const double acc0 = accuracy(pred, truth);
    const double nmi0 = nmi(pred, truth);
    const double ari0 = ari(pred, truth);

    for (int t = 0; t < 50; ++t) {
        std::vector<Index> perm_p = {0, 1, 2, 3};
        std::vector<Index> perm_t = {0, 1, 2};
        std::shuffle(perm_p.begin(), perm_p.end(), rng);
        std::shuffle(perm_t.begin(), perm_t.end(), rng);
        std::vector<Index> p2(pred.size()), t2(truth.size());
        for (std::size_t i = 0; i < pred.size(); ++i) {
            p2[i] = perm_p[static_cast<std::size_t>(pred[i])];
            t2[i] = perm_t[static_cast<std::size_t>(truth[i])];
        }
        CHECK(accuracy(p2, t2) == doctest::Approx(acc0).epsilon(1e-12));
        CHECK(nmi(p2, t2) == doctest::Approx(nmi0).epsilon(1e-12));
        CHECK(ari(p2, t2) == doctest::Approx(ari0).epsilon(1e-12));
    }
}

TEST_CASE("accuracy beats the best constant prediction") {
    std::mt19937_64 rng(5);
    std::vector<Index> pred(30), truth(30);
    for (std::size_t i = 0; i < 30; ++i) {
        pred[i] = static_cast<Index>(rng() % 3);
        truth[i] = static_cast<Index>(rng() % 3);
    }
    std::vector<Index> counts(3, 0);
    for (Index t : truth) ++counts[static_cast<std::size_t>(t)];
    const double best_share =
        static_cast<double>(*std::max_element(counts.begin(), counts.end())) / 30.0;
    const std::vector<Index> constant(30, 0);
    CHECK(accuracy(constant, truth) == doctest::Approx(best_share));
    CHECK(accuracy(pred, pred) == 1.0);
    CHECK(nmi(pred, pred) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ari(pred, pred) == doctest::Approx(1.0).epsilon(1e-12));
}
