#include "ncut/synthetic.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace ncut {

LabeledGraph gen_blocks(Index num_blocks, Index block_size,
                        double noise_density, std::uint64_t seed) {
    Rng rng(seed);
    const Index n = num_blocks * block_size;
    std::vector<Index> truth(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i)
        truth[static_cast<std::size_t>(i)] = i / block_size;

    std::vector<Edge> edges;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (truth[static_cast<std::size_t>(i)] == truth[static_cast<std::size_t>(j)]) {
                edges.push_back({i, j, rng.uniform(0.5, 1.0)});
            } else if (rng.next_double() < noise_density) {
                edges.push_back({i, j, rng.uniform(0.0, 0.05)});
            }
        }
    }
    return {SparseSymGraph::from_edges(n, edges), std::move(truth)};
}

LabeledGraph gen_block_regular(Index num_blocks, Index block_size,
                               Index degree, std::uint64_t seed) {
    Rng rng(seed);
    const Index n = num_blocks * block_size;
    std::vector<Index> truth(static_cast<std::size_t>(n));
    std::vector<Edge> edges;
    for (Index i = 0; i < n; ++i) {
        const Index block = i / block_size;
        truth[static_cast<std::size_t>(i)] = block;
        const Index base = block * block_size;
        std::set<Index> partners;
        while (static_cast<Index>(partners.size()) < degree) {
            const Index j =
                base + static_cast<Index>(
                           rng.next_below(static_cast<std::uint64_t>(block_size)));
            if (j != i) partners.insert(j);
        }
        for (Index j : partners) edges.push_back({i, j, rng.uniform(0.5, 1.0)});
    }
    return {SparseSymGraph::from_edges(n, edges), std::move(truth)};
}

SparseSymGraph gen_random_graph(Index n, double density, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    // Squaring skews weights toward small values: most edges are weak,
    // a few dominate, giving the graphs a usable (if random) cut structure.
    const auto draw_weight = [&rng]() {
        const double u = rng.uniform(0.05, 1.0);
        return u * u;
    };
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (rng.next_double() < density) {
                edges.push_back({i, j, draw_weight()});
                covered[static_cast<std::size_t>(i)] = true;
                covered[static_cast<std::size_t>(j)] = true;
            }
        }
    }
    for (Index i = 0; i < n; ++i) {
        if (covered[static_cast<std::size_t>(i)]) continue;
        const Index j = (i + 1) % n;
        edges.push_back({i, j, draw_weight()});
        covered[static_cast<std::size_t>(i)] = true;
        covered[static_cast<std::size_t>(j)] = true;
    }
    return SparseSymGraph::from_edges(n, edges);
}

LabeledFeatures gen_circles(Index points_per_circle, Index noise_points,
                            std::uint64_t seed) {
    Rng rng(seed);
    LabeledFeatures out;
    out.features.n = 2 * points_per_circle + noise_points;
    out.features.d = 2;
    out.features.values.reserve(static_cast<std::size_t>(out.features.n) * 2);

    const double radii[2] = {1.0, 3.0};
    for (int circle = 0; circle < 2; ++circle) {
        for (Index i = 0; i < points_per_circle; ++i) {
            const double angle = 2.0 * std::numbers::pi *
                                 static_cast<double>(i) /
                                 static_cast<double>(points_per_circle);
            const double r = radii[circle] + rng.uniform(-0.05, 0.05);
            out.features.values.push_back(r * std::cos(angle));
            out.features.values.push_back(r * std::sin(angle));
            out.truth.push_back(circle);
        }
    }
    for (Index i = 0; i < noise_points; ++i) {
        out.features.values.push_back(rng.uniform(-3.5, 3.5));
        out.features.values.push_back(rng.uniform(-3.5, 3.5));
        out.truth.push_back(2);
    }
    return out;
}

}  // namespace ncut
