#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ncut/features.hpp"
#include "ncut/graph.hpp"

namespace ncut {

/// mt19937_64-backed generator with a platform-independent double mapping
/// (std distributions are implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }
    /// Uniform in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) {
        return engine_() % bound;
    }

private:
    std::mt19937_64 engine_;
};

struct LabeledGraph {
    SparseSymGraph graph;
    std::vector<Index> truth;
};

struct LabeledFeatures {
    FeatureMatrix features;
    std::vector<Index> truth;
};

/// Diagonal-block graph: all intra-block pairs get weight U(0.5, 1), and
/// each cross-block pair gets weight U(0, 0.05) with the given probability.
LabeledGraph gen_blocks(Index num_blocks, Index block_size,
                        double noise_density, std::uint64_t seed);

/// Sparse block graph with a fixed per-node intra-block degree; used for
/// size-scaling runs where |E| must grow linearly with n.
LabeledGraph gen_block_regular(Index num_blocks, Index block_size,
                               Index degree, std::uint64_t seed);

/// Erdos-Renyi-style weighted graph with weights U(0.1, 1); isolated nodes
/// are patched with one extra edge so the graph is always valid.
SparseSymGraph gen_random_graph(Index n, double density, std::uint64_t seed);

/// Two concentric circles (radii 1 and 3) of points_per_circle samples
/// each with small radial jitter, plus noise_points uniform samples in
/// [-3.5, 3.5]^2. Truth: 0 inner, 1 outer, 2 noise.
LabeledFeatures gen_circles(Index points_per_circle, Index noise_points,
                            std::uint64_t seed);

}  // namespace ncut
