#pragma once

#include <string>
#include <vector>

#include "ncut/graph.hpp"

namespace ncut {

/// Row-major n x d feature matrix.
struct FeatureMatrix {
    Index n = 0;
    Index d = 0;
    std::vector<double> values;

    double at(Index i, Index j) const {
        return values[static_cast<std::size_t>(i * d + j)];
    }
};

/// One row per sample, comma-separated. Throws ParseError with the
/// offending line number.
FeatureMatrix read_features_csv(const std::string& path, bool skip_header = false);

struct Neighbor {
    Index index;
    double distance;
};

/// Exact k nearest neighbors per sample by Euclidean distance, ascending,
/// ties broken by lower index. Brute force.
std::vector<std::vector<Neighbor>> knn_index(const FeatureMatrix& features,
                                             Index k);

/// Self-tuning Gaussian affinity graph: w_ij = exp(-dist(i,j)^2 / (s_i s_j))
/// for j among the k_graph nearest neighbors of i, where s_i is the
/// distance to i's k_sigma-th nearest neighbor. One-sided entries are
/// averaged with 0.
SparseSymGraph self_tuning_affinity(const FeatureMatrix& features,
                                    Index k_graph = 10, Index k_sigma = 7);

}  // namespace ncut
