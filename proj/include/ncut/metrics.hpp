#pragma once

#include <span>
#include <vector>

#include "ncut/graph.hpp"

namespace ncut {

/// Contingency counts between two labelings over the same items, with
/// compacted label ids. Marginals kept alongside.
struct Contingency {
    std::vector<std::vector<Index>> table;  // rows: pred, cols: truth
    std::vector<Index> row_sums;
    std::vector<Index> col_sums;
    Index n = 0;

    static Contingency build(std::span<const Index> pred,
                             std::span<const Index> truth);
};

/// Assignment-matched accuracy in [0, 1]. The cluster matching is solved
/// exactly (Hungarian method on the contingency table).
double accuracy(std::span<const Index> pred, std::span<const Index> truth);

/// Normalized mutual information I(U;V)/sqrt(H(U) H(V)), natural log.
/// Identical partitions give 1 (including two single-cluster partitions);
/// zero-entropy sides otherwise give 0.
double nmi(std::span<const Index> pred, std::span<const Index> truth);

/// Adjusted Rand index in (-1, 1].
double ari(std::span<const Index> pred, std::span<const Index> truth);

}  // namespace ncut
