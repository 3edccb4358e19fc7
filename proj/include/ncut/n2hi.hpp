#pragma once

#include <vector>

#include "ncut/graph.hpp"
#include "ncut/solver.hpp"

namespace ncut {

/// Symmetric sparse similarity for hierarchy layers. Unlike SparseSymGraph
/// a layer may contain all-zero rows (disconnected remnants after
/// coarsening); the stall rule in build_hierarchy resolves them.
struct LayerGraph {
    Index n = 0;
    std::vector<Index> row_ptr;
    std::vector<Index> col_idx;
    std::vector<double> weights;

    static LayerGraph from_graph(const SparseSymGraph& g);
    static LayerGraph from_entries(
        Index n, const std::vector<std::pair<std::pair<Index, Index>, double>>&
                     upper_entries);

    bool row_empty(Index i) const {
        return row_ptr[static_cast<std::size_t>(i)] ==
               row_ptr[static_cast<std::size_t>(i) + 1];
    }
};

struct HierarchyLayer {
    /// Cluster id per node of this layer's input graph, ids by first
    /// appearance.
    std::vector<Index> assignment;
    Index num_clusters = 0;
    /// Coarsened similarity over the clusters (input of the next layer).
    LayerGraph coarse;
};

struct ClusterHierarchy {
    Index base_n = 0;
    std::vector<HierarchyLayer> layers;

    /// Partition sizes |Gamma_1|, |Gamma_2|, ... (last is 1).
    std::vector<Index> partition_sizes() const;
    /// Composes assignments down to base nodes for layer index l (0-based).
    std::vector<Index> base_assignment(std::size_t l) const;
};

/// Groups nodes that are each other's highest-weight neighbor (closure via
/// connected components of the symmetric 1-nn relation). Ties break to the
/// lowest column index. Throws AllZeroRow on a node with no positive entry.
std::vector<Index> first_neighbor_partition(const LayerGraph& g);

/// Averaged inter-cluster similarity a_kl = (y_k' A y_l)/(n_k n_l), k != l;
/// zero diagonal, zero entries dropped.
LayerGraph coarsen(const LayerGraph& g, const std::vector<Index>& assignment,
                   Index num_clusters);

/// Repeats first-neighbor partitioning and coarsening until one cluster.
/// Nodes with all-zero rows are merged into the lowest-indexed other
/// cluster at the end of their layer, so the build terminates on
/// disconnected graphs too.
ClusterHierarchy build_hierarchy(const SparseSymGraph& g);

/// Agglomerates the layer's clusters down to exactly target clusters by
/// repeatedly merging the most similar pair (ties: lexicographically
/// smallest) and averaging the merged rows. Returns labels over the layer
/// clusters, relabeled by first appearance.
std::vector<Index> refine(const LayerGraph& similarity, Index target);

/// Deterministic initial labeling with exactly c nonempty clusters.
/// Throws TargetTooLarge if c exceeds the first partition size.
Labeling initialize(const SparseSymGraph& g, Index c);

Labeling initialize(const ClusterHierarchy& hierarchy, Index c);

}  // namespace ncut
