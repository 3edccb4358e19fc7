#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ncut/error.hpp"

namespace ncut {

using Index = std::int64_t;

struct Edge {
    Index i;
    Index j;
    double w;
};

/// Symmetric weighted adjacency in CSR form with a zero diagonal.
///
/// Invariants (enforced at construction):
///  - every stored weight is positive (explicit zeros dropped),
///  - no diagonal entries,
///  - (i, j, w) stored iff (j, i, w) stored, bitwise-equal weights,
///  - column indices strictly increasing within each row,
///  - every node has positive degree.
///
/// Immutable after construction; safe for concurrent reads.
class SparseSymGraph {
public:
    /// Builds the symmetrized graph from an undirected edge list.
    /// Duplicate (i, j) / (j, i) entries are summed; diagonal entries are
    /// dropped and counted in dropped_diagonal().
    static SparseSymGraph from_edges(Index n, std::span<const Edge> edges);

    Index num_nodes() const { return n_; }
    Index num_stored_entries() const { return static_cast<Index>(col_idx_.size()); }
    /// Number of undirected edges.
    Index num_edges() const { return num_stored_entries() / 2; }

    double degree(Index i) const { return degrees_[i]; }
    const std::vector<double>& degrees() const { return degrees_; }

    /// Stored entries of row i as parallel (column, weight) spans, ascending j.
    std::pair<std::span<const Index>, std::span<const double>>
    neighbors(Index i) const {
        if (i < 0 || i >= n_) throw InvalidIndex(i, n_);
        const auto begin = static_cast<std::size_t>(row_ptr_[i]);
        const auto len = static_cast<std::size_t>(row_ptr_[i + 1] - row_ptr_[i]);
        return {std::span(col_idx_).subspan(begin, len),
                std::span(weights_).subspan(begin, len)};
    }

    /// Weight of entry (i, j), 0 if absent. Binary search over row i.
    double weight(Index i, Index j) const;

    const std::vector<Index>& row_ptr() const { return row_ptr_; }
    const std::vector<Index>& col_idx() const { return col_idx_; }
    const std::vector<double>& weights() const { return weights_; }

    Index dropped_diagonal() const { return dropped_diagonal_; }

private:
    SparseSymGraph() = default;

    Index n_ = 0;
    std::vector<Index> row_ptr_;
    std::vector<Index> col_idx_;
    std::vector<double> weights_;
    std::vector<double> degrees_;
    Index dropped_diagonal_ = 0;
};

}  // namespace ncut
