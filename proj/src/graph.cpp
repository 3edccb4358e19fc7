#include "ncut/graph.hpp"

#include <algorithm>
#include <map>

namespace ncut {

SparseSymGraph SparseSymGraph::from_edges(Index n, std::span<const Edge> edges) {
    if (n <= 0) throw InvalidIndex(n, 1);

    // Accumulate undirected edges keyed by (min, max); deterministic
    // regardless of input order since duplicates are summed.
    std::map<std::pair<Index, Index>, double> acc;
    Index dropped = 0;
    for (const Edge& e : edges) {
        if (e.i < 0 || e.i >= n) throw InvalidIndex(e.i, n);
        if (e.j < 0 || e.j >= n) throw InvalidIndex(e.j, n);
        if (e.i == e.j) {
            ++dropped;
            continue;
        }
        if (e.w == 0.0) continue;
        acc[{std::min(e.i, e.j), std::max(e.i, e.j)}] += e.w;
    }

    SparseSymGraph g;
    g.n_ = n;
    g.dropped_diagonal_ = dropped;

    std::vector<Index> counts(static_cast<std::size_t>(n), 0);
    for (const auto& [key, w] : acc) {
        if (w == 0.0) continue;
        ++counts[static_cast<std::size_t>(key.first)];
        ++counts[static_cast<std::size_t>(key.second)];
    }

    g.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Index i = 0; i < n; ++i)
        g.row_ptr_[static_cast<std::size_t>(i) + 1] =
            g.row_ptr_[static_cast<std::size_t>(i)] + counts[static_cast<std::size_t>(i)];

    const auto nnz = static_cast<std::size_t>(g.row_ptr_.back());
    g.col_idx_.resize(nnz);
    g.weights_.resize(nnz);

    std::vector<Index> cursor(g.row_ptr_.begin(), g.row_ptr_.end() - 1);
    // Map iteration is ordered by (i, j), so filling (i, j) then (j, i)
    // leaves each row's columns strictly increasing.
    for (const auto& [key, w] : acc) {
        if (w == 0.0) continue;
        const auto [i, j] = key;
        g.col_idx_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(i)])] = j;
        g.weights_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(i)]++)] = w;
        g.col_idx_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(j)])] = i;
        g.weights_[static_cast<std::size_t>(cursor[static_cast<std::size_t>(j)]++)] = w;
    }

    g.degrees_.assign(static_cast<std::size_t>(n), 0.0);
    for (Index i = 0; i < n; ++i) {
        double d = 0.0;
        for (Index k = g.row_ptr_[static_cast<std::size_t>(i)];
             k < g.row_ptr_[static_cast<std::size_t>(i) + 1]; ++k)
            d += g.weights_[static_cast<std::size_t>(k)];
        if (d <= 0.0) throw IsolatedNode(i);
        g.degrees_[static_cast<std::size_t>(i)] = d;
    }
    return g;
}

double SparseSymGraph::weight(Index i, Index j) const {
    auto [cols, ws] = neighbors(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0.0;
    return ws[static_cast<std::size_t>(it - cols.begin())];
}

}  // namespace ncut
