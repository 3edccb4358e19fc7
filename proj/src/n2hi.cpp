#include "ncut/n2hi.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ncut {

namespace {

struct UnionFind {
    std::vector<Index> parent;

    explicit UnionFind(Index n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), Index{0});
    }
    Index find(Index x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(Index a, Index b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

// Cluster ids by order of first appearance (lowest member index first).
std::vector<Index> components_to_labels(UnionFind& uf, Index n, Index& count) {
    std::vector<Index> labels(static_cast<std::size_t>(n), -1);
    std::vector<Index> id_of_root(static_cast<std::size_t>(n), -1);
    count = 0;
    for (Index i = 0; i < n; ++i) {
        const Index root = uf.find(i);
        if (id_of_root[static_cast<std::size_t>(root)] < 0)
            id_of_root[static_cast<std::size_t>(root)] = count++;
        labels[static_cast<std::size_t>(i)] = id_of_root[static_cast<std::size_t>(root)];
    }
    return labels;
}

Index argmax_neighbor(const LayerGraph& g, Index i) {
    Index best = -1;
    double best_w = 0.0;
    for (Index e = g.row_ptr[static_cast<std::size_t>(i)];
         e < g.row_ptr[static_cast<std::size_t>(i) + 1]; ++e) {
        const double w = g.weights[static_cast<std::size_t>(e)];
        if (w > best_w) {  // columns ascend, so ties keep the lowest j
            best_w = w;
            best = g.col_idx[static_cast<std::size_t>(e)];
        }
    }
    return best;
}

// Stall-tolerant variant: nodes with all-zero rows are merged into the
// lowest-indexed other component instead of raising AllZeroRow.
std::vector<Index> partition_with_stall(const LayerGraph& g, Index& count) {
    UnionFind uf(g.n);
    for (Index i = 0; i < g.n; ++i) {
        const Index u = argmax_neighbor(g, i);
        if (u >= 0) uf.unite(i, u);
    }
    for (Index i = 0; i < g.n; ++i) {
        if (!g.row_empty(i)) continue;
        const Index my_root = uf.find(i);
        for (Index j = 0; j < g.n; ++j) {
            if (uf.find(j) != my_root) {
                uf.unite(i, j);
                break;
            }
        }
    }
    return components_to_labels(uf, g.n, count);
}

}  // namespace

LayerGraph LayerGraph::from_graph(const SparseSymGraph& g) {
    LayerGraph layer;
    layer.n = g.num_nodes();
    layer.row_ptr = g.row_ptr();
    layer.col_idx = g.col_idx();
    layer.weights = g.weights();
    return layer;
}

LayerGraph LayerGraph::from_entries(
    Index n,
    const std::vector<std::pair<std::pair<Index, Index>, double>>& upper_entries) {
    LayerGraph g;
    g.n = n;
    std::vector<Index> counts(static_cast<std::size_t>(n), 0);
    for (const auto& [key, w] : upper_entries) {
        if (w == 0.0) continue;
        ++counts[static_cast<std::size_t>(key.first)];
        ++counts[static_cast<std::size_t>(key.second)];
    }
    g.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Index i = 0; i < n; ++i)
        g.row_ptr[static_cast<std::size_t>(i) + 1] =
            g.row_ptr[static_cast<std::size_t>(i)] + counts[static_cast<std::size_t>(i)];
    g.col_idx.resize(static_cast<std::size_t>(g.row_ptr.back()));
    g.weights.resize(static_cast<std::size_t>(g.row_ptr.back()));
    std::vector<Index> cursor(g.row_ptr.begin(), g.row_ptr.end() - 1);
    for (const auto& [key, w] : upper_entries) {
        if (w == 0.0) continue;
        const auto [i, j] = key;
        g.col_idx[static_cast<std::size_t>(cursor[static_cast<std::size_t>(i)])] = j;
        g.weights[static_cast<std::size_t>(cursor[static_cast<std::size_t>(i)]++)] = w;
        g.col_idx[static_cast<std::size_t>(cursor[static_cast<std::size_t>(j)])] = i;
        g.weights[static_cast<std::size_t>(cursor[static_cast<std::size_t>(j)]++)] = w;
    }
    return g;
}

std::vector<Index> first_neighbor_partition(const LayerGraph& g) {
    UnionFind uf(g.n);
    for (Index i = 0; i < g.n; ++i) {
        const Index u = argmax_neighbor(g, i);
        if (u < 0) throw AllZeroRow(i);
        uf.unite(i, u);
    }
    Index count = 0;
    return components_to_labels(uf, g.n, count);
}

LayerGraph coarsen(const LayerGraph& g, const std::vector<Index>& assignment,
                   Index num_clusters) {
    std::vector<Index> sizes(static_cast<std::size_t>(num_clusters), 0);
    for (Index id : assignment) ++sizes[static_cast<std::size_t>(id)];

    // Sum of cross-cluster weights per (k, l) pair, k < l. Each undirected
    // edge is visited once via i < j.
    std::map<std::pair<Index, Index>, double> cross;
    for (Index i = 0; i < g.n; ++i) {
        const Index k = assignment[static_cast<std::size_t>(i)];
        for (Index e = g.row_ptr[static_cast<std::size_t>(i)];
             e < g.row_ptr[static_cast<std::size_t>(i) + 1]; ++e) {
            const Index j = g.col_idx[static_cast<std::size_t>(e)];
            if (j <= i) continue;
            const Index l = assignment[static_cast<std::size_t>(j)];
            if (k == l) continue;
            cross[{std::min(k, l), std::max(k, l)}] +=
                g.weights[static_cast<std::size_t>(e)];
        }
    }

    std::vector<std::pair<std::pair<Index, Index>, double>> entries;
    entries.reserve(cross.size());
    for (const auto& [key, sum] : cross) {
        const double denom =
            static_cast<double>(sizes[static_cast<std::size_t>(key.first)]) *
            static_cast<double>(sizes[static_cast<std::size_t>(key.second)]);
        entries.push_back({key, sum / denom});
    }
    return LayerGraph::from_entries(num_clusters, entries);
}

ClusterHierarchy build_hierarchy(const SparseSymGraph& g) {
    ClusterHierarchy h;
    h.base_n = g.num_nodes();
    LayerGraph current = LayerGraph::from_graph(g);
    while (current.n > 1) {
        HierarchyLayer layer;
        layer.assignment = partition_with_stall(current, layer.num_clusters);
        layer.coarse = coarsen(current, layer.assignment, layer.num_clusters);
        current = layer.coarse;
        h.layers.push_back(std::move(layer));
    }
    return h;
}

std::vector<Index> ClusterHierarchy::partition_sizes() const {
    std::vector<Index> sizes;
    sizes.reserve(layers.size());
    for (const auto& layer : layers) sizes.push_back(layer.num_clusters);
    return sizes;
}

std::vector<Index> ClusterHierarchy::base_assignment(std::size_t l) const {
    std::vector<Index> labels = layers.front().assignment;
    for (std::size_t t = 1; t <= l; ++t)
        for (Index& id : labels)
            id = layers[t].assignment[static_cast<std::size_t>(id)];
    return labels;
}

std::vector<Index> refine(const LayerGraph& similarity, Index target) {
    const Index n = similarity.n;
    if (target > n) throw TargetTooLarge(target, n);

    // Dense working copy; refinement layers are small by construction.
    std::vector<std::vector<double>> s(
        static_cast<std::size_t>(n),
        std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (Index i = 0; i < n; ++i)
        for (Index e = similarity.row_ptr[static_cast<std::size_t>(i)];
             e < similarity.row_ptr[static_cast<std::size_t>(i) + 1]; ++e)
            s[static_cast<std::size_t>(i)]
             [static_cast<std::size_t>(similarity.col_idx[static_cast<std::size_t>(e)])] =
                 similarity.weights[static_cast<std::size_t>(e)];

    std::vector<bool> active(static_cast<std::size_t>(n), true);
    std::vector<Index> merged_into(static_cast<std::size_t>(n), -1);

    for (Index step = 0; step < n - target; ++step) {
        Index bu = -1, bv = -1;
        double best = -1.0;
        for (Index u = 0; u < n; ++u) {
            if (!active[static_cast<std::size_t>(u)]) continue;
            for (Index v = u + 1; v < n; ++v) {
                if (!active[static_cast<std::size_t>(v)]) continue;
                if (s[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > best) {
                    best = s[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                    bu = u;
                    bv = v;
                }
            }
        }
        // a_iu <- (a_iu + a_iv) / 2, missing entries count as 0.
        for (Index i = 0; i < n; ++i) {
            if (!active[static_cast<std::size_t>(i)] || i == bu || i == bv) continue;
            const double avg = (s[static_cast<std::size_t>(i)][static_cast<std::size_t>(bu)] +
                                s[static_cast<std::size_t>(i)][static_cast<std::size_t>(bv)]) /
                               2.0;
            s[static_cast<std::size_t>(i)][static_cast<std::size_t>(bu)] = avg;
            s[static_cast<std::size_t>(bu)][static_cast<std::size_t>(i)] = avg;
        }
        active[static_cast<std::size_t>(bv)] = false;
        merged_into[static_cast<std::size_t>(bv)] = bu;
    }

    std::vector<Index> labels(static_cast<std::size_t>(n));
    std::vector<Index> id_of_rep(static_cast<std::size_t>(n), -1);
    Index next = 0;
    for (Index i = 0; i < n; ++i) {
        Index rep = i;
        while (merged_into[static_cast<std::size_t>(rep)] >= 0)
            rep = merged_into[static_cast<std::size_t>(rep)];
        if (id_of_rep[static_cast<std::size_t>(rep)] < 0)
            id_of_rep[static_cast<std::size_t>(rep)] = next++;
        labels[static_cast<std::size_t>(i)] = id_of_rep[static_cast<std::size_t>(rep)];
    }
    return labels;
}

Labeling initialize(const ClusterHierarchy& h, Index c) {
    const auto sizes = h.partition_sizes();
    if (c < 1 || c > sizes.front()) throw TargetTooLarge(c, sizes.front());

    for (std::size_t l = 0; l < sizes.size(); ++l)
        if (sizes[l] == c)
            return Labeling::from_labels(h.base_assignment(l), c);

    // Tightest layer with |Gamma_l| > c (> |Gamma_{l+1}| by the scan order).
    std::size_t chosen = 0;
    for (std::size_t l = 0; l < sizes.size(); ++l)
        if (sizes[l] > c) chosen = l;
    const std::vector<Index> refined = refine(h.layers[chosen].coarse, c);
    std::vector<Index> labels = h.base_assignment(chosen);
    for (Index& id : labels) id = refined[static_cast<std::size_t>(id)];
    return Labeling::from_labels(labels, c);
}

Labeling initialize(const SparseSymGraph& g, Index c) {
    return initialize(build_hierarchy(g), c);
}

}  // namespace ncut
