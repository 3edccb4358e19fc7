#include "ncut/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ncut {

FeatureMatrix read_features_csv(const std::string& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    FeatureMatrix f;
    std::string line;
    Index lineno = 0;
    if (skip_header && std::getline(in, line)) ++lineno;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<double> row;
        std::istringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t consumed = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &consumed);
            } catch (const std::exception&) {
                throw ParseError(lineno, "invalid number '" + cell + "'");
            }
            if (cell.find_first_not_of(" \t\r", consumed) != std::string::npos)
                throw ParseError(lineno, "invalid number '" + cell + "'");
            if (!std::isfinite(v))
                throw ParseError(lineno, "non-finite feature value");
            row.push_back(v);
        }
        if (f.d == 0) {
            f.d = static_cast<Index>(row.size());
        } else if (static_cast<Index>(row.size()) != f.d) {
            throw ParseError(lineno, "expected " + std::to_string(f.d) +
                                         " columns, got " +
                                         std::to_string(row.size()));
        }
        f.values.insert(f.values.end(), row.begin(), row.end());
        ++f.n;
    }
    if (f.n < 2) throw ParseError(lineno, "need at least 2 samples");
    return f;
}

std::vector<std::vector<Neighbor>> knn_index(const FeatureMatrix& features,
                                             Index k) {
    const Index n = features.n;
    if (k < 1 || k > n - 1) throw KTooLarge(k, n);

    std::vector<std::vector<Neighbor>> result(static_cast<std::size_t>(n));
    std::vector<Neighbor> all(static_cast<std::size_t>(n - 1));
    for (Index i = 0; i < n; ++i) {
        std::size_t out = 0;
        for (Index j = 0; j < n; ++j) {
            if (j == i) continue;
            double d2 = 0.0;
            for (Index t = 0; t < features.d; ++t) {
                const double diff = features.at(i, t) - features.at(j, t);
                d2 += diff * diff;
            }
            all[out++] = {j, d2};
        }
        std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k),
                          all.end(), [](const Neighbor& a, const Neighbor& b) {
                              return a.distance != b.distance
                                         ? a.distance < b.distance
                                         : a.index < b.index;
                          });
        auto& nbrs = result[static_cast<std::size_t>(i)];
        nbrs.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
        for (Neighbor& nb : nbrs) nb.distance = std::sqrt(nb.distance);
    }
    return result;
}

SparseSymGraph self_tuning_affinity(const FeatureMatrix& features,
                                    Index k_graph, Index k_sigma) {
    const Index n = features.n;
    if (k_graph < 1 || k_graph > n - 1) throw KTooLarge(k_graph, n);
    if (k_sigma < 1 || k_sigma > n - 1) throw KTooLarge(k_sigma, n);

    const auto knn = knn_index(features, std::max(k_graph, k_sigma));

    std::vector<double> sigma(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        const double s =
            knn[static_cast<std::size_t>(i)][static_cast<std::size_t>(k_sigma - 1)]
                .distance;
        if (s == 0.0) throw ZeroSigma(i);
        sigma[static_cast<std::size_t>(i)] = s;
    }

    // The kernel is symmetric in (i, j), so a pair present in both kNN
    // lists contributes the same value twice; averaging reduces to
    // halving one-sided entries.
    std::map<std::pair<Index, Index>, std::pair<double, int>> pairs;
    for (Index i = 0; i < n; ++i) {
        for (Index t = 0; t < k_graph; ++t) {
            const Neighbor& nb =
                knn[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            const double w = std::exp(-(nb.distance * nb.distance) /
                                      (sigma[static_cast<std::size_t>(i)] *
                                       sigma[static_cast<std::size_t>(nb.index)]));
            auto& slot = pairs[{std::min(i, nb.index), std::max(i, nb.index)}];
            slot.first = w;
            ++slot.second;
        }
    }

    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [key, slot] : pairs)
        edges.push_back({key.first, key.second,
                         slot.second == 2 ? slot.first : slot.first / 2.0});
    return SparseSymGraph::from_edges(n, edges);
}

}  // namespace ncut
