#include "ncut/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

namespace ncut {

namespace {

std::vector<Index> compact(std::span<const Index> labels, Index& count) {
    std::unordered_map<Index, Index> remap;
    std::vector<Index> out;
    out.reserve(labels.size());
    for (Index id : labels) {
        auto [it, inserted] = remap.try_emplace(id, static_cast<Index>(remap.size()));
        out.push_back(it->second);
    }
    count = static_cast<Index>(remap.size());
    return out;
}

// Hungarian method (potentials formulation) for a square min-cost
// assignment; returns the optimal total cost.
long long hungarian(const std::vector<std::vector<long long>>& cost) {
    const auto n = cost.size();
    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0);  // column -> row (1-based)
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        std::vector<std::size_t> way(n + 1, 0);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            long long delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    long long total = 0;
    for (std::size_t j = 1; j <= n; ++j)
        if (match[j] != 0) total += cost[match[j] - 1][j - 1];
    return total;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

Contingency Contingency::build(std::span<const Index> pred,
                               std::span<const Index> truth) {
    if (pred.size() != truth.size())
        throw LengthMismatch(static_cast<Index>(pred.size()),
                             static_cast<Index>(truth.size()));
    Index r = 0, s = 0;
    const auto p = compact(pred, r);
    const auto t = compact(truth, s);
    Contingency c;
    c.n = static_cast<Index>(pred.size());
    c.table.assign(static_cast<std::size_t>(r),
                   std::vector<Index>(static_cast<std::size_t>(s), 0));
    c.row_sums.assign(static_cast<std::size_t>(r), 0);
    c.col_sums.assign(static_cast<std::size_t>(s), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        ++c.table[static_cast<std::size_t>(p[i])][static_cast<std::size_t>(t[i])];
        ++c.row_sums[static_cast<std::size_t>(p[i])];
        ++c.col_sums[static_cast<std::size_t>(t[i])];
    }
    return c;
}

double accuracy(std::span<const Index> pred, std::span<const Index> truth) {
    const Contingency c = Contingency::build(pred, truth);
    const std::size_t dim = std::max(c.table.size(), c.col_sums.size());
    // Negated counts, zero-padded to square: min cost == -max matches.
    std::vector<std::vector<long long>> cost(dim, std::vector<long long>(dim, 0));
    for (std::size_t i = 0; i < c.table.size(); ++i)
        for (std::size_t j = 0; j < c.table[i].size(); ++j)
            cost[i][j] = -static_cast<long long>(c.table[i][j]);
    return static_cast<double>(-hungarian(cost)) / static_cast<double>(c.n);
}

double nmi(std::span<const Index> pred, std::span<const Index> truth) {
    const Contingency c = Contingency::build(pred, truth);
    const double n = static_cast<double>(c.n);
    double hu = 0.0, hv = 0.0, mi = 0.0;
    for (Index rs : c.row_sums)
        if (rs > 0) hu -= rs / n * std::log(rs / n);
    for (Index cs : c.col_sums)
        if (cs > 0) hv -= cs / n * std::log(cs / n);
    for (std::size_t i = 0; i < c.table.size(); ++i)
        for (std::size_t j = 0; j < c.table[i].size(); ++j) {
            const Index nij = c.table[i][j];
            if (nij == 0) continue;
            mi += nij / n *
                  std::log(nij * n /
                           (static_cast<double>(c.row_sums[i]) *
                            static_cast<double>(c.col_sums[j])));
        }
    if (hu <= 0.0 && hv <= 0.0) return 1.0;  // both single-cluster
    if (hu <= 0.0 || hv <= 0.0) return 0.0;
    const double value = mi / std::sqrt(hu * hv);
    return std::clamp(value, 0.0, 1.0);
}

double ari(std::span<const Index> pred, std::span<const Index> truth) {
    const Contingency c = Contingency::build(pred, truth);
    double index = 0.0, row_pairs = 0.0, col_pairs = 0.0;
    for (const auto& row : c.table)
        for (Index nij : row) index += choose2(static_cast<double>(nij));
    for (Index rs : c.row_sums) row_pairs += choose2(static_cast<double>(rs));
    for (Index cs : c.col_sums) col_pairs += choose2(static_cast<double>(cs));
    const double total_pairs = choose2(static_cast<double>(c.n));
    const double expected = row_pairs * col_pairs / total_pairs;
    const double max_index = (row_pairs + col_pairs) / 2.0;
    if (max_index == expected) return 1.0;  // both partitions trivial
    return (index - expected) / (max_index - expected);
}

}  // namespace ncut
