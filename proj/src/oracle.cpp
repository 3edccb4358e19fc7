#include "ncut/oracle.hpp"

#include <cmath>

namespace ncut {
namespace oracle {

namespace {

void enumerate(const SparseSymGraph& g, Index c, std::vector<Index>& labels,
               Index pos, Index max_used, OracleResult& out) {
    const Index n = g.num_nodes();
    if (pos == n) {
        if (max_used != c - 1) return;  // some cluster unused
        ++out.enumerated_count;
        const double obj =
            ncut_objective(g, Labeling::from_labels(labels, c, false));
        if (obj > out.best_objective) {
            out.best_objective = obj;
            out.best_labels = labels;
        }
        return;
    }
    // Canonical form: labels[pos] never exceeds max_used + 1, which kills
    // label permutations without losing any partition.
    const Index limit = std::min(max_used + 1, c - 1);
    for (Index k = 0; k <= limit; ++k) {
        labels[static_cast<std::size_t>(pos)] = k;
        enumerate(g, c, labels, pos + 1, std::max(max_used, k), out);
    }
}

}  // namespace

OracleResult exhaustive_best(const SparseSymGraph& g, Index c) {
    const Index n = g.num_nodes();
    double budget = 1.0;
    for (Index i = 0; i < n; ++i) {
        budget *= static_cast<double>(c);
        if (budget > 1e7) throw InstanceTooLarge();
    }
    OracleResult out;
    out.best_objective = -1.0;
    std::vector<Index> labels(static_cast<std::size_t>(n), 0);
    enumerate(g, c, labels, 1, 0, out);  // labels[0] == 0 canonically
    return out;
}

std::pair<bool, std::optional<std::pair<Index, Index>>>
check_coordinatewise_optimal(const SparseSymGraph& g, const Labeling& lab) {
    const double base = ncut_objective(g, lab);
    Labeling trial = lab;
    for (Index m = 0; m < g.num_nodes(); ++m) {
        const Index p = lab.labels[static_cast<std::size_t>(m)];
        if (lab.sizes[static_cast<std::size_t>(p)] == 1) continue;
        for (Index k = 0; k < lab.c; ++k) {
            if (k == p) continue;
            trial.labels[static_cast<std::size_t>(m)] = k;
            const double obj = ncut_objective(g, trial);
            if (obj > base + 1e-12)
                return {false, std::make_pair(m, k)};
        }
        trial.labels[static_cast<std::size_t>(m)] = p;
    }
    return {true, std::nullopt};
}

}  // namespace oracle
}  // namespace ncut
