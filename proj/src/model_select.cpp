#include "ncut/model_select.hpp"

#include <algorithm>

#include "ncut/n2hi.hpp"

namespace ncut {

GapProfile profile(const SparseSymGraph& g, const std::vector<Index>& candidates,
                   const SolverConfig& config) {
    GapProfile p;
    p.candidates = candidates;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates[i] < 2 || (i > 0 && candidates[i] <= candidates[i - 1]))
            throw InvalidIndex(candidates[i], 0);
    }
    const ClusterHierarchy hierarchy = build_hierarchy(g);
    for (Index c : candidates) {
        const ClusterResult result = solve(g, initialize(hierarchy, c), config);
        p.objectives.push_back(ncut_objective(
            g, Labeling::from_labels(result.labels, result.c)));
    }
    p.gaps.assign(p.objectives.size(), 0.0);
    // A single cluster scores exactly 1 (1'A1 = 1'D1), so the first
    // candidate's gap is anchored against that known value.
    p.gaps[0] = p.objectives[0] - 1.0;
    for (std::size_t i = 1; i < p.objectives.size(); ++i)
        p.gaps[i] = p.objectives[i] - p.objectives[i - 1];
    return p;
}

Index select(const GapProfile& p) {
    const auto tau = p.candidates.size();
    if (tau < 3) throw TooFewCandidates(static_cast<Index>(tau));
    constexpr double kEps = 1e-12;
    Index best_c = p.candidates[0];
    double best_ratio = -1.0;
    for (std::size_t i = 0; i + 1 < tau; ++i) {
        const double ratio = p.gaps[i] / std::max(p.gaps[i + 1], kEps);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_c = p.candidates[i];
        }
    }
    return best_c;
}

}  // namespace ncut
