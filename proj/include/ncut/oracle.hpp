#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ncut/graph.hpp"
#include "ncut/solver.hpp"

namespace ncut {
namespace oracle {

struct OracleResult {
    std::vector<Index> best_labels;
    double best_objective = 0.0;
    Index enumerated_count = 0;
};

/// Enumerates every surjective labeling (canonicalized by first-appearance
/// relabeling) and returns the objective maximum. Guarded by c^n <= 1e7.
OracleResult exhaustive_best(const SparseSymGraph& g, Index c);

/// True when no single-row relabeling (singleton clusters skipped)
/// improves the from-scratch objective by more than 1e-12. On failure the
/// second member holds the first violating (node, cluster).
std::pair<bool, std::optional<std::pair<Index, Index>>>
check_coordinatewise_optimal(const SparseSymGraph& g, const Labeling& lab);

}  // namespace oracle
}  // namespace ncut
