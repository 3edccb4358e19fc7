#pragma once

#include <vector>

#include "ncut/graph.hpp"
#include "ncut/solver.hpp"

namespace ncut {

/// Objective values and first differences over an ascending candidate list.
/// gaps[0] is anchored against the exact single-cluster objective of 1.
struct GapProfile {
    std::vector<Index> candidates;
    std::vector<double> objectives;
    std::vector<double> gaps;  // gaps[i] = J_i - J_{i-1}; gaps[0] = J_0 - 1
};

/// Runs initialize + solve per candidate and records the from-scratch
/// objective of the final labels.
GapProfile profile(const SparseSymGraph& g, const std::vector<Index>& candidates,
                   const SolverConfig& config = {});

/// Turnaround candidate: the c_i maximizing
/// (J_i - J_{i-1}) / max(J_{i+1} - J_i, 1e-12) with J_0 anchored at the
/// single-cluster value 1; the last candidate has no right gap and is
/// excluded. Ties go to the smallest c_i.
Index select(const GapProfile& p);

}  // namespace ncut
