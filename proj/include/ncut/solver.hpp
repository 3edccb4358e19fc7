#pragma once

#include <cstdint>
#include <vector>

#include "ncut/graph.hpp"

namespace ncut {

/// Cluster assignment: labels[i] in [0, c), with per-cluster sizes.
struct Labeling {
    std::vector<Index> labels;
    Index c = 0;
    std::vector<Index> sizes;

    /// Validates ranges and computes sizes. Throws EmptyCluster if
    /// require_nonempty and some id in [0, c) is unused.
    static Labeling from_labels(std::vector<Index> labels, Index c,
                                bool require_nonempty = true);

    Index n() const { return static_cast<Index>(labels.size()); }
};

/// Per-cluster scalar aggregates maintained by the solver:
///   intra[k] = y_k' A y_k  (twice the intra-cluster edge weight)
///   volume[k] = y_k' D y_k (sum of member degrees)
struct SolverState {
    std::vector<double> intra;
    std::vector<double> volume;
    std::vector<Index> sizes;
    double objective = 0.0;

    double term(Index k) const {
        // 0/0 -> 0 convention for empty clusters.
        return volume[static_cast<std::size_t>(k)] > 0.0
                   ? intra[static_cast<std::size_t>(k)] /
                         volume[static_cast<std::size_t>(k)]
                   : 0.0;
    }
};

struct SolverConfig {
    Index max_outer = 100;
    double rel_tol = 1e-9;
    /// Recompute aggregates from scratch after every accepted move and
    /// record the worst relative deviation (slow; for verification).
    bool validate_moves = false;
    /// Record (node, from, to, delta) for every accepted move.
    bool record_moves = false;
};

struct MoveRecord {
    Index node;
    Index from;
    Index to;
    double delta;  // L(to) - L(from)
};

struct ClusterResult {
    std::vector<Index> labels;
    Index c = 0;
    double objective = 0.0;
    std::vector<double> trace;       // objective after each sweep
    std::vector<Index> moves;        // accepted moves per sweep
    Index sweeps = 0;
    Index total_moves = 0;
    std::vector<MoveRecord> move_log;          // when record_moves
    double max_validation_rel_error = 0.0;     // when validate_moves
};

/// Objective value sum_k (y_k' A y_k)/(y_k' D y_k), evaluated from scratch.
double ncut_objective(const SparseSymGraph& g, const Labeling& lab);

/// Computes aggregates from scratch. Throws EmptyCluster.
SolverState init_state(const SparseSymGraph& g, const Labeling& lab);

/// b[k] = sum of weights from node m into cluster k; one row scan.
/// Returns the filled buffer (size c) by reference plus d_mm via out-param.
void cluster_affinity(const SparseSymGraph& g, const Labeling& lab, Index m,
                      std::vector<double>& b, double& d_mm);

/// Gain L(k) of moving node m (currently in p) to cluster k, for all k.
void score_candidates(const SolverState& state, const std::vector<double>& b,
                      double d_mm, Index p, std::vector<double>& scores);

/// Applies the accepted move m: p -> r via the constant-time aggregate
/// updates; b must come from cluster_affinity for row m.
void apply_move(SolverState& state, Labeling& lab, Index m, Index p, Index r,
                const std::vector<double>& b, double d_mm, double delta);

/// One full pass over rows 0..n-1. Returns the number of accepted moves.
/// Rows whose cluster has a single member are skipped.
Index sweep(const SparseSymGraph& g, SolverState& state, Labeling& lab);

/// Coordinate-descent maximization of the objective from the given labeling.
ClusterResult solve(const SparseSymGraph& g, const Labeling& initial,
                    const SolverConfig& config = {});

}  // namespace ncut
