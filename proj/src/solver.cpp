#include "ncut/solver.hpp"

#include <algorithm>
#include <cmath>

namespace ncut {

Labeling Labeling::from_labels(std::vector<Index> labels, Index c,
                               bool require_nonempty) {
    if (c < 1) throw EmptyCluster(0);
    Labeling lab;
    lab.labels = std::move(labels);
    lab.c = c;
    lab.sizes.assign(static_cast<std::size_t>(c), 0);
    for (Index id : lab.labels) {
        if (id < 0 || id >= c) throw InvalidIndex(id, c);
        ++lab.sizes[static_cast<std::size_t>(id)];
    }
    if (require_nonempty)
        for (Index k = 0; k < c; ++k)
            if (lab.sizes[static_cast<std::size_t>(k)] == 0) throw EmptyCluster(k);
    return lab;
}

double ncut_objective(const SparseSymGraph& g, const Labeling& lab) {
    std::vector<double> intra(static_cast<std::size_t>(lab.c), 0.0);
    std::vector<double> volume(static_cast<std::size_t>(lab.c), 0.0);
    for (Index i = 0; i < g.num_nodes(); ++i) {
        const auto k = static_cast<std::size_t>(lab.labels[static_cast<std::size_t>(i)]);
        volume[k] += g.degree(i);
        auto [cols, ws] = g.neighbors(i);
        for (std::size_t e = 0; e < cols.size(); ++e)
            if (lab.labels[static_cast<std::size_t>(cols[e])] ==
                lab.labels[static_cast<std::size_t>(i)])
                intra[k] += ws[e];
    }
    double obj = 0.0;
    for (std::size_t k = 0; k < intra.size(); ++k)
        if (volume[k] > 0.0) obj += intra[k] / volume[k];
    return obj;
}

SolverState init_state(const SparseSymGraph& g, const Labeling& lab) {
    const auto c = static_cast<std::size_t>(lab.c);
    SolverState st;
    st.intra.assign(c, 0.0);
    st.volume.assign(c, 0.0);
    st.sizes.assign(c, 0);
    for (Index i = 0; i < g.num_nodes(); ++i) {
        const auto k = static_cast<std::size_t>(lab.labels[static_cast<std::size_t>(i)]);
        ++st.sizes[k];
        st.volume[k] += g.degree(i);
        auto [cols, ws] = g.neighbors(i);
        for (std::size_t e = 0; e < cols.size(); ++e)
            if (lab.labels[static_cast<std::size_t>(cols[e])] ==
                lab.labels[static_cast<std::size_t>(i)])
                st.intra[k] += ws[e];
    }
    for (Index k = 0; k < lab.c; ++k)
        if (st.sizes[static_cast<std::size_t>(k)] == 0) throw EmptyCluster(k);
    st.objective = 0.0;
    for (std::size_t k = 0; k < c; ++k)
        if (st.volume[k] > 0.0) st.objective += st.intra[k] / st.volume[k];
    return st;
}

void cluster_affinity(const SparseSymGraph& g, const Labeling& lab, Index m,
                      std::vector<double>& b, double& d_mm) {
    b.assign(static_cast<std::size_t>(lab.c), 0.0);
    auto [cols, ws] = g.neighbors(m);
    for (std::size_t e = 0; e < cols.size(); ++e)
        b[static_cast<std::size_t>(lab.labels[static_cast<std::size_t>(cols[e])])] += ws[e];
    d_mm = g.degree(m);
}

void score_candidates(const SolverState& state, const std::vector<double>& b,
                      double d_mm, Index p, std::vector<double>& scores) {
    const auto c = state.intra.size();
    scores.resize(c);
    const auto pu = static_cast<std::size_t>(p);
    for (std::size_t k = 0; k < c; ++k) {
        if (static_cast<Index>(k) == p) {
            // Gain of keeping m in p, relative to removing it.
            scores[k] = state.intra[pu] / state.volume[pu] -
                        (state.intra[pu] - 2.0 * b[pu]) / (state.volume[pu] - d_mm);
        } else {
            const double old_term =
                state.volume[k] > 0.0 ? state.intra[k] / state.volume[k] : 0.0;
            scores[k] =
                (state.intra[k] + 2.0 * b[k]) / (state.volume[k] + d_mm) - old_term;
        }
    }
}

void apply_move(SolverState& state, Labeling& lab, Index m, Index p, Index r,
                const std::vector<double>& b, double d_mm, double delta) {
    const auto pu = static_cast<std::size_t>(p);
    const auto ru = static_cast<std::size_t>(r);
    state.intra[ru] += 2.0 * b[ru];
    state.volume[ru] += d_mm;
    state.intra[pu] -= 2.0 * b[pu];
    state.volume[pu] -= d_mm;
    ++state.sizes[ru];
    --state.sizes[pu];
    ++lab.sizes[ru];
    --lab.sizes[pu];
    lab.labels[static_cast<std::size_t>(m)] = r;
    state.objective += delta;
}

namespace {

struct SweepHooks {
    const SolverConfig* config = nullptr;
    std::vector<MoveRecord>* move_log = nullptr;
    double* max_rel_error = nullptr;
};

Index sweep_impl(const SparseSymGraph& g, SolverState& state, Labeling& lab,
                 const SweepHooks& hooks) {
    Index moves = 0;
    std::vector<double> b;
    std::vector<double> scores;
    double d_mm = 0.0;
    for (Index m = 0; m < g.num_nodes(); ++m) {
        const Index p = lab.labels[static_cast<std::size_t>(m)];
        if (lab.sizes[static_cast<std::size_t>(p)] == 1) continue;  // keep cluster alive
        cluster_affinity(g, lab, m, b, d_mm);
        score_candidates(state, b, d_mm, p, scores);
        // Argmax with ties broken toward p, then the lowest index.
        Index r = p;
        double best = scores[static_cast<std::size_t>(p)];
        for (Index k = 0; k < lab.c; ++k) {
            if (k == p) continue;
            if (scores[static_cast<std::size_t>(k)] > best) {
                best = scores[static_cast<std::size_t>(k)];
                r = k;
            }
        }
        if (r == p) continue;
        const double delta =
            scores[static_cast<std::size_t>(r)] - scores[static_cast<std::size_t>(p)];
        apply_move(state, lab, m, p, r, b, d_mm, delta);
        ++moves;
        if (hooks.move_log) hooks.move_log->push_back({m, p, r, delta});
        if (hooks.max_rel_error) {
            const SolverState fresh = init_state(g, lab);
            for (Index k = 0; k < lab.c; ++k) {
                const auto ku = static_cast<std::size_t>(k);
                const double si = std::abs(fresh.intra[ku]) > 0.0
                                      ? std::abs(state.intra[ku] - fresh.intra[ku]) /
                                            std::abs(fresh.intra[ku])
                                      : std::abs(state.intra[ku]);
                const double sv = std::abs(state.volume[ku] - fresh.volume[ku]) /
                                  std::abs(fresh.volume[ku]);
                *hooks.max_rel_error = std::max({*hooks.max_rel_error, si, sv});
            }
        }
    }
    return moves;
}

}  // namespace

Index sweep(const SparseSymGraph& g, SolverState& state, Labeling& lab) {
    return sweep_impl(g, state, lab, {});
}

ClusterResult solve(const SparseSymGraph& g, const Labeling& initial,
                    const SolverConfig& config) {
    Labeling lab = initial;
    SolverState state = init_state(g, lab);

    ClusterResult result;
    result.c = lab.c;

    SweepHooks hooks;
    hooks.config = &config;
    if (config.record_moves) hooks.move_log = &result.move_log;
    if (config.validate_moves) hooks.max_rel_error = &result.max_validation_rel_error;

    constexpr double kEps = 1e-300;
    double prev = state.objective;
    for (Index t = 0; t < config.max_outer; ++t) {
        const Index moves = sweep_impl(g, state, lab, hooks);
        result.trace.push_back(state.objective);
        result.moves.push_back(moves);
        result.total_moves += moves;
        ++result.sweeps;
        if (moves == 0) break;
        if ((state.objective - prev) / std::max(prev, kEps) < config.rel_tol) break;
        prev = state.objective;
    }

    result.labels = std::move(lab.labels);
    result.objective = state.objective;
    return result;
}

}  // namespace ncut
