#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncut/features.hpp"
#include "ncut/graph.hpp"
#include "ncut/matrix_market.hpp"
#include "ncut/metrics.hpp"
#include "ncut/model_select.hpp"
#include "ncut/n2hi.hpp"
#include "ncut/solver.hpp"
#include "ncut/synthetic.hpp"

namespace {

using namespace ncut;

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

std::vector<Index> read_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::vector<Index> labels;
    std::string line;
    Index lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            labels.push_back(std::stoll(line));
        } catch (const std::exception&) {
            throw ParseError(lineno, "invalid label '" + line + "'");
        }
    }
    return labels;
}

void write_labels_file(const std::vector<Index>& labels, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot open " + path + " for writing");
    for (Index id : labels) out << id << "\n";
}

void write_result_json(const ClusterResult& result, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot open " + path + " for writing");
    out << "{\"labels\":[";
    for (std::size_t i = 0; i < result.labels.size(); ++i) {
        if (i) out << ",";
        out << result.labels[i];
    }
    out << "],\"objective\":" << fmt(result.objective)
        << ",\"sweeps\":" << result.sweeps << ",\"moves\":[";
    for (std::size_t i = 0; i < result.moves.size(); ++i) {
        if (i) out << ",";
        out << result.moves[i];
    }
    out << "]}\n";
}

int cmd_build_graph(const std::string& features_path, Index k, Index k_sigma,
                    bool skip_header, const std::string& out_path) {
    const FeatureMatrix features = read_features_csv(features_path, skip_header);
    const SparseSymGraph g = self_tuning_affinity(features, k, k_sigma);
    write_matrix_market(g, out_path);
    const double density =
        static_cast<double>(g.num_edges()) /
        (static_cast<double>(g.num_nodes()) * static_cast<double>(g.num_nodes() - 1) / 2.0);
    std::fprintf(stderr, "n=%" PRId64 " |E|=%" PRId64 " density=%s\n",
                 g.num_nodes(), g.num_edges(), fmt(density).c_str());
    return 0;
}

int cmd_cluster(const std::string& graph_path, Index c, const std::string& init,
                double tol, Index max_outer, const std::string& out_path,
                const std::string& trace_path) {
    const SparseSymGraph g = read_matrix_market(graph_path);
    Labeling initial = [&] {
        if (init == "n2hi") return initialize(g, c);
        if (init.rfind("file:", 0) == 0) {
            auto labels = read_labels_file(init.substr(5));
            if (static_cast<Index>(labels.size()) != g.num_nodes())
                throw LengthMismatch(static_cast<Index>(labels.size()), g.num_nodes());
            return Labeling::from_labels(std::move(labels), c);
        }
        throw CLI::ValidationError("--init must be n2hi or file:<path>");
    }();

    SolverConfig config;
    config.rel_tol = tol;
    config.max_outer = max_outer;
    const ClusterResult result = solve(g, initial, config);
    write_result_json(result, out_path);
    if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        if (!trace) throw ParseError(0, "cannot open " + trace_path + " for writing");
        trace << "sweep,objective,moves\n";
        for (std::size_t t = 0; t < result.trace.size(); ++t)
            trace << (t + 1) << "," << fmt(result.trace[t]) << ","
                  << result.moves[t] << "\n";
    }
    return 0;
}

int cmd_estimate_c(const std::string& graph_path, Index min_c, Index max_c,
                   const std::string& out_path) {
    if (max_c - min_c + 1 < 3) throw TooFewCandidates(max_c - min_c + 1);
    const SparseSymGraph g = read_matrix_market(graph_path);
    std::vector<Index> candidates;
    for (Index c = min_c; c <= max_c; ++c) candidates.push_back(c);
    const GapProfile p = profile(g, candidates);
    std::ofstream out(out_path);
    if (!out) throw ParseError(0, "cannot open " + out_path + " for writing");
    out << "c,objective,gap\n";
    for (std::size_t i = 0; i < p.candidates.size(); ++i)
        out << p.candidates[i] << "," << fmt(p.objectives[i]) << ","
            << fmt(p.gaps[i]) << "\n";
    std::printf("%" PRId64 "\n", select(p));
    return 0;
}

int cmd_eval(const std::string& pred_path, const std::string& truth_path) {
    const auto pred = read_labels_file(pred_path);
    const auto truth = read_labels_file(truth_path);
    std::printf("{\"acc\":%s,\"nmi\":%s,\"ari\":%s}\n",
                fmt(accuracy(pred, truth)).c_str(), fmt(nmi(pred, truth)).c_str(),
                fmt(ari(pred, truth)).c_str());
    return 0;
}

int cmd_gen_blocks(Index blocks, Index block_size, double noise_density,
                   std::uint64_t seed, const std::string& out_path,
                   const std::string& truth_path) {
    const LabeledGraph data = gen_blocks(blocks, block_size, noise_density, seed);
    write_matrix_market(data.graph, out_path);
    if (!truth_path.empty()) write_labels_file(data.truth, truth_path);
    return 0;
}

int cmd_gen_circles(Index per_circle, Index noise, std::uint64_t seed,
                    const std::string& out_path, const std::string& truth_path) {
    const LabeledFeatures data = gen_circles(per_circle, noise, seed);
    std::ofstream out(out_path);
    if (!out) throw ParseError(0, "cannot open " + out_path + " for writing");
    for (Index i = 0; i < data.features.n; ++i)
        out << fmt(data.features.at(i, 0)) << "," << fmt(data.features.at(i, 1))
            << "\n";
    if (!truth_path.empty()) write_labels_file(data.truth, truth_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Normalized-Cut clustering via coordinate descent"};
    app.require_subcommand(1);

    std::string features_path, graph_path, out_path, trace_path, truth_path;
    std::string pred_path, init = "n2hi";
    Index k = 10, k_sigma = 7, c = 2, min_c = 2, max_c = 9;
    Index max_outer = 100, blocks = 5, block_size = 100, per_circle = 200,
          noise = 0;
    double tol = 1e-9, noise_density = 0.02;
    std::uint64_t seed = 0;
    bool skip_header = false;

    auto* build = app.add_subcommand("build-graph",
                                     "Self-tuning kNN affinity graph from CSV features");
    build->add_option("--features", features_path)->required();
    build->add_option("--k", k, "neighbors per node");
    build->add_option("--k-sigma", k_sigma, "bandwidth neighbor rank");
    build->add_flag("--skip-header", skip_header);
    build->add_option("--out", out_path)->required();

    auto* cluster = app.add_subcommand("cluster", "Cluster a Matrix Market graph");
    cluster->add_option("--graph", graph_path)->required();
    cluster->add_option("--c", c)->required();
    cluster->add_option("--init", init, "n2hi or file:<labels>");
    cluster->add_option("--tol", tol);
    cluster->add_option("--max-outer", max_outer);
    cluster->add_option("--out", out_path)->required();
    cluster->add_option("--trace", trace_path);

    auto* estimate = app.add_subcommand("estimate-c",
                                        "Cluster-count estimate via objective gaps");
    estimate->add_option("--graph", graph_path)->required();
    estimate->add_option("--min", min_c)->required();
    estimate->add_option("--max", max_c)->required();
    estimate->add_option("--out", out_path)->required();

    auto* eval = app.add_subcommand("eval", "ACC/NMI/ARI between label files");
    eval->add_option("--pred", pred_path)->required();
    eval->add_option("--truth", truth_path)->required();

    auto* gen_b = app.add_subcommand("gen-blocks", "Synthetic block graph");
    gen_b->add_option("--blocks", blocks);
    gen_b->add_option("--block-size", block_size);
    gen_b->add_option("--noise-density", noise_density);
    gen_b->add_option("--seed", seed);
    gen_b->add_option("--out", out_path)->required();
    gen_b->add_option("--truth", truth_path);

    auto* gen_c = app.add_subcommand("gen-circles", "Two-circle feature set");
    gen_c->add_option("--per-circle", per_circle);
    gen_c->add_option("--noise", noise);
    gen_c->add_option("--seed", seed);
    gen_c->add_option("--out", out_path)->required();
    gen_c->add_option("--truth", truth_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed())
            return cmd_build_graph(features_path, k, k_sigma, skip_header, out_path);
        if (cluster->parsed())
            return cmd_cluster(graph_path, c, init, tol, max_outer, out_path,
                               trace_path);
        if (estimate->parsed())
            return cmd_estimate_c(graph_path, min_c, max_c, out_path);
        if (eval->parsed()) return cmd_eval(pred_path, truth_path);
        if (gen_b->parsed())
            return cmd_gen_blocks(blocks, block_size, noise_density, seed,
                                  out_path, truth_path);
        if (gen_c->parsed())
            return cmd_gen_circles(per_circle, noise, seed, out_path, truth_path);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const LengthMismatch& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInput;
    } catch (const std::runtime_error& e) {
        // Domain errors: ZeroSigma, IsolatedNode, EmptyCluster,
        // TargetTooLarge, TooFewCandidates, ...
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitDomain;
    }
    return 0;
}
