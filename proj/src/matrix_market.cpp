#include "ncut/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace ncut {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

SparseSymGraph read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);

    std::string line;
    Index lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "empty file");
    ++lineno;
    std::istringstream header(line);
    std::string banner, object, format, field, kind;
    header >> banner >> object >> format >> field >> kind;
    if (banner != "%%MatrixMarket" || lower(object) != "matrix")
        throw ParseError(lineno, "not a MatrixMarket matrix header");
    if (lower(format) != "coordinate")
        throw ParseError(lineno, "only coordinate format is supported");
    if (lower(field) != "real" && lower(field) != "integer")
        throw ParseError(lineno, "only real-valued matrices are supported");
    kind = lower(kind);
    const bool symmetric_kind = kind == "symmetric";
    if (!symmetric_kind && kind != "general")
        throw ParseError(lineno, "unsupported kind '" + kind + "'");

    Index rows = 0, cols = 0, nnz = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream sz(line);
        if (!(sz >> rows >> cols >> nnz)) throw ParseError(lineno, "bad size line");
        break;
    }
    if (rows <= 0 || rows != cols)
        throw ParseError(lineno, "expected a square matrix");

    std::vector<Edge> raw;
    raw.reserve(static_cast<std::size_t>(nnz));
    Index seen = 0;
    while (seen < nnz) {
        if (!std::getline(in, line)) throw ParseError(lineno, "unexpected end of file");
        ++lineno;
        if (!line.empty() && line[0] == '%') continue;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream entry(line);
        Index i = 0, j = 0;
        double w = 0.0;
        if (!(entry >> i >> j >> w)) throw ParseError(lineno, "bad entry line");
        if (i < 1 || i > rows || j < 1 || j > rows)
            throw ParseError(lineno, "index out of range");
        raw.push_back({i - 1, j - 1, w});
        ++seen;
    }

    if (symmetric_kind) {
        // One triangle stored; from_edges mirrors each undirected entry.
        return SparseSymGraph::from_edges(rows, raw);
    }

    // General kind: both triangles present. Validate exact symmetry, then
    // keep one representative per undirected pair.
    std::map<std::pair<Index, Index>, double> upper, lowert;
    std::vector<Edge> undirected;
    for (const Edge& e : raw) {
        if (e.i == e.j) {
            undirected.push_back(e);  // dropped by from_edges
            continue;
        }
        auto& side = e.i < e.j ? upper : lowert;
        side[{std::min(e.i, e.j), std::max(e.i, e.j)}] += e.w;
    }
    for (const auto& [key, w] : upper) {
        auto it = lowert.find(key);
        if (it == lowert.end() || it->second != w)
            throw AsymmetricInput(key.first, key.second);
        undirected.push_back({key.first, key.second, w});
    }
    for (const auto& [key, w] : lowert)
        if (!upper.contains(key)) throw AsymmetricInput(key.second, key.first);
    return SparseSymGraph::from_edges(rows, undirected);
}

void write_matrix_market(const SparseSymGraph& g, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw ParseError(0, "cannot open " + path + " for writing");
    std::fprintf(f, "%%%%MatrixMarket matrix coordinate real symmetric\n");
    std::fprintf(f, "%" PRId64 " %" PRId64 " %" PRId64 "\n", g.num_nodes(),
                 g.num_nodes(), g.num_edges());
    for (Index i = 0; i < g.num_nodes(); ++i) {
        auto [cols, ws] = g.neighbors(i);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (cols[k] > i) break;  // lower triangle only
            std::fprintf(f, "%" PRId64 " %" PRId64 " %.17g\n", i + 1,
                         cols[k] + 1, ws[k]);
        }
    }
    std::fclose(f);
}

}  // namespace ncut
