#pragma once

#include <string>

#include "ncut/graph.hpp"

namespace ncut {

/// Reads a Matrix Market coordinate real file (symmetric or general kind).
/// General-kind files must be exactly symmetric; diagonal entries are
/// dropped.
SparseSymGraph read_matrix_market(const std::string& path);

/// Writes the lower triangle as "coordinate real symmetric" with 1-based
/// indices. Weights are printed with round-trip precision so that
/// read(write(g)) reproduces g exactly.
void write_matrix_market(const SparseSymGraph& g, const std::string& path);

}  // namespace ncut
