#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "ncut/matrix_market.hpp"
#include "ncut/synthetic.hpp"
#include "test_util.hpp"

using namespace ncut;

namespace {

std::filesystem::path tmp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("round trip reproduces CSR arrays exactly") {
    const auto path = tmp_file("ncut_mm_roundtrip.mtx");
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const SparseSymGraph g = gen_random_graph(15, 0.4, seed);
        write_matrix_market(g, path.string());
        const SparseSymGraph back = read_matrix_market(path.string());
        CHECK(back.row_ptr() == g.row_ptr());
        CHECK(back.col_idx() == g.col_idx());
        CHECK(back.weights() == g.weights());
    }
    std::filesystem::remove(path);
}

TEST_CASE("1-based diagonal entries load with the diagonal dropped") {
    const auto path = tmp_file("ncut_mm_diag.mtx");
    write_text(path,
               "%%MatrixMarket matrix coordinate real symmetric\n"
               "2 2 2\n"
               "1 1 3.0\n"
               "2 1 1.5\n");
    const SparseSymGraph g = read_matrix_market(path.string());
    CHECK(g.num_edges() == 1);
    CHECK(g.weight(0, 1) == 1.5);
    std::filesystem::remove(path);
}

TEST_CASE("symmetric kind mirrors lower-triangle entries") {
    const auto path = tmp_file("ncut_mm_lower.mtx");
    write_text(path,
               "%%MatrixMarket matrix coordinate real symmetric\n"
               "% a comment line\n"
               "3 3 2\n"
               "2 1 1.0\n"
               "3 2 0.5\n");
    const SparseSymGraph g = read_matrix_market(path.string());
    CHECK(g.weight(0, 1) == 1.0);
    CHECK(g.weight(1, 0) == 1.0);
    CHECK(g.weight(1, 2) == 0.5);
    std::filesystem::remove(path);
}

TEST_CASE("general kind requires exact symmetry") {
    const auto path = tmp_file("ncut_mm_asym.mtx");
    write_text(path,
               "%%MatrixMarket matrix coordinate real general\n"
               "2 2 2\n"
               "1 2 1.0\n"
               "2 1 0.9\n");
    CHECK_THROWS_AS(read_matrix_market(path.string()), AsymmetricInput);

    write_text(path,
               "%%MatrixMarket matrix coordinate real general\n"
               "2 2 2\n"
               "1 2 1.0\n"
               "2 1 1.0\n");
    const SparseSymGraph g = read_matrix_market(path.string());
    CHECK(g.weight(0, 1) == 1.0);
    std::filesystem::remove(path);
}

TEST_CASE("parse errors carry line numbers") {
    const auto path = tmp_file("ncut_mm_bad.mtx");
    write_text(path,
               "%%MatrixMarket matrix coordinate real symmetric\n"
               "2 2 1\n"
               "nonsense\n");
    try {
        read_matrix_market(path.string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    std::filesystem::remove(path);
}

TEST_CASE("isolated node in file is rejected") {
    const auto path = tmp_file("ncut_mm_isolated.mtx");
    write_text(path,
               "%%MatrixMarket matrix coordinate real symmetric\n"
               "3 3 1\n"
               "2 1 1.0\n");
    CHECK_THROWS_AS(read_matrix_market(path.string()), IsolatedNode);
    std::filesystem::remove(path);
}
