#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "nervepool/boundary.hpp"
#include "nervepool/errors.hpp"
#include "nervepool/generators.hpp"

using namespace nervepool;

namespace {

int edge_index(const SimplicialComplex& k, const VertexId& a, const VertexId& b) {
    return *k.index_of(Simplex({a, b}));
}

int vertex_index(const SimplicialComplex& k, const VertexId& v) {
    return *k.index_of(Simplex({v}));
}

}  // namespace

TEST_CASE("non-oriented boundary matrices of the example complex") {
    const SimplicialComplex k = testing::example_complex();
    const BoundaryMatrix b1 = boundary_matrix(k, 1, false);
    CHECK(b1.matrix.rows() == 5);
    CHECK(b1.matrix.cols() == 6);

    // Each edge column has exactly its two endpoints set.
    const std::vector<std::pair<VertexId, VertexId>> edges = {
        {"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "v3"}, {"v0", "v4"},
    };
    for (const auto& [a, b] : edges) {
        const int col = edge_index(k, a, b);
        for (const VertexId& v : k.vertex_ids()) {
            const double expected = (v == a || v == b) ? 1.0 : 0.0;
            CHECK(b1.matrix.at(vertex_index(k, v), col) == expected);
        }
    }

    const BoundaryMatrix b2 = boundary_matrix(k, 2, false);
    CHECK(b2.matrix.rows() == 6);
    CHECK(b2.matrix.cols() == 1);
    for (const auto& [a, b] : edges) {
        const bool face = (a == "v1" && b == "v2") || (a == "v2" && b == "v3") ||
                          (a == "v1" && b == "v3");
        CHECK(b2.matrix.at(edge_index(k, a, b), 0) == (face ? 1.0 : 0.0));
    }

    const BoundaryMatrix b0 = boundary_matrix(k, 0, false);
    CHECK(b0.matrix.rows() == 0);
    CHECK(b0.matrix.cols() == 5);
    CHECK(b0.matrix.nnz() == 0);

    CHECK_THROWS_AS(boundary_matrix(k, 3, false), DimensionError);
}

TEST_CASE("oriented boundary matrices alternate signs down sorted vertex lists") {
    const SimplicialComplex k = testing::example_complex();
    const BoundaryMatrix b2 = boundary_matrix(k, 2, true);
    // Column (v1,v2,v3): +(v2,v3) -(v1,v3) +(v1,v2).
    CHECK(b2.matrix.at(edge_index(k, "v2", "v3"), 0) == 1.0);
    CHECK(b2.matrix.at(edge_index(k, "v1", "v3"), 0) == -1.0);
    CHECK(b2.matrix.at(edge_index(k, "v1", "v2"), 0) == 1.0);

    const BoundaryMatrix b1 = boundary_matrix(k, 1, true);
    const SparseMatrix composed = b1.matrix.multiply(b2.matrix);
    CHECK(composed.nnz() == 0);
}

TEST_CASE("chain complex identity on random complexes") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        const SimplicialComplex k = random_complex(seed, 12, 4, 0.6);
        for (int p = 2; p <= k.dim(); ++p) {
            const SparseMatrix lower = boundary_matrix(k, p - 1, true).matrix;
            const SparseMatrix upper = boundary_matrix(k, p, true).matrix;
            CAPTURE(seed);
            CAPTURE(p);
            CHECK(lower.multiply(upper).nnz() == 0);
        }
    }
}

TEST_CASE("boundary column sums") {
    const SimplicialComplex k = SimplicialComplex::from_maximal_simplices({{"a", "b", "c", "d"}});
    for (int p = 1; p <= k.dim(); ++p) {
        const SparseMatrix plain = boundary_matrix(k, p, false).matrix;
        const SparseMatrix oriented = boundary_matrix(k, p, true).matrix;
        std::vector<double> plain_sums(static_cast<std::size_t>(plain.cols()), 0.0);
        std::vector<double> oriented_sums(static_cast<std::size_t>(plain.cols()), 0.0);
        std::vector<int> nonzeros(static_cast<std::size_t>(plain.cols()), 0);
        for (const Triplet& t : plain.entries()) {
            plain_sums[static_cast<std::size_t>(t.col)] += t.value;
        }
        for (const Triplet& t : oriented.entries()) {
            oriented_sums[static_cast<std::size_t>(t.col)] += t.value;
            ++nonzeros[static_cast<std::size_t>(t.col)];
        }
        for (int c = 0; c < plain.cols(); ++c) {
            CHECK(plain_sums[static_cast<std::size_t>(c)] == p + 1);
            CHECK(nonzeros[static_cast<std::size_t>(c)] == p + 1);
            // Alternating signs cancel exactly when the column has an even
            // number of entries.
            CHECK(oriented_sums[static_cast<std::size_t>(c)] == (p % 2 == 1 ? 0.0 : 1.0));
        }
    }
}

TEST_CASE("upper adjacency of the example complex") {
    const SimplicialComplex k = testing::example_complex();
    const AdjacencyMatrix a1 = upper_adjacency(boundary_matrix(k, 2, false), false);
    CHECK(a1.p == 1);
    const std::vector<int> triangle_edges = {
        edge_index(k, "v1", "v2"), edge_index(k, "v2", "v3"), edge_index(k, "v1", "v3")};
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            const bool in_block =
                std::count(triangle_edges.begin(), triangle_edges.end(), i) == 1 &&
                std::count(triangle_edges.begin(), triangle_edges.end(), j) == 1;
            CHECK(a1.matrix.at(i, j) == (in_block ? 1.0 : 0.0));
        }
    }

    const AdjacencyMatrix a0 = upper_adjacency(boundary_matrix(k, 1, false), false);
    CHECK(a0.matrix.at(vertex_index(k, "v0"), vertex_index(k, "v0")) == 2.0);
    CHECK(a0.matrix.at(vertex_index(k, "v1"), vertex_index(k, "v1")) == 3.0);
    CHECK(a0.matrix.at(vertex_index(k, "v2"), vertex_index(k, "v2")) == 2.0);
    CHECK(a0.matrix.at(vertex_index(k, "v3"), vertex_index(k, "v3")) == 3.0);
    CHECK(a0.matrix.at(vertex_index(k, "v4"), vertex_index(k, "v4")) == 2.0);

    // Top dimension has no cofaces.
    const AdjacencyMatrix top = upper_adjacency(k, 2, false);
    CHECK(top.matrix.nnz() == 0);

    // |D - B B^T| zeroes the diagonal of a binary boundary product.
    const AdjacencyMatrix normalized = upper_adjacency(boundary_matrix(k, 1, false), true);
    for (int i = 0; i < 5; ++i) {
        CHECK(normalized.matrix.at(i, i) == 0.0);
    }
    CHECK(normalized.matrix.at(vertex_index(k, "v0"), vertex_index(k, "v1")) == 1.0);
}

TEST_CASE("lower adjacency") {
    const SimplicialComplex k = testing::example_complex();
    const AdjacencyMatrix low = lower_adjacency(boundary_matrix(k, 1, false));
    // e0=(v0,v1) and e1=(v1,v2) share v1.
    CHECK(low.matrix.at(edge_index(k, "v0", "v1"), edge_index(k, "v1", "v2")) == 1.0);

    const AdjacencyMatrix low0 = lower_adjacency(boundary_matrix(k, 0, false));
    CHECK(low0.matrix.rows() == 5);
    CHECK(low0.matrix.nnz() == 0);

    const SimplicialComplex disjoint =
        SimplicialComplex::from_maximal_simplices({{"a", "b"}, {"c", "d"}});
    const AdjacencyMatrix low_disjoint = lower_adjacency(boundary_matrix(disjoint, 1, false));
    CHECK(low_disjoint.matrix.at(0, 1) == 0.0);
    CHECK(low_disjoint.matrix.at(1, 0) == 0.0);
}

TEST_CASE("adjacency matrices are symmetric") {
    for (std::uint64_t seed = 200; seed < 210; ++seed) {
        const SimplicialComplex k = random_complex(seed, 10, 3, 0.6);
        for (int p = 0; p < k.dim(); ++p) {
            const SparseMatrix up = upper_adjacency(k, p, false).matrix;
            CHECK(up == up.transpose());
        }
        for (int p = 0; p <= k.dim(); ++p) {
            const SparseMatrix low = lower_adjacency(boundary_matrix(k, p, false)).matrix;
            CHECK(low == low.transpose());
        }
    }
}

TEST_CASE("permutation commutes with non-oriented boundary construction") {
    for (std::uint64_t seed = 300; seed < 310; ++seed) {
        const SimplicialComplex k = random_complex(seed, 9, 3, 0.5);
        const std::map<VertexId, VertexId> perm = random_permutation(seed, k);
        const SimplicialComplex permuted = permute_vertices(k, perm);
        for (int p = 1; p <= k.dim(); ++p) {
            const SparseMatrix original = boundary_matrix(k, p, false).matrix;
            const SparseMatrix relabelled = boundary_matrix(permuted, p, false).matrix;
            // Row/column permutations induced by the relabelling.
            for (const Triplet& t : original.entries()) {
                std::vector<VertexId> row_verts;
                for (const VertexId& v :
                     k.simplices(p - 1)[static_cast<std::size_t>(t.row)].vertices()) {
                    row_verts.push_back(perm.at(v));
                }
                std::vector<VertexId> col_verts;
                for (const VertexId& v :
                     k.simplices(p)[static_cast<std::size_t>(t.col)].vertices()) {
                    col_verts.push_back(perm.at(v));
                }
                const int row = *permuted.index_of(Simplex(row_verts));
                const int col = *permuted.index_of(Simplex(col_verts));
                CHECK(relabelled.at(row, col) == t.value);
            }
            CHECK(original.nnz() == relabelled.nnz());
        }
    }
}
