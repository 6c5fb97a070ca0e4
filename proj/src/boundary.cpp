#include "nervepool/boundary.hpp"

#include <cmath>
#include <string>

#include "nervepool/errors.hpp"

namespace nervepool {

namespace {

SparseMatrix absolute_degree_difference(const SparseMatrix& adjacency,
                                        const std::vector<double>& degrees) {
    std::vector<Triplet> out;
    out.reserve(adjacency.nnz());
    for (const Triplet& t : adjacency.entries()) {
        const double value =
            t.row == t.col ? std::fabs(degrees[static_cast<std::size_t>(t.row)] - t.value)
                           : std::fabs(t.value);
        out.push_back({t.row, t.col, value});
    }
    return SparseMatrix::from_triplets(adjacency.rows(), adjacency.cols(), std::move(out))
        .pruned(1e-12);
}

}  // namespace

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int p, bool oriented) {
    if (p < 0 || p > k.dim()) {
        throw DimensionError("boundary dimension " + std::to_string(p) + " out of range 0.." +
                             std::to_string(k.dim()));
    }
    if (p == 0) {
        // No simplices of negative dimension to map down to.
        return {0, oriented, SparseMatrix(0, k.count(0))};
    }
    std::vector<Triplet> entries;
    const auto& columns = k.simplices(p);
    for (int j = 0; j < static_cast<int>(columns.size()); ++j) {
        const Simplex& s = columns[static_cast<std::size_t>(j)];
        for (int i = 0; i <= s.dim(); ++i) {
            const auto row = k.index_of(s.face_without(i));
            const double sign = oriented && (i % 2 == 1) ? -1.0 : 1.0;
            entries.push_back({*row, j, sign});
        }
    }
    return {p, oriented, SparseMatrix::from_triplets(k.count(p - 1), k.count(p), entries)};
}

AdjacencyMatrix upper_adjacency(const BoundaryMatrix& b_next, bool normalized) {
    if (b_next.p < 1) {
        throw DimensionError("upper adjacency requires a boundary matrix of dimension >= 1");
    }
    SparseMatrix raw = b_next.matrix.multiply(b_next.matrix.transpose());
    if (!normalized) {
        return {b_next.p - 1, AdjacencyKind::upper, false, std::move(raw)};
    }
    if (b_next.oriented) {
        throw MalformedInputError("normalized upper adjacency requires a non-oriented boundary");
    }
    return {b_next.p - 1, AdjacencyKind::upper, true,
            absolute_degree_difference(raw, b_next.matrix.row_sums())};
}

AdjacencyMatrix upper_adjacency(const SimplicialComplex& k, int p, bool normalized) {
    if (p < 0 || p > k.dim()) {
        throw DimensionError("adjacency dimension " + std::to_string(p) + " out of range");
    }
    if (p == k.dim()) {
        return {p, AdjacencyKind::upper, normalized, SparseMatrix(k.count(p), k.count(p))};
    }
    return upper_adjacency(boundary_matrix(k, p + 1, false), normalized);
}

AdjacencyMatrix lower_adjacency(const BoundaryMatrix& b) {
    return {b.p, AdjacencyKind::lower, false, b.matrix.transpose().multiply(b.matrix)};
}

}  // namespace nervepool
