#pragma once

#include "nervepool/matrix.hpp"
#include "nervepool/simplicial_complex.hpp"

namespace nervepool {

// Incidence matrix between (p-1)- and p-simplices. Non-oriented entries are
// in {0,1}; oriented entries in {-1,0,1} with sign (-1)^i for removal of the
// i-th vertex of the sorted list. B_0 has no rows.
struct BoundaryMatrix {
    int p = 0;
    bool oriented = false;
    SparseMatrix matrix;
};

enum class AdjacencyKind { upper, lower };

struct AdjacencyMatrix {
    int p = 0;
    AdjacencyKind kind = AdjacencyKind::upper;
    bool normalized = false;
    SparseMatrix matrix;
};

BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int p, bool oriented);

// A_up,p = B_{p+1} B_{p+1}^T from the (p+1)-boundary matrix, optionally
// normalized as |D_p - B_{p+1} B_{p+1}^T| with D_p the diagonal of row sums
// of the non-oriented B_{p+1}.
AdjacencyMatrix upper_adjacency(const BoundaryMatrix& b_next, bool normalized);
// Convenience form; returns the zero matrix when p equals dim(K).
AdjacencyMatrix upper_adjacency(const SimplicialComplex& k, int p, bool normalized);

// A_low,p = B_p^T B_p.
AdjacencyMatrix lower_adjacency(const BoundaryMatrix& b);

}  // namespace nervepool
