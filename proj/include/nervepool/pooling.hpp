#pragma once

#include <string>
#include <vector>

#include "nervepool/cover.hpp"
#include "nervepool/matrix.hpp"
#include "nervepool/simplicial_complex.hpp"

namespace nervepool {

// Sorted tuple of cluster ids labelling a pooled simplex.
using ClusterTuple = std::vector<ClusterId>;

// Soft or hard assignment of vertices to clusters. Rows follow the canonical
// vertex order of the host complex; every row has at least one positive
// entry, and hard assignments have exactly one.
struct VertexAssignment {
    std::vector<VertexId> vertex_ids;
    std::vector<ClusterId> cluster_ids;
    SparseMatrix weights;  // n_0 x k, non-negative
    bool hard = false;

    static VertexAssignment create(const SimplicialComplex& k, std::vector<ClusterId> cluster_ids,
                                   const SparseMatrix& weights);

    struct Membership {
        VertexId vertex;
        ClusterId cluster;
        double weight = 1.0;
    };
    // Cluster columns ordered by first appearance in the record list.
    static VertexAssignment from_memberships(const SimplicialComplex& k,
                                             const std::vector<Membership>& records);
};

// One cluster per vertex, cluster id equal to the vertex token.
VertexAssignment singleton_assignment(const SimplicialComplex& k);

// The vertex cover read off the positive entries; all-zero columns are
// dropped (they correspond to clusters with no members).
VertexCover to_cover(const VertexAssignment& s0);

// Binary extension of the vertex assignment to all dimensions: blocks[q] is
// the n_q x k matrix whose (sigma, j) entry is 1 when some vertex of sigma
// has positive weight for cluster j. blocks[0] keeps the original weights.
struct DownBlocks {
    std::vector<ClusterId> cluster_ids;
    std::vector<SparseMatrix> blocks;
};

// Block lower-triangular assignment matrix. blocks[q][p] maps q-simplices of
// the input to pooled p-simplices, for p <= min(q, output_dim). Column p
// labels are shared by all blocks of that column.
struct BlockAssignment {
    int input_dim = -1;
    int output_dim = -1;
    std::vector<ClusterId> cluster_ids;
    std::vector<std::vector<ClusterTuple>> labels;  // labels[p], sorted, duplicate-free
    std::vector<std::vector<SparseMatrix>> blocks;  // blocks[q][p]
    bool normalized = false;

    const SparseMatrix& diagonal(int p) const;
    int pooled_count(int p) const;
};

struct FeatureMatrix {
    int p = 0;
    DenseMatrix values;  // n_p x d_p

    friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;
};

struct PooledResult {
    BlockAssignment assignment;                     // normalized
    std::vector<SparseMatrix> boundaries;           // [p] for 1..output_dim ([0] has no rows)
    std::vector<SparseMatrix> adjacency_raw;        // [p] for 0..output_dim
    std::vector<SparseMatrix> adjacency_normalized; // [p] for 0..output_dim
    std::vector<std::vector<ClusterTuple>> labels;  // labels[p]
    std::vector<FeatureMatrix> features;            // pooled features, when supplied

    int output_dim() const { return assignment.output_dim; }
    // Complex spanned by the pooled labels, with cluster ids as vertices.
    SimplicialComplex label_complex() const;
};

DownBlocks extend_down(const VertexAssignment& s0, const SimplicialComplex& k);

// Builds every S_{q,p} column as the entrywise product of the S_{q,0}
// columns of its clusters. Candidates whose diagonal-block column is zero
// are dropped from the output complex.
BlockAssignment extend_right(const DownBlocks& down, const SimplicialComplex& k);

// Scales every block-row to sum to 1.
BlockAssignment normalize_rows(const BlockAssignment& assignment);

// B_p' = (S_{p-1})^T |B_p| S_p for 1 <= p <= output_dim. Slot 0 holds the
// empty matrix with one column per pooled vertex.
std::vector<SparseMatrix> pool_boundaries(const SimplicialComplex& k,
                                          const BlockAssignment& assignment);

std::vector<SparseMatrix> pool_adjacency(const BlockAssignment& assignment,
                                         const std::vector<SparseMatrix>& boundaries,
                                         bool normalized);

// X_p' = (S_p)^T X_p.
FeatureMatrix pool_features(const FeatureMatrix& x, const SparseMatrix& s_diag);

PooledResult pool(const SimplicialComplex& k, const VertexAssignment& s0,
                  const std::vector<FeatureMatrix>& features = {});

// Frobenius norm of A_0 - S_0 S_0^T.
double loss_link_prediction(const SparseMatrix& a0, const VertexAssignment& s0);

// Mean Shannon entropy (natural log) of the rows, which must be probability
// vectors.
double loss_entropy(const VertexAssignment& s0);

// Number of boundary entries whose row label is not a face of the column
// label; always zero for hard assignments.
int extraneous_boundary_entries(const PooledResult& result);

}  // namespace nervepool
