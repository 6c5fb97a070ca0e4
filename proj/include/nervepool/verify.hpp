#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nervepool/pooling.hpp"
#include "nervepool/simplicial_complex.hpp"

namespace nervepool {

struct InstanceDescriptor {
    std::uint64_t seed = 0;
    int n0 = 0;
    int dim = -1;
    int clusters = 0;
};

struct VerificationReport {
    InstanceDescriptor instance;
    bool pass = false;
    std::string detail;  // first mismatching simplex or matrix entry
    double max_row_sum_error = 0.0;
};

// Text form of the pooled output: sorted labels and sorted sparse triplets of
// every pooled matrix, all indexed by cluster-id tuples. The assignment
// blocks are excluded; their rows follow the input simplex order, so they are
// equivariant under relabelling rather than invariant.
std::string canonical_serialization(const PooledResult& result);

// Matrix path against the nerve path. Hard assignments compare labelled
// simplex sets and boundary supports; soft assignments compare the
// off-diagonal support of the upper adjacency matrices instead.
VerificationReport check_equivalence(const SimplicialComplex& k, const VertexAssignment& s0);

// Pooling by singleton clusters must reproduce the complex.
VerificationReport check_identity(const SimplicialComplex& k);

// Pooling must commute with vertex relabelling.
VerificationReport check_permutation_invariance(const SimplicialComplex& k,
                                                const VertexAssignment& s0,
                                                const std::map<VertexId, VertexId>& perm);

struct BatchOutcome {
    int passed = 0;
    int failed = 0;
    std::vector<VerificationReport> failures;
    double max_row_sum_error = 0.0;
    int instances_with_extraneous = 0;
};

BatchOutcome run_equivalence_suite(int instances, std::uint64_t base_seed);
BatchOutcome run_identity_suite(int instances, std::uint64_t base_seed);
BatchOutcome run_permutation_suite(int instances, std::uint64_t base_seed);
// Soft assignments; also counts instances with extraneous boundary entries.
BatchOutcome run_soft_suite(int instances, std::uint64_t base_seed);

// The (complex, hard partition) pair the equivalence suite derives from one
// seed, for callers that check further properties on the same instances.
struct SuiteInstance {
    SimplicialComplex complex;
    VertexAssignment assignment;
};
SuiteInstance equivalence_instance(std::uint64_t seed);

}  // namespace nervepool
