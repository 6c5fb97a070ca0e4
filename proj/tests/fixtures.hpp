#pragma once

#include "nervepool/pooling.hpp"
#include "nervepool/simplicial_complex.hpp"

namespace nervepool::testing {

// Five vertices, six edges and one triangle (v1,v2,v3); the running example
// used across the test suite.
inline SimplicialComplex example_complex() {
    return SimplicialComplex::from_maximal_simplices({
        {"v1", "v2", "v3"},
        {"v0", "v1"},
        {"v2", "v3"},
        {"v3", "v4"},
        {"v1", "v3"},
        {"v0", "v4"},
    });
}

// Hard two-cluster partition {v0,v4} | {v1,v2,v3} of the example complex.
inline VertexAssignment example_partition(const SimplicialComplex& k) {
    return VertexAssignment::from_memberships(k, {
                                                     {"v0", "U1", 1.0},
                                                     {"v4", "U1", 1.0},
                                                     {"v1", "U2", 1.0},
                                                     {"v2", "U2", 1.0},
                                                     {"v3", "U2", 1.0},
                                                 });
}

}  // namespace nervepool::testing
