#pragma once

#include <set>
#include <string>
#include <vector>

#include "nervepool/simplicial_complex.hpp"

namespace nervepool {

using ClusterId = std::string;

// A family of vertex clusters covering the vertex set. Hard covers are
// pairwise disjoint.
struct VertexCover {
    struct Cluster {
        ClusterId id;
        std::set<VertexId> vertices;
    };

    std::vector<Cluster> clusters;
    bool hard = false;

    // Validates tokens, uniqueness of ids and non-emptiness; infers hardness
    // from pairwise disjointness.
    static VertexCover create(std::vector<Cluster> clusters);
};

// Per cluster, the union of the stars of its vertices. Elements are plain
// simplex sets; they are not face-closed.
struct ExtendedCover {
    struct Element {
        ClusterId id;
        std::set<Simplex> simplices;
    };

    std::vector<Element> elements;
};

// The nerve is a simplicial complex whose vertices are cluster ids.
using NerveComplex = SimplicialComplex;

ExtendedCover extend_cover(const SimplicialComplex& k, const VertexCover& cover);

// One nerve vertex per cover element; a simplex per non-empty intersection
// of distinct elements.
NerveComplex nerve(const ExtendedCover& ext);

NerveComplex pool_via_nerve(const SimplicialComplex& k, const VertexCover& cover);

}  // namespace nervepool
