#pragma once

#include <string>

#include "nervepool/pooling.hpp"
#include "nervepool/simplicial_complex.hpp"

namespace nervepool {

// One maximal simplex per line as comma-separated vertex tokens; '#' starts
// a comment line; blank lines are ignored.
SimplicialComplex parse_complex(const std::string& text);

// Emits the maximal simplices; parse(serialize(k)) == k.
std::string serialize_complex(const SimplicialComplex& k);

// One record per line: vertex,cluster[,weight]. Omitted weight is 1.0;
// multiple records per vertex make the assignment soft.
VertexAssignment parse_partition(const std::string& text, const SimplicialComplex& k);

// Rows are "a-b-c,x0,x1,...": a simplex label (vertices joined by '-')
// followed by its feature values. The dimension is inferred from the label
// and every simplex of that dimension must appear exactly once.
FeatureMatrix parse_features(const std::string& text, const SimplicialComplex& k);

// Graphviz description of the 1-skeleton. With a hard assignment the nodes
// carry cluster colors.
std::string export_dot(const SimplicialComplex& k);
std::string export_dot(const SimplicialComplex& k, const VertexAssignment& clusters);

// Structured pooled output: labels, sparse triplets of the pooled boundary
// and adjacency matrices, Betti vectors of input and output, the normalized
// assignment blocks, and pooled features when present. Byte-deterministic.
std::string pooled_output_json(const SimplicialComplex& input, const PooledResult& result,
                               bool include_normalized_adjacency);

}  // namespace nervepool
