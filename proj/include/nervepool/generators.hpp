#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "nervepool/pooling.hpp"
#include "nervepool/simplicial_complex.hpp"

namespace nervepool {

// Deterministic helpers over mt19937_64. The standard distributions are
// implementation-defined, so draws are derived from raw engine output to
// keep seeded instances bit-reproducible across platforms.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    int uniform_int(int lo, int hi);  // inclusive bounds

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j =
                static_cast<std::size_t>(uniform_int(0, static_cast<int>(i) - 1));
            std::swap(values[i - 1], values[j]);
        }
    }

  private:
    std::mt19937_64 engine_;
};

// Erdos-Renyi 1-skeleton at the given density, then each (k+1)-clique whose
// k-faces were all kept is promoted to a k-simplex with the same
// probability, up to max_dim. Identical seeds give identical complexes.
SimplicialComplex random_complex(std::uint64_t seed, int n_vertices, int max_dim, double density);

// Surjective one-hot assignment onto k_clusters non-empty clusters.
VertexAssignment random_hard_partition(std::uint64_t seed, const SimplicialComplex& k,
                                       int k_clusters);

// Seeded bijective relabelling of the vertex set.
std::map<VertexId, VertexId> random_permutation(std::uint64_t seed, const SimplicialComplex& k);

// A complex together with a soft vertex assignment. Instances are built from
// cluster blobs (cliques promoted to a seeded dimension) joined by soft
// bridge vertices, plus one pocket: a soft vertex with an edge into a third
// cluster, completed by a triangle so every cover intersection is witnessed
// in matching dimension. The pocket guarantees at least one extraneous
// pooled-boundary entry while keeping adjacency support equal to the nerve's.
struct SoftInstance {
    SimplicialComplex complex;
    VertexAssignment assignment;
};

SoftInstance random_soft_instance(std::uint64_t seed);

}  // namespace nervepool
