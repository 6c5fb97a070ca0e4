#include "nervepool/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "nervepool/errors.hpp"

namespace nervepool {

namespace {

std::string padded_name(const std::string& prefix, int index, int max_index) {
    std::size_t width = 1;
    for (int v = max_index; v >= 10; v /= 10) {
        ++width;
    }
    std::string digits = std::to_string(index);
    return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

int RngStream::uniform_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

SimplicialComplex random_complex(std::uint64_t seed, int n_vertices, int max_dim, double density) {
    if (n_vertices < 1) {
        throw MalformedInputError("random complex requires at least one vertex");
    }
    if (density < 0.0 || density > 1.0) {
        throw MalformedInputError("density must lie in [0, 1]");
    }
    if (max_dim < 0) {
        throw MalformedInputError("max dimension must be non-negative");
    }
    RngStream rng(seed);
    // Zero-padded names make index order and lexicographic order agree.
    std::vector<VertexId> names;
    names.reserve(static_cast<std::size_t>(n_vertices));
    for (int i = 0; i < n_vertices; ++i) {
        names.push_back(padded_name("v", i, n_vertices - 1));
    }

    std::vector<std::vector<bool>> adjacent(
        static_cast<std::size_t>(n_vertices), std::vector<bool>(static_cast<std::size_t>(n_vertices), false));
    std::vector<std::set<std::vector<int>>> level(static_cast<std::size_t>(std::max(max_dim, 0)) + 1);
    for (int i = 0; i < n_vertices; ++i) {
        level[0].insert({i});
    }
    if (max_dim >= 1) {
        for (int i = 0; i < n_vertices; ++i) {
            for (int j = i + 1; j < n_vertices; ++j) {
                if (rng.uniform01() < density) {
                    adjacent[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
                    adjacent[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
                    level[1].insert({i, j});
                }
            }
        }
    }
    for (int d = 2; d <= max_dim; ++d) {
        // Extend each (d-1)-simplex by a larger-index common neighbor; the
        // candidate is promoted only if all of its (d-1)-faces were kept.
        for (const std::vector<int>& base : level[static_cast<std::size_t>(d) - 1]) {
            for (int v = base.back() + 1; v < n_vertices; ++v) {
                bool clique = true;
                for (int u : base) {
                    if (!adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                        clique = false;
                        break;
                    }
                }
                if (!clique) {
                    continue;
                }
                std::vector<int> candidate = base;
                candidate.push_back(v);
                bool faces_present = true;
                for (std::size_t skip = 0; skip + 1 < candidate.size(); ++skip) {
                    std::vector<int> face;
                    for (std::size_t i = 0; i < candidate.size(); ++i) {
                        if (i != skip) {
                            face.push_back(candidate[i]);
                        }
                    }
                    if (!level[static_cast<std::size_t>(d) - 1].contains(face)) {
                        faces_present = false;
                        break;
                    }
                }
                if (faces_present && rng.uniform01() < density) {
                    level[static_cast<std::size_t>(d)].insert(std::move(candidate));
                }
            }
        }
    }
    std::vector<Simplex> simplices;
    for (const auto& simplex_level : level) {
        for (const std::vector<int>& indices : simplex_level) {
            std::vector<VertexId> verts;
            verts.reserve(indices.size());
            for (int i : indices) {
                verts.push_back(names[static_cast<std::size_t>(i)]);
            }
            simplices.emplace_back(std::move(verts));
        }
    }
    return SimplicialComplex::from_simplices(simplices);
}

VertexAssignment random_hard_partition(std::uint64_t seed, const SimplicialComplex& k,
                                       int k_clusters) {
    const std::vector<VertexId> vertices = k.vertex_ids();
    const int n = static_cast<int>(vertices.size());
    if (k_clusters < 1 || k_clusters > n) {
        throw MalformedInputError("cluster count must lie in 1..n_0");
    }
    RngStream rng(seed);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[static_cast<std::size_t>(i)] = i;
    }
    rng.shuffle(order);
    std::vector<Triplet> entries;
    for (int i = 0; i < n; ++i) {
        // The first k shuffled vertices seed one cluster each.
        const int cluster = i < k_clusters ? i : rng.uniform_int(0, k_clusters - 1);
        entries.push_back({order[static_cast<std::size_t>(i)], cluster, 1.0});
    }
    std::vector<ClusterId> cluster_ids;
    for (int c = 0; c < k_clusters; ++c) {
        cluster_ids.push_back(padded_name("U", c, k_clusters - 1));
    }
    return VertexAssignment::create(
        k, std::move(cluster_ids),
        SparseMatrix::from_triplets(n, k_clusters, std::move(entries)));
}

std::map<VertexId, VertexId> random_permutation(std::uint64_t seed, const SimplicialComplex& k) {
    const std::vector<VertexId> vertices = k.vertex_ids();
    std::vector<VertexId> images = vertices;
    RngStream rng(seed);
    rng.shuffle(images);
    std::map<VertexId, VertexId> perm;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        perm[vertices[i]] = images[i];
    }
    return perm;
}

SoftInstance random_soft_instance(std::uint64_t seed) {
    RngStream rng(seed);
    const int k = rng.uniform_int(3, 6);
    std::vector<std::vector<int>> blob(static_cast<std::size_t>(k));
    int vertex_count = 0;
    for (int c = 0; c < k; ++c) {
        const int size = rng.uniform_int(2, 4);
        for (int i = 0; i < size; ++i) {
            blob[static_cast<std::size_t>(c)].push_back(vertex_count++);
        }
    }
    const int blob_dim = rng.uniform_int(1, 3);

    std::set<std::vector<int>> simplices;
    auto add_clique = [&](const std::vector<int>& verts, int max_dim) {
        // All subsets of the clique up to max_dim + 1 vertices.
        const std::size_t n = verts.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            std::vector<int> subset;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    subset.push_back(verts[i]);
                }
            }
            if (static_cast<int>(subset.size()) <= max_dim + 1) {
                std::sort(subset.begin(), subset.end());
                simplices.insert(std::move(subset));
            }
        }
    };
    for (int c = 0; c < k; ++c) {
        add_clique(blob[static_cast<std::size_t>(c)], blob_dim);
    }

    struct SoftVertex {
        int vertex;
        int first_cluster;
        int second_cluster;
        double second_weight;
    };
    std::vector<SoftVertex> soft;

    // Bridge vertices join adjacent blobs and belong to both clusters. Their
    // simplices stay inside one blob's span, so witnesses never mix a third
    // cluster.
    for (int c = 0; c + 1 < k; ++c) {
        if (rng.uniform01() >= 0.5) {
            continue;
        }
        const int w = vertex_count++;
        soft.push_back({w, c, c + 1, rng.uniform01() < 0.5 ? 0.5 : 1.0});
        for (int side : {c, c + 1}) {
            std::vector<int> clique = blob[static_cast<std::size_t>(side)];
            clique.push_back(w);
            add_clique(clique, blob_dim);
        }
    }

    // The pocket: a soft {A,B} vertex u with an edge to a third cluster C,
    // closed by the triangle (u, z, y) with y back in A. The triangle gives
    // every pairwise and triple cover intersection a witness of matching
    // dimension, while the edge (u, z) makes the pooled boundary pick up an
    // extraneous entry for B against the pooled edge {A, C}.
    std::vector<int> triple(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) {
        triple[static_cast<std::size_t>(c)] = c;
    }
    rng.shuffle(triple);
    const int a = triple[0];
    const int b = triple[1];
    const int c3 = triple[2];
    const int u = vertex_count++;
    soft.push_back({u, a, b, rng.uniform01() < 0.5 ? 0.5 : 1.0});
    for (int side : {a, b}) {
        std::vector<int> clique = blob[static_cast<std::size_t>(side)];
        clique.push_back(u);
        add_clique(clique, blob_dim);
    }
    const int z = blob[static_cast<std::size_t>(c3)][0];
    const int y = blob[static_cast<std::size_t>(a)][0];
    add_clique({u, z, y}, 2);

    std::vector<VertexId> names(static_cast<std::size_t>(vertex_count));
    for (int i = 0; i < vertex_count; ++i) {
        names[static_cast<std::size_t>(i)] = padded_name("v", i, vertex_count - 1);
    }
    std::vector<Simplex> all;
    all.reserve(simplices.size());
    for (const std::vector<int>& indices : simplices) {
        std::vector<VertexId> verts;
        for (int i : indices) {
            verts.push_back(names[static_cast<std::size_t>(i)]);
        }
        all.emplace_back(std::move(verts));
    }
    SimplicialComplex complex = SimplicialComplex::from_simplices(all);

    std::vector<ClusterId> cluster_ids;
    for (int c = 0; c < k; ++c) {
        cluster_ids.push_back(padded_name("U", c, k - 1));
    }
    std::vector<Triplet> weights;
    for (int c = 0; c < k; ++c) {
        for (int v : blob[static_cast<std::size_t>(c)]) {
            weights.push_back({*complex.index_of(Simplex({names[static_cast<std::size_t>(v)]})), c, 1.0});
        }
    }
    for (const SoftVertex& s : soft) {
        const int row = *complex.index_of(Simplex({names[static_cast<std::size_t>(s.vertex)]}));
        weights.push_back({row, s.first_cluster, 1.0});
        weights.push_back({row, s.second_cluster, s.second_weight});
    }
    VertexAssignment assignment = VertexAssignment::create(
        complex, std::move(cluster_ids),
        SparseMatrix::from_triplets(vertex_count, k, std::move(weights)));
    return {std::move(complex), std::move(assignment)};
}

}  // namespace nervepool
