#include "nervepool/pooling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "nervepool/boundary.hpp"
#include "nervepool/errors.hpp"

namespace nervepool {

namespace {

constexpr double kZeroClamp = 1e-12;

// Sorted cluster-column indices with positive weight, per row of a block.
std::vector<std::vector<int>> touched_clusters(const SparseMatrix& block) {
    std::vector<std::vector<int>> touched(static_cast<std::size_t>(block.rows()));
    for (const Triplet& t : block.entries()) {
        if (t.value > 0.0) {
            touched[static_cast<std::size_t>(t.row)].push_back(t.col);
        }
    }
    return touched;
}

void collect_subsets(const std::vector<int>& pool, std::size_t size, std::size_t start,
                     std::vector<int>& current, std::set<std::vector<int>>& out) {
    if (current.size() == size) {
        out.insert(current);
        return;
    }
    for (std::size_t i = start; i + (size - current.size()) <= pool.size(); ++i) {
        current.push_back(pool[i]);
        collect_subsets(pool, size, i + 1, current, out);
        current.pop_back();
    }
}

}  // namespace

VertexAssignment VertexAssignment::create(const SimplicialComplex& k,
                                          std::vector<ClusterId> cluster_ids,
                                          const SparseMatrix& weights) {
    VertexAssignment s0;
    s0.vertex_ids = k.vertex_ids();
    if (weights.rows() != static_cast<int>(s0.vertex_ids.size()) ||
        weights.cols() != static_cast<int>(cluster_ids.size())) {
        throw MalformedInputError("assignment matrix shape does not match complex and clusters");
    }
    std::set<ClusterId> seen;
    for (const ClusterId& c : cluster_ids) {
        if (!valid_token(c)) {
            throw MalformedInputError("invalid cluster token '" + c + "'");
        }
        if (!seen.insert(c).second) {
            throw MalformedInputError("duplicate cluster id '" + c + "'");
        }
    }
    std::vector<int> positives(s0.vertex_ids.size(), 0);
    for (const Triplet& t : weights.entries()) {
        if (t.value < 0.0) {
            throw MalformedInputError("negative assignment weight");
        }
        if (t.value > 0.0) {
            ++positives[static_cast<std::size_t>(t.row)];
        }
    }
    for (std::size_t v = 0; v < positives.size(); ++v) {
        if (positives[v] == 0) {
            throw IncompleteCoverError("vertex '" + s0.vertex_ids[v] +
                                       "' is not assigned to any cluster");
        }
    }
    s0.cluster_ids = std::move(cluster_ids);
    s0.weights = weights;
    s0.hard = std::all_of(positives.begin(), positives.end(), [](int n) { return n == 1; });
    return s0;
}

VertexAssignment VertexAssignment::from_memberships(const SimplicialComplex& k,
                                                    const std::vector<Membership>& records) {
    const std::vector<VertexId> vertices = k.vertex_ids();
    std::map<VertexId, int> vertex_index;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        vertex_index[vertices[i]] = static_cast<int>(i);
    }
    std::vector<ClusterId> cluster_ids;
    std::map<ClusterId, int> cluster_index;
    std::set<std::pair<VertexId, ClusterId>> seen;
    std::vector<Triplet> entries;
    for (const Membership& r : records) {
        auto vit = vertex_index.find(r.vertex);
        if (vit == vertex_index.end()) {
            throw NotFoundError("unknown vertex '" + r.vertex + "'");
        }
        if (r.weight <= 0.0) {
            throw MalformedInputError("non-positive weight for vertex '" + r.vertex + "'");
        }
        if (!seen.insert({r.vertex, r.cluster}).second) {
            throw MalformedInputError("duplicate record for vertex '" + r.vertex +
                                      "' and cluster '" + r.cluster + "'");
        }
        auto cit = cluster_index.find(r.cluster);
        if (cit == cluster_index.end()) {
            cit = cluster_index.insert({r.cluster, static_cast<int>(cluster_ids.size())}).first;
            cluster_ids.push_back(r.cluster);
        }
        entries.push_back({vit->second, cit->second, r.weight});
    }
    SparseMatrix weights = SparseMatrix::from_triplets(
        static_cast<int>(vertices.size()), static_cast<int>(cluster_ids.size()), entries);
    return create(k, std::move(cluster_ids), weights);
}

VertexAssignment singleton_assignment(const SimplicialComplex& k) {
    std::vector<VertexAssignment::Membership> records;
    for (const VertexId& v : k.vertex_ids()) {
        records.push_back({v, v, 1.0});
    }
    return VertexAssignment::from_memberships(k, records);
}

VertexCover to_cover(const VertexAssignment& s0) {
    std::vector<std::set<VertexId>> members(s0.cluster_ids.size());
    for (const Triplet& t : s0.weights.entries()) {
        if (t.value > 0.0) {
            members[static_cast<std::size_t>(t.col)].insert(
                s0.vertex_ids[static_cast<std::size_t>(t.row)]);
        }
    }
    std::vector<VertexCover::Cluster> clusters;
    for (std::size_t j = 0; j < members.size(); ++j) {
        if (!members[j].empty()) {
            clusters.push_back({s0.cluster_ids[j], std::move(members[j])});
        }
    }
    return VertexCover::create(std::move(clusters));
}

DownBlocks extend_down(const VertexAssignment& s0, const SimplicialComplex& k) {
    if (s0.vertex_ids != k.vertex_ids()) {
        throw MalformedInputError("assignment rows do not match the complex vertex set");
    }
    DownBlocks down;
    down.cluster_ids = s0.cluster_ids;
    down.blocks.resize(static_cast<std::size_t>(k.dim()) + 1);
    down.blocks[0] = s0.weights;
    const std::vector<std::vector<int>> vertex_clusters = touched_clusters(s0.weights);
    const int cluster_count = static_cast<int>(s0.cluster_ids.size());
    for (int q = 1; q <= k.dim(); ++q) {
        std::vector<Triplet> entries;
        const auto& level = k.simplices(q);
        for (int row = 0; row < static_cast<int>(level.size()); ++row) {
            std::set<int> touched;
            for (const VertexId& v : level[static_cast<std::size_t>(row)].vertices()) {
                const auto vi = k.index_of(Simplex({v}));
                const auto& cs = vertex_clusters[static_cast<std::size_t>(*vi)];
                touched.insert(cs.begin(), cs.end());
            }
            for (int c : touched) {
                entries.push_back({row, c, 1.0});
            }
        }
        down.blocks[static_cast<std::size_t>(q)] = SparseMatrix::from_triplets(
            static_cast<int>(level.size()), cluster_count, std::move(entries));
    }
    return down;
}

BlockAssignment extend_right(const DownBlocks& down, const SimplicialComplex& k) {
    const int input_dim = k.dim();
    // Cluster sets touched by each simplex, per dimension.
    std::vector<std::vector<std::vector<int>>> touched(static_cast<std::size_t>(input_dim) + 1);
    for (int q = 0; q <= input_dim; ++q) {
        touched[static_cast<std::size_t>(q)] = touched_clusters(down.blocks[static_cast<std::size_t>(q)]);
    }

    // A candidate pooled p-simplex is any (p+1)-subset of clusters witnessed
    // by some p-simplex; this is exactly the set of candidates whose diagonal
    // S_{p,p} column is nonzero.
    std::vector<std::set<std::vector<int>>> survivors(static_cast<std::size_t>(input_dim) + 1);
    for (int p = 0; p <= input_dim; ++p) {
        for (const auto& clusters : touched[static_cast<std::size_t>(p)]) {
            if (static_cast<int>(clusters.size()) < p + 1) {
                continue;
            }
            std::vector<int> current;
            collect_subsets(clusters, static_cast<std::size_t>(p) + 1, 0, current,
                            survivors[static_cast<std::size_t>(p)]);
        }
    }
    int output_dim = -1;
    for (int p = 0; p <= input_dim; ++p) {
        if (!survivors[static_cast<std::size_t>(p)].empty()) {
            output_dim = p;
        }
    }

    BlockAssignment ba;
    ba.input_dim = input_dim;
    ba.output_dim = output_dim;
    ba.cluster_ids = down.cluster_ids;
    ba.labels.resize(static_cast<std::size_t>(output_dim) + 1);
    ba.blocks.resize(static_cast<std::size_t>(input_dim) + 1);

    // Column index sets per dimension, ordered by their sorted id tuples.
    std::vector<std::vector<std::vector<int>>> column_sets(static_cast<std::size_t>(output_dim) + 1);
    for (int p = 0; p <= output_dim; ++p) {
        std::vector<std::pair<ClusterTuple, std::vector<int>>> ordered;
        for (const auto& subset : survivors[static_cast<std::size_t>(p)]) {
            ClusterTuple label;
            for (int c : subset) {
                label.push_back(down.cluster_ids[static_cast<std::size_t>(c)]);
            }
            std::sort(label.begin(), label.end());
            ordered.emplace_back(std::move(label), subset);
        }
        std::sort(ordered.begin(), ordered.end());
        for (auto& [label, subset] : ordered) {
            ba.labels[static_cast<std::size_t>(p)].push_back(std::move(label));
            column_sets[static_cast<std::size_t>(p)].push_back(std::move(subset));
        }
    }

    for (int q = 0; q <= input_dim; ++q) {
        const int n_q = k.count(q);
        auto& row_blocks = ba.blocks[static_cast<std::size_t>(q)];
        row_blocks.resize(static_cast<std::size_t>(std::min(q, output_dim)) + 1);
        for (int p = 0; p <= std::min(q, output_dim); ++p) {
            const auto& columns = column_sets[static_cast<std::size_t>(p)];
            std::vector<Triplet> entries;
            if (q == 0) {
                // The diagonal 0-block keeps the input weights.
                for (int col = 0; col < static_cast<int>(columns.size()); ++col) {
                    const int cluster = columns[static_cast<std::size_t>(col)][0];
                    for (const Triplet& t : down.blocks[0].entries()) {
                        if (t.col == cluster && t.value > 0.0) {
                            entries.push_back({t.row, col, t.value});
                        }
                    }
                }
            } else {
                for (int row = 0; row < n_q; ++row) {
                    const auto& cs = touched[static_cast<std::size_t>(q)][static_cast<std::size_t>(row)];
                    for (int col = 0; col < static_cast<int>(columns.size()); ++col) {
                        const auto& subset = columns[static_cast<std::size_t>(col)];
                        if (std::includes(cs.begin(), cs.end(), subset.begin(), subset.end())) {
                            entries.push_back({row, col, 1.0});
                        }
                    }
                }
            }
            row_blocks[static_cast<std::size_t>(p)] = SparseMatrix::from_triplets(
                n_q, static_cast<int>(columns.size()), std::move(entries));
        }
    }
    return ba;
}

const SparseMatrix& BlockAssignment::diagonal(int p) const {
    if (p < 0 || p > output_dim) {
        throw DimensionError("no diagonal block for dimension " + std::to_string(p));
    }
    return blocks[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
}

int BlockAssignment::pooled_count(int p) const {
    if (p < 0 || p > output_dim) {
        return 0;
    }
    return static_cast<int>(labels[static_cast<std::size_t>(p)].size());
}

BlockAssignment normalize_rows(const BlockAssignment& assignment) {
    BlockAssignment out = assignment;
    for (int q = 0; q <= out.input_dim; ++q) {
        auto& row_blocks = out.blocks[static_cast<std::size_t>(q)];
        std::vector<double> sums;
        for (const SparseMatrix& block : row_blocks) {
            const std::vector<double> s = block.row_sums();
            if (sums.empty()) {
                sums = s;
            } else {
                for (std::size_t i = 0; i < sums.size(); ++i) {
                    sums[i] += s[i];
                }
            }
        }
        for (std::size_t i = 0; i < sums.size(); ++i) {
            if (sums[i] <= 0.0) {
                throw UncoveredSimplexError("block-row " + std::to_string(i) + " of dimension " +
                                            std::to_string(q) + " sums to zero");
            }
        }
        for (SparseMatrix& block : row_blocks) {
            std::vector<Triplet> scaled = block.entries();
            for (Triplet& t : scaled) {
                t.value /= sums[static_cast<std::size_t>(t.row)];
            }
            block = SparseMatrix::from_triplets(block.rows(), block.cols(), std::move(scaled));
        }
    }
    out.normalized = true;
    return out;
}

std::vector<SparseMatrix> pool_boundaries(const SimplicialComplex& k,
                                          const BlockAssignment& assignment) {
    if (!assignment.normalized) {
        throw MalformedInputError("pooling requires a normalized assignment");
    }
    std::vector<SparseMatrix> boundaries;
    boundaries.emplace_back(0, assignment.pooled_count(0));
    for (int p = 1; p <= assignment.output_dim; ++p) {
        const SparseMatrix b = boundary_matrix(k, p, false).matrix;
        boundaries.push_back(
            sandwich_product(assignment.diagonal(p - 1), b, assignment.diagonal(p))
                .pruned(kZeroClamp));
    }
    return boundaries;
}

std::vector<SparseMatrix> pool_adjacency(const BlockAssignment& assignment,
                                         const std::vector<SparseMatrix>& boundaries,
                                         bool normalized) {
    std::vector<SparseMatrix> adjacency;
    for (int p = 0; p <= assignment.output_dim; ++p) {
        const int n = assignment.pooled_count(p);
        if (p == assignment.output_dim) {
            adjacency.emplace_back(n, n);
            continue;
        }
        const SparseMatrix& b_next = boundaries[static_cast<std::size_t>(p) + 1];
        SparseMatrix raw = b_next.multiply(b_next.transpose()).pruned(kZeroClamp);
        if (!normalized) {
            adjacency.push_back(std::move(raw));
            continue;
        }
        const std::vector<double> degrees = b_next.row_sums();
        std::vector<Triplet> entries;
        for (const Triplet& t : raw.entries()) {
            const double value =
                t.row == t.col ? std::fabs(degrees[static_cast<std::size_t>(t.row)] - t.value)
                               : std::fabs(t.value);
            entries.push_back({t.row, t.col, value});
        }
        adjacency.push_back(
            SparseMatrix::from_triplets(n, n, std::move(entries)).pruned(kZeroClamp));
    }
    return adjacency;
}

FeatureMatrix pool_features(const FeatureMatrix& x, const SparseMatrix& s_diag) {
    if (x.values.rows != s_diag.rows()) {
        throw MalformedInputError("feature rows do not match the simplex count");
    }
    FeatureMatrix out;
    out.p = x.p;
    out.values = DenseMatrix(s_diag.cols(), x.values.cols);
    std::map<std::pair<int, int>, std::vector<double>> buckets;
    for (const Triplet& t : s_diag.entries()) {
        for (int c = 0; c < x.values.cols; ++c) {
            const double contribution = t.value * x.values.at(t.row, c);
            if (contribution != 0.0) {
                buckets[{t.col, c}].push_back(contribution);
            }
        }
    }
    for (auto& [pos, contributions] : buckets) {
        std::sort(contributions.begin(), contributions.end());
        double sum = 0.0;
        for (double c : contributions) {
            sum += c;
        }
        out.values.at(pos.first, pos.second) = sum;
    }
    return out;
}

PooledResult pool(const SimplicialComplex& k, const VertexAssignment& s0,
                  const std::vector<FeatureMatrix>& features) {
    PooledResult result;
    result.assignment = normalize_rows(extend_right(extend_down(s0, k), k));
    result.boundaries = pool_boundaries(k, result.assignment);
    result.adjacency_raw = pool_adjacency(result.assignment, result.boundaries, false);
    result.adjacency_normalized = pool_adjacency(result.assignment, result.boundaries, true);
    result.labels = result.assignment.labels;
    for (const FeatureMatrix& x : features) {
        if (x.p < 0 || x.p > k.dim()) {
            throw DimensionError("feature dimension " + std::to_string(x.p) + " out of range");
        }
        if (x.values.rows != k.count(x.p)) {
            throw MalformedInputError("feature rows do not match the simplex count");
        }
        if (x.p <= result.assignment.output_dim) {
            result.features.push_back(pool_features(x, result.assignment.diagonal(x.p)));
        }
    }
    return result;
}

SimplicialComplex PooledResult::label_complex() const {
    std::vector<Simplex> simplices;
    for (const auto& level : labels) {
        for (const ClusterTuple& label : level) {
            simplices.emplace_back(label);
        }
    }
    return SimplicialComplex::from_simplices(simplices);
}

double loss_link_prediction(const SparseMatrix& a0, const VertexAssignment& s0) {
    if (a0.rows() != a0.cols() || a0.rows() != s0.weights.rows()) {
        throw MalformedInputError("adjacency shape does not match the assignment");
    }
    const SparseMatrix reconstruction = s0.weights.multiply(s0.weights.transpose());
    std::map<std::pair<int, int>, double> diff;
    for (const Triplet& t : a0.entries()) {
        diff[{t.row, t.col}] += t.value;
    }
    for (const Triplet& t : reconstruction.entries()) {
        diff[{t.row, t.col}] -= t.value;
    }
    double sum = 0.0;
    for (const auto& [pos, d] : diff) {
        sum += d * d;
    }
    return std::sqrt(sum);
}

double loss_entropy(const VertexAssignment& s0) {
    const std::vector<double> sums = s0.weights.row_sums();
    for (double s : sums) {
        if (std::fabs(s - 1.0) > 1e-9) {
            throw MalformedInputError("entropy loss requires row-normalized assignments");
        }
    }
    double total = 0.0;
    for (const Triplet& t : s0.weights.entries()) {
        if (t.value > 0.0) {
            total -= t.value * std::log(t.value);
        }
    }
    return s0.weights.rows() == 0 ? 0.0 : total / s0.weights.rows();
}

int extraneous_boundary_entries(const PooledResult& result) {
    int count = 0;
    for (int p = 1; p <= result.output_dim(); ++p) {
        const auto& faces = result.labels[static_cast<std::size_t>(p) - 1];
        const auto& cofaces = result.labels[static_cast<std::size_t>(p)];
        for (const Triplet& t : result.boundaries[static_cast<std::size_t>(p)].entries()) {
            const ClusterTuple& face = faces[static_cast<std::size_t>(t.row)];
            const ClusterTuple& coface = cofaces[static_cast<std::size_t>(t.col)];
            if (!std::includes(coface.begin(), coface.end(), face.begin(), face.end())) {
                ++count;
            }
        }
    }
    return count;
}

}  // namespace nervepool
