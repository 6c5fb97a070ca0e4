#include "nervepool/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "nervepool/boundary.hpp"
#include "nervepool/cover.hpp"
#include "nervepool/generators.hpp"

namespace nervepool {

namespace {

std::string format_value(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", v);
    return buffer;
}

std::string tuple_text(const ClusterTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += t[i];
    }
    return s + ")";
}

void serialize_matrix(std::ostringstream& out, const std::string& name, const SparseMatrix& m) {
    out << name << ' ' << m.rows() << 'x' << m.cols() << '\n';
    for (const Triplet& t : m.entries()) {
        out << "  " << t.row << ' ' << t.col << ' ' << format_value(t.value) << '\n';
    }
}

double max_row_sum_deviation(const BlockAssignment& assignment) {
    double worst = 0.0;
    for (int q = 0; q <= assignment.input_dim; ++q) {
        std::vector<double> sums;
        for (const SparseMatrix& block : assignment.blocks[static_cast<std::size_t>(q)]) {
            const std::vector<double> s = block.row_sums();
            if (sums.empty()) {
                sums = s;
            } else {
                for (std::size_t i = 0; i < sums.size(); ++i) {
                    sums[i] += s[i];
                }
            }
        }
        for (double s : sums) {
            worst = std::max(worst, std::fabs(s - 1.0));
        }
    }
    return worst;
}

// Off-diagonal support of the upper adjacency of dimension p, as sorted
// label pairs.
std::set<std::pair<ClusterTuple, ClusterTuple>> adjacency_pairs(
    const SparseMatrix& adjacency, const std::vector<ClusterTuple>& labels) {
    std::set<std::pair<ClusterTuple, ClusterTuple>> pairs;
    for (const Triplet& t : adjacency.entries()) {
        if (t.row < t.col) {
            pairs.insert({labels[static_cast<std::size_t>(t.row)],
                          labels[static_cast<std::size_t>(t.col)]});
        }
    }
    return pairs;
}

std::vector<ClusterTuple> nerve_labels(const NerveComplex& nerve_complex, int p) {
    std::vector<ClusterTuple> labels;
    if (p < 0 || p > nerve_complex.dim()) {
        return labels;
    }
    for (const Simplex& s : nerve_complex.simplices(p)) {
        labels.push_back(s.vertices());
    }
    return labels;
}

}  // namespace

std::string canonical_serialization(const PooledResult& result) {
    std::ostringstream out;
    out << "output_dim " << result.output_dim() << '\n';
    for (std::size_t p = 0; p < result.labels.size(); ++p) {
        out << "labels " << p << ':';
        for (const ClusterTuple& label : result.labels[p]) {
            out << ' ' << tuple_text(label);
        }
        out << '\n';
    }
    for (std::size_t p = 1; p < result.boundaries.size(); ++p) {
        serialize_matrix(out, "boundary " + std::to_string(p), result.boundaries[p]);
    }
    for (std::size_t p = 0; p < result.adjacency_raw.size(); ++p) {
        serialize_matrix(out, "adjacency_raw " + std::to_string(p), result.adjacency_raw[p]);
    }
    for (std::size_t p = 0; p < result.adjacency_normalized.size(); ++p) {
        serialize_matrix(out, "adjacency_normalized " + std::to_string(p),
                         result.adjacency_normalized[p]);
    }
    for (const FeatureMatrix& f : result.features) {
        out << "features " << f.p << ' ' << f.values.rows << 'x' << f.values.cols << '\n';
        for (int r = 0; r < f.values.rows; ++r) {
            out << " ";
            for (int c = 0; c < f.values.cols; ++c) {
                out << ' ' << format_value(f.values.at(r, c));
            }
            out << '\n';
        }
    }
    return out.str();
}

VerificationReport check_equivalence(const SimplicialComplex& k, const VertexAssignment& s0) {
    VerificationReport report;
    report.instance.n0 = k.count(0);
    report.instance.dim = k.dim();
    report.instance.clusters = static_cast<int>(s0.cluster_ids.size());

    const PooledResult pooled = pool(k, s0);
    const NerveComplex nerve_complex = pool_via_nerve(k, to_cover(s0));
    report.max_row_sum_error = max_row_sum_deviation(pooled.assignment);

    if (s0.hard) {
        // Theorem check: same labelled simplex sets, same boundary supports.
        const int max_dim = std::max(pooled.output_dim(), nerve_complex.dim());
        for (int p = 0; p <= max_dim; ++p) {
            const std::vector<ClusterTuple> matrix_side =
                p <= pooled.output_dim() ? pooled.labels[static_cast<std::size_t>(p)]
                                         : std::vector<ClusterTuple>{};
            const std::vector<ClusterTuple> nerve_side = nerve_labels(nerve_complex, p);
            if (matrix_side != nerve_side) {
                std::set<ClusterTuple> m(matrix_side.begin(), matrix_side.end());
                std::set<ClusterTuple> n(nerve_side.begin(), nerve_side.end());
                for (const ClusterTuple& t : m) {
                    if (!n.contains(t)) {
                        report.detail = "dimension " + std::to_string(p) + ": simplex " +
                                        tuple_text(t) + " only in the matrix path";
                        return report;
                    }
                }
                for (const ClusterTuple& t : n) {
                    if (!m.contains(t)) {
                        report.detail = "dimension " + std::to_string(p) + ": simplex " +
                                        tuple_text(t) + " only in the nerve path";
                        return report;
                    }
                }
            }
        }
        for (int p = 1; p <= pooled.output_dim(); ++p) {
            const SparseMatrix nerve_boundary = boundary_matrix(nerve_complex, p, false).matrix;
            if (!pooled.boundaries[static_cast<std::size_t>(p)].same_support(nerve_boundary)) {
                const auto ms = pooled.boundaries[static_cast<std::size_t>(p)].support();
                const auto ns = nerve_boundary.support();
                std::vector<std::pair<int, int>> diff;
                std::set_symmetric_difference(ms.begin(), ms.end(), ns.begin(), ns.end(),
                                              std::back_inserter(diff));
                const auto [row, col] = diff.front();
                report.detail =
                    "boundary " + std::to_string(p) + ": entry (" +
                    tuple_text(pooled.labels[static_cast<std::size_t>(p - 1)]
                                             [static_cast<std::size_t>(row)]) +
                    ", " +
                    tuple_text(
                        pooled.labels[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)]) +
                    ") differs between the paths";
                return report;
            }
        }
    } else {
        // Soft criterion: off-diagonal upper-adjacency support must match the
        // nerve's, up to weights and self-loops.
        const int max_dim = std::max(pooled.output_dim(), nerve_complex.dim());
        for (int p = 0; p <= max_dim; ++p) {
            std::set<std::pair<ClusterTuple, ClusterTuple>> matrix_pairs;
            if (p <= pooled.output_dim()) {
                matrix_pairs = adjacency_pairs(pooled.adjacency_raw[static_cast<std::size_t>(p)],
                                               pooled.labels[static_cast<std::size_t>(p)]);
            }
            std::set<std::pair<ClusterTuple, ClusterTuple>> nerve_pairs;
            if (p <= nerve_complex.dim()) {
                nerve_pairs = adjacency_pairs(upper_adjacency(nerve_complex, p, false).matrix,
                                              nerve_labels(nerve_complex, p));
            }
            if (matrix_pairs != nerve_pairs) {
                std::vector<std::pair<ClusterTuple, ClusterTuple>> diff;
                std::set_symmetric_difference(matrix_pairs.begin(), matrix_pairs.end(),
                                              nerve_pairs.begin(), nerve_pairs.end(),
                                              std::back_inserter(diff));
                const auto& [a, b] = diff.front();
                report.detail = "adjacency " + std::to_string(p) + ": pair " + tuple_text(a) +
                                "-" + tuple_text(b) + " present in only one path";
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

VerificationReport check_identity(const SimplicialComplex& k) {
    VerificationReport report;
    report.instance.n0 = k.count(0);
    report.instance.dim = k.dim();
    report.instance.clusters = k.count(0);

    const PooledResult pooled = pool(k, singleton_assignment(k));
    report.max_row_sum_error = max_row_sum_deviation(pooled.assignment);
    // Singleton clusters carry the vertex tokens, so the relabelled pooled
    // complex must equal the input verbatim.
    const SimplicialComplex relabelled = pooled.label_complex();
    if (relabelled != k) {
        report.detail = "pooled support complex differs from the input";
        return report;
    }
    for (int p = 1; p <= k.dim(); ++p) {
        if (!pooled.boundaries[static_cast<std::size_t>(p)].same_support(
                boundary_matrix(k, p, false).matrix)) {
            report.detail = "boundary support differs at dimension " + std::to_string(p);
            return report;
        }
    }
    report.pass = true;
    return report;
}

VerificationReport check_permutation_invariance(const SimplicialComplex& k,
                                                const VertexAssignment& s0,
                                                const std::map<VertexId, VertexId>& perm) {
    VerificationReport report;
    report.instance.n0 = k.count(0);
    report.instance.dim = k.dim();
    report.instance.clusters = static_cast<int>(s0.cluster_ids.size());

    const SimplicialComplex permuted = permute_vertices(k, perm);
    std::vector<VertexAssignment::Membership> records;
    for (const Triplet& t : s0.weights.entries()) {
        records.push_back({perm.at(s0.vertex_ids[static_cast<std::size_t>(t.row)]),
                           s0.cluster_ids[static_cast<std::size_t>(t.col)], t.value});
    }
    const VertexAssignment permuted_s0 = VertexAssignment::from_memberships(permuted, records);

    const std::string base = canonical_serialization(pool(k, s0));
    const std::string other = canonical_serialization(pool(permuted, permuted_s0));
    if (base != other) {
        std::istringstream a(base);
        std::istringstream b(other);
        std::string line_a;
        std::string line_b;
        while (std::getline(a, line_a) && std::getline(b, line_b)) {
            if (line_a != line_b) {
                report.detail = "serialization differs: '" + line_a + "' vs '" + line_b + "'";
                return report;
            }
        }
        report.detail = "serializations differ in length";
        return report;
    }
    report.pass = true;
    return report;
}

namespace {

SimplicialComplex suite_complex(RngStream& rng, std::uint64_t& used_seed) {
    const int n0 = rng.uniform_int(4, 25);
    const int max_dim = rng.uniform_int(2, 4);
    const double densities[] = {0.3, 0.5, 0.8};
    const double density = densities[rng.uniform_int(0, 2)];
    used_seed = rng.next_u64();
    return random_complex(used_seed, n0, max_dim, density);
}

void record(BatchOutcome& outcome, VerificationReport report) {
    outcome.max_row_sum_error = std::max(outcome.max_row_sum_error, report.max_row_sum_error);
    if (report.pass) {
        ++outcome.passed;
    } else {
        ++outcome.failed;
        outcome.failures.push_back(std::move(report));
    }
}

}  // namespace

SuiteInstance equivalence_instance(std::uint64_t seed) {
    RngStream rng(seed);
    std::uint64_t complex_seed = 0;
    SimplicialComplex k = suite_complex(rng, complex_seed);
    const int clusters = rng.uniform_int(2, k.count(0));
    VertexAssignment s0 = random_hard_partition(rng.next_u64(), k, clusters);
    return {std::move(k), std::move(s0)};
}

BatchOutcome run_equivalence_suite(int instances, std::uint64_t base_seed) {
    BatchOutcome outcome;
    for (int i = 0; i < instances; ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        const SuiteInstance instance = equivalence_instance(seed);
        VerificationReport report = check_equivalence(instance.complex, instance.assignment);
        report.instance.seed = seed;
        record(outcome, std::move(report));
    }
    return outcome;
}

BatchOutcome run_identity_suite(int instances, std::uint64_t base_seed) {
    BatchOutcome outcome;
    for (int i = 0; i < instances; ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        RngStream rng(seed);
        std::uint64_t complex_seed = 0;
        const SimplicialComplex k = suite_complex(rng, complex_seed);
        VerificationReport report = check_identity(k);
        report.instance.seed = seed;
        record(outcome, std::move(report));
    }
    return outcome;
}

BatchOutcome run_permutation_suite(int instances, std::uint64_t base_seed) {
    BatchOutcome outcome;
    for (int i = 0; i < instances; ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        RngStream rng(seed);
        std::uint64_t complex_seed = 0;
        const SimplicialComplex k = suite_complex(rng, complex_seed);
        const int clusters = rng.uniform_int(2, k.count(0));
        const VertexAssignment s0 = random_hard_partition(rng.next_u64(), k, clusters);
        const std::map<VertexId, VertexId> perm = random_permutation(rng.next_u64(), k);
        VerificationReport report = check_permutation_invariance(k, s0, perm);
        report.instance.seed = seed;
        record(outcome, std::move(report));
    }
    return outcome;
}

BatchOutcome run_soft_suite(int instances, std::uint64_t base_seed) {
    BatchOutcome outcome;
    for (int i = 0; i < instances; ++i) {
        const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(i);
        const SoftInstance instance = random_soft_instance(seed);
        VerificationReport report = check_equivalence(instance.complex, instance.assignment);
        report.instance.seed = seed;
        if (extraneous_boundary_entries(pool(instance.complex, instance.assignment)) > 0) {
            ++outcome.instances_with_extraneous;
        }
        record(outcome, std::move(report));
    }
    return outcome;
}

}  // namespace nervepool
