#include <map>
#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "nervepool/boundary.hpp"
#include "nervepool/generators.hpp"
#include "nervepool/homology.hpp"

using namespace nervepool;

namespace {

// Union-find over the 1-skeleton, as an independent component counter.
int component_count(const SimplicialComplex& k) {
    std::vector<int> parent(static_cast<std::size_t>(k.count(0)));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    if (k.dim() >= 1) {
        for (const Simplex& e : k.simplices(1)) {
            const int a = find(*k.index_of(Simplex({e.vertices()[0]})));
            const int b = find(*k.index_of(Simplex({e.vertices()[1]})));
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
            }
        }
    }
    int components = 0;
    for (int v = 0; v < k.count(0); ++v) {
        if (find(v) == v) {
            ++components;
        }
    }
    return components;
}

}  // namespace

TEST_CASE("GF(2) ranks") {
    std::vector<Triplet> eye = {{0, 0, 1.0}, {1, 1, 1.0}, {2, 2, 1.0}};
    CHECK(rank_gf2(SparseMatrix::from_triplets(3, 3, eye)) == 3);
    CHECK(rank_gf2(SparseMatrix(4, 7)) == 0);

    const SimplicialComplex k = testing::example_complex();
    CHECK(rank_gf2(boundary_matrix(k, 1, false).matrix) == 4);
}

TEST_CASE("Betti numbers of the worked examples") {
    CHECK(betti(testing::example_complex()) == BettiVector{1, 1, 0});
    CHECK(betti(SimplicialComplex::from_maximal_simplices({{"a"}})) == BettiVector{1});

    const SimplicialComplex hollow =
        SimplicialComplex::from_maximal_simplices({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(betti(hollow) == BettiVector{1, 1});

    const SimplicialComplex tetra =
        SimplicialComplex::from_maximal_simplices({{"a", "b", "c", "d"}});
    CHECK(betti(tetra) == BettiVector{1, 0, 0, 0});
}

TEST_CASE("Euler characteristic consistency") {
    for (std::uint64_t seed = 700; seed < 720; ++seed) {
        RngStream rng(seed);
        const SimplicialComplex k = random_complex(rng.next_u64(), rng.uniform_int(4, 18),
                                                   rng.uniform_int(1, 4), rng.uniform01());
        const BettiVector b = betti(k);
        long chi_counts = 0;
        long chi_betti = 0;
        for (int p = 0; p <= k.dim(); ++p) {
            const long sign = p % 2 == 0 ? 1 : -1;
            chi_counts += sign * k.count(p);
            chi_betti += sign * b[static_cast<std::size_t>(p)];
        }
        CAPTURE(seed);
        CHECK(chi_counts == chi_betti);
        CHECK(b[0] == component_count(k));
        CHECK(b[0] >= 1);
    }
}

TEST_CASE("Betti numbers add over disjoint unions") {
    for (std::uint64_t seed = 800; seed < 810; ++seed) {
        const SimplicialComplex a = random_complex(seed, 8, 3, 0.5);
        const SimplicialComplex b = random_complex(seed + 1000, 7, 2, 0.6);
        std::vector<Simplex> combined;
        std::map<VertexId, VertexId> rename_a;
        std::map<VertexId, VertexId> rename_b;
        for (const VertexId& v : a.vertex_ids()) {
            rename_a[v] = "a_" + v;
        }
        for (const VertexId& v : b.vertex_ids()) {
            rename_b[v] = "b_" + v;
        }
        const SimplicialComplex a2 = permute_vertices(a, rename_a);
        const SimplicialComplex b2 = permute_vertices(b, rename_b);
        for (int p = 0; p <= a2.dim(); ++p) {
            for (const Simplex& s : a2.simplices(p)) {
                combined.push_back(s);
            }
        }
        for (int p = 0; p <= b2.dim(); ++p) {
            for (const Simplex& s : b2.simplices(p)) {
                combined.push_back(s);
            }
        }
        const SimplicialComplex both = SimplicialComplex::from_simplices(combined);
        const BettiVector ba = betti(a);
        const BettiVector bb = betti(b);
        BettiVector expected(static_cast<std::size_t>(std::max(a.dim(), b.dim())) + 1, 0);
        for (std::size_t p = 0; p < ba.size(); ++p) {
            expected[p] += ba[p];
        }
        for (std::size_t p = 0; p < bb.size(); ++p) {
            expected[p] += bb[p];
        }
        CAPTURE(seed);
        CHECK(betti(both) == expected);
    }
}
