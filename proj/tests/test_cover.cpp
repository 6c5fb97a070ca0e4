#include "doctest.h"
#include "fixtures.hpp"
#include "nervepool/cover.hpp"
#include "nervepool/errors.hpp"
#include "nervepool/generators.hpp"
#include "nervepool/pooling.hpp"

using namespace nervepool;

TEST_CASE("extended cover is the union of stars") {
    const SimplicialComplex k = testing::example_complex();
    const VertexCover cover = VertexCover::create({
        {"U1", {"v0", "v4"}},
        {"U2", {"v1", "v2", "v3"}},
    });
    CHECK(cover.hard);

    const ExtendedCover ext = extend_cover(k, cover);
    REQUIRE(ext.elements.size() == 2);
    CHECK(ext.elements[0].simplices ==
          std::set<Simplex>{Simplex({"v0"}), Simplex({"v4"}), Simplex({"v0", "v1"}),
                            Simplex({"v3", "v4"}), Simplex({"v0", "v4"})});

    // A singleton cluster extends to exactly the star of its vertex.
    const VertexCover singletons = VertexCover::create({
        {"a", {"v0"}}, {"b", {"v1"}}, {"c", {"v2"}}, {"d", {"v3"}}, {"e", {"v4"}},
    });
    const ExtendedCover ext_singletons = extend_cover(k, singletons);
    CHECK(ext_singletons.elements[0].simplices == star(k, "v0"));

    // One cluster holding every vertex extends to the whole simplex set.
    const VertexCover everything = VertexCover::create({
        {"all", {"v0", "v1", "v2", "v3", "v4"}},
    });
    CHECK(extend_cover(k, everything).elements[0].simplices.size() == k.total_count());
}

TEST_CASE("uncovered vertices are rejected") {
    const SimplicialComplex k = testing::example_complex();
    const VertexCover partial = VertexCover::create({{"U1", {"v0", "v1", "v2"}}});
    CHECK_THROWS_AS(extend_cover(k, partial), IncompleteCoverError);
}

TEST_CASE("nerve of the example two-cluster partition is one edge") {
    const SimplicialComplex k = testing::example_complex();
    const VertexCover cover = VertexCover::create({
        {"U1", {"v0", "v4"}},
        {"U2", {"v1", "v2", "v3"}},
    });
    const NerveComplex n = pool_via_nerve(k, cover);
    CHECK(n.dim() == 1);
    CHECK(n.count(0) == 2);
    CHECK(n.count(1) == 1);
    CHECK(n.contains(Simplex({"U1", "U2"})));
    CHECK(validate(n).ok);
}

TEST_CASE("nerve of a single cluster is a point") {
    const SimplicialComplex k = testing::example_complex();
    const VertexCover cover =
        VertexCover::create({{"all", {"v0", "v1", "v2", "v3", "v4"}}});
    const NerveComplex n = pool_via_nerve(k, cover);
    CHECK(n.dim() == 0);
    CHECK(n.count(0) == 1);
}

TEST_CASE("clusters on separate components give isolated nerve vertices") {
    const SimplicialComplex k =
        SimplicialComplex::from_maximal_simplices({{"a", "b"}, {"c", "d"}});
    const VertexCover cover = VertexCover::create({
        {"left", {"a", "b"}},
        {"right", {"c", "d"}},
    });
    const NerveComplex n = pool_via_nerve(k, cover);
    CHECK(n.dim() == 0);
    CHECK(n.count(0) == 2);
}

TEST_CASE("a 3-dimensional complex with four clusters can pool to dimension 2") {
    // Tetrahedron with a tail edge; the fourth cluster only meets the third.
    const SimplicialComplex k =
        SimplicialComplex::from_maximal_simplices({{"a", "b", "c", "d"}, {"d", "e"}});
    CHECK(k.dim() == 3);
    const VertexCover cover = VertexCover::create({
        {"U1", {"a", "b"}},
        {"U2", {"c"}},
        {"U3", {"d"}},
        {"U4", {"e"}},
    });
    const NerveComplex n = pool_via_nerve(k, cover);
    CHECK(n.dim() == 2);
    CHECK(n.contains(Simplex({"U1", "U2", "U3"})));
    CHECK(n.contains(Simplex({"U3", "U4"})));
    CHECK_FALSE(n.contains(Simplex({"U1", "U4"})));
}

TEST_CASE("singleton clusters reproduce the complex") {
    const SimplicialComplex k = testing::example_complex();
    const NerveComplex n = pool_via_nerve(k, to_cover(singleton_assignment(k)));
    CHECK(n == k);
}

TEST_CASE("nerve properties on random instances") {
    for (std::uint64_t seed = 400; seed < 415; ++seed) {
        RngStream rng(seed);
        const SimplicialComplex k = random_complex(rng.next_u64(), rng.uniform_int(4, 15),
                                                   rng.uniform_int(1, 3), 0.5);
        const int clusters = rng.uniform_int(2, k.count(0));
        const VertexAssignment s0 = random_hard_partition(rng.next_u64(), k, clusters);
        const VertexCover cover = to_cover(s0);
        const NerveComplex n = pool_via_nerve(k, cover);
        CAPTURE(seed);
        CHECK(validate(n).ok);
        CHECK(n.dim() + 1 <= static_cast<int>(cover.clusters.size()));
        CHECK(n.count(0) == static_cast<int>(cover.clusters.size()));

        // Growing a cluster never removes nerve simplices.
        VertexCover grown = cover;
        const std::vector<VertexId> vertices = k.vertex_ids();
        grown.clusters[static_cast<std::size_t>(rng.uniform_int(
                           0, static_cast<int>(grown.clusters.size()) - 1))]
            .vertices.insert(vertices[static_cast<std::size_t>(
                rng.uniform_int(0, static_cast<int>(vertices.size()) - 1))]);
        grown = VertexCover::create(grown.clusters);
        const NerveComplex bigger = pool_via_nerve(k, grown);
        for (int p = 0; p <= n.dim(); ++p) {
            for (const Simplex& s : n.simplices(p)) {
                CHECK(bigger.contains(s));
            }
        }
    }
}

TEST_CASE("soft covers are accepted") {
    const SimplicialComplex k = testing::example_complex();
    const VertexCover soft = VertexCover::create({
        {"U1", {"v0", "v1", "v4"}},
        {"U2", {"v1", "v2", "v3"}},
    });
    CHECK_FALSE(soft.hard);
    const NerveComplex n = pool_via_nerve(k, soft);
    CHECK(validate(n).ok);
    CHECK(n.contains(Simplex({"U1", "U2"})));
}
