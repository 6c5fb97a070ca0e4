#include "doctest.h"
#include "fixtures.hpp"
#include "nervepool/errors.hpp"
#include "nervepool/generators.hpp"
#include "nervepool/simplicial_complex.hpp"

using namespace nervepool;

TEST_CASE("downward closure of the example complex") {
    const SimplicialComplex k = testing::example_complex();
    CHECK(k.dim() == 2);
    CHECK(k.count(0) == 5);
    CHECK(k.count(1) == 6);
    CHECK(k.count(2) == 1);

    std::vector<Simplex> expected_edges = {
        Simplex({"v0", "v1"}), Simplex({"v0", "v4"}), Simplex({"v1", "v2"}),
        Simplex({"v1", "v3"}), Simplex({"v2", "v3"}), Simplex({"v3", "v4"}),
    };
    CHECK(k.simplices(1) == expected_edges);
    CHECK(k.simplices(2) == std::vector<Simplex>{Simplex({"v1", "v2", "v3"})});
}

TEST_CASE("single vertex complex") {
    const SimplicialComplex k = SimplicialComplex::from_maximal_simplices({{"a"}});
    CHECK(k.dim() == 0);
    CHECK(k.count(0) == 1);
    CHECK(validate(k).ok);
}

TEST_CASE("full simplex closure has binomial counts") {
    const SimplicialComplex k = SimplicialComplex::from_maximal_simplices({{"a", "b", "c", "d"}});
    CHECK(k.dim() == 3);
    CHECK(k.count(0) == 4);
    CHECK(k.count(1) == 6);
    CHECK(k.count(2) == 4);
    CHECK(k.count(3) == 1);
}

TEST_CASE("duplicate vertex inside a simplex is rejected") {
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices({{"a", "a"}}), MalformedInputError);
    CHECK_THROWS_AS(Simplex({}), MalformedInputError);
}

TEST_CASE("star of a vertex") {
    const SimplicialComplex k = testing::example_complex();
    const std::set<Simplex> st2 = star(k, "v2");
    CHECK(st2 == std::set<Simplex>{Simplex({"v2"}), Simplex({"v1", "v2"}), Simplex({"v2", "v3"}),
                                   Simplex({"v1", "v2", "v3"})});
    const std::set<Simplex> st1 = star(k, "v1");
    CHECK(st1 == std::set<Simplex>{Simplex({"v1"}), Simplex({"v0", "v1"}), Simplex({"v1", "v2"}),
                                   Simplex({"v1", "v3"}), Simplex({"v1", "v2", "v3"})});

    const SimplicialComplex isolated = SimplicialComplex::from_maximal_simplices({{"a"}});
    CHECK(star(isolated, "a") == std::set<Simplex>{Simplex({"a"})});

    CHECK_THROWS_AS(star(k, "missing"), NotFoundError);
}

TEST_CASE("vertex permutations") {
    const SimplicialComplex k = testing::example_complex();
    std::map<VertexId, VertexId> identity;
    std::map<VertexId, VertexId> swap;
    for (const VertexId& v : k.vertex_ids()) {
        identity[v] = v;
        swap[v] = v;
    }
    swap["v0"] = "v4";
    swap["v4"] = "v0";

    CHECK(permute_vertices(k, identity) == k);

    const SimplicialComplex swapped = permute_vertices(k, swap);
    CHECK(swapped.count(0) == 5);
    CHECK(swapped.count(1) == 6);
    CHECK(swapped.count(2) == 1);
    CHECK(permute_vertices(swapped, swap) == k);

    std::map<VertexId, VertexId> collapse = identity;
    collapse["v0"] = "v1";
    CHECK_THROWS_AS(permute_vertices(k, collapse), MalformedInputError);
    std::map<VertexId, VertexId> partial;
    CHECK_THROWS_AS(permute_vertices(k, partial), MalformedInputError);
}

TEST_CASE("validation reports missing faces and empty complexes") {
    CHECK(validate(testing::example_complex()).ok);

    // Triangle stored without the edge (v1,v2).
    const SimplicialComplex broken = SimplicialComplex::from_simplices({
        Simplex({"v1"}),
        Simplex({"v2"}),
        Simplex({"v3"}),
        Simplex({"v1", "v3"}),
        Simplex({"v2", "v3"}),
        Simplex({"v1", "v2", "v3"}),
    });
    const ValidationReport report = validate(broken);
    CHECK_FALSE(report.ok);
    bool names_missing_face = false;
    for (const std::string& problem : report.problems) {
        if (problem.find("v1,v2") != std::string::npos) {
            names_missing_face = true;
        }
    }
    CHECK(names_missing_face);

    CHECK_FALSE(validate(SimplicialComplex{}).ok);
}

TEST_CASE("random complexes always validate") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        RngStream rng(seed);
        const int n = rng.uniform_int(1, 20);
        const int max_dim = rng.uniform_int(0, 4);
        const double density = rng.uniform01();
        const SimplicialComplex k = random_complex(seed, n, max_dim, density);
        CAPTURE(seed);
        CHECK(validate(k).ok);
    }
}
