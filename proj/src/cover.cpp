#include "nervepool/cover.hpp"

#include <algorithm>
#include <map>

#include "nervepool/errors.hpp"

namespace nervepool {

VertexCover VertexCover::create(std::vector<Cluster> clusters) {
    std::set<ClusterId> seen_ids;
    std::set<VertexId> seen_vertices;
    bool disjoint = true;
    for (const Cluster& c : clusters) {
        if (!valid_token(c.id)) {
            throw MalformedInputError("invalid cluster token '" + c.id + "'");
        }
        if (!seen_ids.insert(c.id).second) {
            throw MalformedInputError("duplicate cluster id '" + c.id + "'");
        }
        if (c.vertices.empty()) {
            throw MalformedInputError("cluster '" + c.id + "' is empty");
        }
        for (const VertexId& v : c.vertices) {
            if (!seen_vertices.insert(v).second) {
                disjoint = false;
            }
        }
    }
    VertexCover cover;
    cover.clusters = std::move(clusters);
    cover.hard = disjoint;
    return cover;
}

ExtendedCover extend_cover(const SimplicialComplex& k, const VertexCover& cover) {
    std::set<VertexId> covered;
    for (const auto& cluster : cover.clusters) {
        covered.insert(cluster.vertices.begin(), cluster.vertices.end());
    }
    for (const VertexId& v : k.vertex_ids()) {
        if (!covered.contains(v)) {
            throw IncompleteCoverError("vertex '" + v + "' is not covered by any cluster");
        }
    }
    ExtendedCover ext;
    ext.elements.reserve(cover.clusters.size());
    for (const auto& cluster : cover.clusters) {
        ExtendedCover::Element element{cluster.id, {}};
        for (const VertexId& v : cluster.vertices) {
            std::set<Simplex> st = star(k, v);
            element.simplices.insert(st.begin(), st.end());
        }
        ext.elements.push_back(std::move(element));
    }
    return ext;
}

NerveComplex nerve(const ExtendedCover& ext) {
    if (ext.elements.empty()) {
        throw MalformedInputError("nerve of an empty cover");
    }
    // Invert the simplex -> elements membership map: each simplex of the host
    // complex witnesses exactly the set of clusters whose extended element
    // contains it, and the nerve is the downward closure of these witness
    // sets.
    std::map<Simplex, std::vector<ClusterId>> witnesses;
    for (const auto& element : ext.elements) {
        for (const Simplex& s : element.simplices) {
            witnesses[s].push_back(element.id);
        }
    }
    std::set<std::vector<ClusterId>> distinct;
    for (auto& [simplex, ids] : witnesses) {
        std::sort(ids.begin(), ids.end());
        distinct.insert(ids);
    }
    std::vector<std::vector<ClusterId>> maximal(distinct.begin(), distinct.end());
    return SimplicialComplex::from_maximal_simplices(maximal);
}

NerveComplex pool_via_nerve(const SimplicialComplex& k, const VertexCover& cover) {
    return nerve(extend_cover(k, cover));
}

}  // namespace nervepool
