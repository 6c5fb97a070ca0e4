#include "nervepool/simplicial_complex.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nervepool/errors.hpp"

namespace nervepool {

namespace {

std::string join(const std::vector<VertexId>& verts) {
    std::string s;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (i > 0) {
            s += ',';
        }
        s += verts[i];
    }
    return s;
}

}  // namespace

bool valid_token(const VertexId& token) {
    if (token.empty()) {
        return false;
    }
    for (unsigned char c : token) {
        if (c == ',' || std::isspace(c)) {
            return false;
        }
    }
    return true;
}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw MalformedInputError("simplex requires at least one vertex");
    }
    for (const VertexId& v : vertices_) {
        if (!valid_token(v)) {
            throw MalformedInputError("invalid vertex token '" + v + "'");
        }
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw MalformedInputError("duplicate vertex in simplex (" + join(vertices_) + ")");
    }
}

bool Simplex::contains(const VertexId& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::face_without(int i) const {
    std::vector<VertexId> verts = vertices_;
    verts.erase(verts.begin() + i);
    return Simplex(std::move(verts));
}

SimplicialComplex SimplicialComplex::from_maximal_simplices(
    const std::vector<std::vector<VertexId>>& maximal) {
    std::set<std::vector<VertexId>> closed;
    std::vector<std::vector<VertexId>> work;
    for (const auto& verts : maximal) {
        Simplex s(verts);
        if (closed.insert(s.vertices()).second) {
            work.push_back(s.vertices());
        }
    }
    while (!work.empty()) {
        std::vector<VertexId> verts = std::move(work.back());
        work.pop_back();
        if (verts.size() < 2) {
            continue;
        }
        for (std::size_t i = 0; i < verts.size(); ++i) {
            std::vector<VertexId> face;
            face.reserve(verts.size() - 1);
            for (std::size_t j = 0; j < verts.size(); ++j) {
                if (j != i) {
                    face.push_back(verts[j]);
                }
            }
            if (closed.insert(face).second) {
                work.push_back(std::move(face));
            }
        }
    }
    std::vector<Simplex> all;
    all.reserve(closed.size());
    for (const auto& verts : closed) {
        all.emplace_back(verts);
    }
    return from_simplices(all);
}

SimplicialComplex SimplicialComplex::from_simplices(const std::vector<Simplex>& simplices) {
    SimplicialComplex k;
    std::set<Simplex> unique(simplices.begin(), simplices.end());
    for (const Simplex& s : unique) {
        const auto d = static_cast<std::size_t>(s.dim());
        if (k.by_dim_.size() <= d) {
            k.by_dim_.resize(d + 1);
        }
        k.by_dim_[d].push_back(s);
    }
    for (auto& level : k.by_dim_) {
        std::sort(level.begin(), level.end());
    }
    return k;
}

int SimplicialComplex::count(int p) const {
    if (p < 0 || p > dim()) {
        return 0;
    }
    return static_cast<int>(by_dim_[static_cast<std::size_t>(p)].size());
}

std::size_t SimplicialComplex::total_count() const {
    std::size_t n = 0;
    for (const auto& level : by_dim_) {
        n += level.size();
    }
    return n;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int p) const {
    if (p < 0 || p > dim()) {
        throw DimensionError("dimension " + std::to_string(p) + " out of range");
    }
    return by_dim_[static_cast<std::size_t>(p)];
}

std::optional<int> SimplicialComplex::index_of(const Simplex& s) const {
    if (s.dim() > dim()) {
        return std::nullopt;
    }
    const auto& level = by_dim_[static_cast<std::size_t>(s.dim())];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it != level.end() && *it == s) {
        return static_cast<int>(it - level.begin());
    }
    return std::nullopt;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return index_of(s).has_value();
}

std::vector<VertexId> SimplicialComplex::vertex_ids() const {
    std::vector<VertexId> ids;
    if (dim() < 0) {
        return ids;
    }
    ids.reserve(by_dim_[0].size());
    for (const Simplex& s : by_dim_[0]) {
        ids.push_back(s.vertices()[0]);
    }
    return ids;
}

std::set<Simplex> star(const SimplicialComplex& k, const VertexId& v) {
    if (k.dim() < 0 || !k.contains(Simplex({v}))) {
        throw NotFoundError("vertex '" + v + "' not in complex");
    }
    std::set<Simplex> result;
    for (int p = 0; p <= k.dim(); ++p) {
        for (const Simplex& s : k.simplices(p)) {
            if (s.contains(v)) {
                result.insert(s);
            }
        }
    }
    return result;
}

SimplicialComplex permute_vertices(const SimplicialComplex& k,
                                   const std::map<VertexId, VertexId>& perm) {
    std::set<VertexId> images;
    for (const VertexId& v : k.vertex_ids()) {
        auto it = perm.find(v);
        if (it == perm.end()) {
            throw MalformedInputError("permutation does not map vertex '" + v + "'");
        }
        if (!images.insert(it->second).second) {
            throw MalformedInputError("permutation is not injective at '" + it->second + "'");
        }
    }
    std::vector<Simplex> renamed;
    renamed.reserve(k.total_count());
    for (int p = 0; p <= k.dim(); ++p) {
        for (const Simplex& s : k.simplices(p)) {
            std::vector<VertexId> verts;
            verts.reserve(s.vertices().size());
            for (const VertexId& v : s.vertices()) {
                verts.push_back(perm.at(v));
            }
            renamed.emplace_back(std::move(verts));
        }
    }
    return SimplicialComplex::from_simplices(renamed);
}

ValidationReport validate(const SimplicialComplex& k) {
    ValidationReport report;
    auto fail = [&report](const std::string& problem) {
        report.ok = false;
        report.problems.push_back(problem);
    };
    if (k.dim() < 0 || k.count(0) == 0) {
        fail("vertex set is empty");
        return report;
    }
    for (int p = 0; p <= k.dim(); ++p) {
        const auto& level = k.simplices(p);
        if (level.empty()) {
            fail("dimension " + std::to_string(p) + " has no simplices");
        }
        for (std::size_t i = 1; i < level.size(); ++i) {
            if (level[i] == level[i - 1]) {
                fail("duplicate simplex (" + join(level[i].vertices()) + ")");
            } else if (level[i] < level[i - 1]) {
                fail("ordering violation at (" + join(level[i].vertices()) + ")");
            }
        }
        if (p == 0) {
            continue;
        }
        for (const Simplex& s : level) {
            for (int i = 0; i <= s.dim(); ++i) {
                Simplex face = s.face_without(i);
                if (!k.contains(face)) {
                    fail("missing face (" + join(face.vertices()) + ") of (" +
                         join(s.vertices()) + ")");
                }
            }
        }
    }
    return report;
}

}  // namespace nervepool
