#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nervepool {

// Vertex identifiers are arbitrary non-empty text tokens without commas or
// whitespace.
using VertexId = std::string;

bool valid_token(const VertexId& token);

// A p-simplex in canonical form: distinct vertices, sorted ascending.
class Simplex {
  public:
    explicit Simplex(std::vector<VertexId> vertices);

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    const std::vector<VertexId>& vertices() const { return vertices_; }
    bool contains(const VertexId& v) const;
    // The face obtained by removing the i-th vertex of the sorted list.
    Simplex face_without(int i) const;

    auto operator<=>(const Simplex&) const = default;

  private:
    std::vector<VertexId> vertices_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

// Finite abstract simplicial complex, closed under taking faces. Simplices
// are stored per dimension in lexicographic order on their vertex lists,
// which fixes every matrix row/column index.
class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    // Downward closure of the given simplices.
    static SimplicialComplex from_maximal_simplices(
        const std::vector<std::vector<VertexId>>& maximal);
    // Builds directly from an already face-closed simplex set (deduplicated
    // and reordered canonically; closure is the caller's responsibility).
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    int count(int p) const;
    std::size_t total_count() const;
    const std::vector<Simplex>& simplices(int p) const;
    std::optional<int> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const;
    std::vector<VertexId> vertex_ids() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  private:
    std::vector<std::vector<Simplex>> by_dim_;
};

// All simplices of K containing v, including v itself. Not face-closed in
// general.
std::set<Simplex> star(const SimplicialComplex& k, const VertexId& v);

// Relabels vertices through a bijection on V(K).
SimplicialComplex permute_vertices(const SimplicialComplex& k,
                                   const std::map<VertexId, VertexId>& perm);

ValidationReport validate(const SimplicialComplex& k);

}  // namespace nervepool
