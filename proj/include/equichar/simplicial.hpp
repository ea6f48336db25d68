#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "equichar/chain_complex.hpp"

namespace equichar {

using VertexId = std::uint32_t;
/// Strictly increasing vertex ids. The empty simplex is the empty vector.
using Simplex = std::vector<VertexId>;

/// Finite abstract simplicial complex on named vertices.
///
/// Every declared vertex is a 0-simplex. The empty simplex is implicit and
/// never stored; the empty complex has no vertices and dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of the facets. Throws InputError on unknown or duplicate
    /// vertex names.
    static SimplicialComplex from_maximal_simplices(std::vector<std::string> vertices,
                                                    const std::vector<std::vector<std::string>>& facets);
    /// Same, with facets given by vertex ids.
    static SimplicialComplex from_simplices(std::vector<std::string> vertices, const std::vector<Simplex>& simplices);

    const std::vector<std::string>& vertices() const { return vertices_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::optional<VertexId> vertex_id(const std::string& name) const;
    VertexId require_vertex(const std::string& name) const;

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const { return vertices_.empty(); }

    const std::vector<Simplex>& simplices(int dim) const;
    std::size_t count(int dim) const { return simplices(dim).size(); }
    std::size_t simplex_count() const { return all_.size(); }
    /// The empty simplex counts as contained.
    bool contains(const Simplex& s) const;
    /// All nonempty simplices, ordered by dimension then lexicographically.
    std::vector<Simplex> all_simplices() const;
    std::vector<Simplex> facets() const;

    bool adjacent(VertexId a, VertexId b) const;
    std::size_t degree(VertexId v) const;

    /// Ids to names, sorted by id.
    std::vector<std::string> names(const Simplex& s) const;
    /// "{u,v1}" / "{}" for the empty simplex.
    std::string label(const Simplex& s) const;
    /// Simplex from vertex names (sorted, deduplicated).
    Simplex simplex_of(const std::vector<std::string>& names) const;

    /// Set of simplices as sorted name tuples; complexes with equal canonical
    /// forms are equal regardless of vertex order.
    std::set<std::vector<std::string>> canonical() const;
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.canonical() == b.canonical();
    }

private:
    std::vector<std::string> vertices_;
    std::map<std::string, VertexId, std::less<>> index_;
    std::vector<std::vector<Simplex>> by_dim_;
    std::set<Simplex> all_;
    std::vector<std::set<VertexId>> neighbours_;
};

/// Clique complex of a simple graph. Throws InputError for self-loops,
/// duplicate edges or unknown vertices.
SimplicialComplex flag_complex_from_graph(std::vector<std::string> vertices,
                                          const std::vector<std::pair<std::string, std::string>>& edges);

/// True iff every clique of the 1-skeleton is a simplex.
bool is_flag(const SimplicialComplex& x);

/// Alternating count of simplices; 0 for the empty complex.
std::int64_t euler_characteristic(const SimplicialComplex& x);

/// {tau : tau and sigma disjoint, tau u sigma in X}. Link of the empty
/// simplex is X. Throws InputError if sigma is not a simplex of X.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma);

/// All simplices of X with vertices in the subset.
SimplicialComplex full_subcomplex(const SimplicialComplex& x, const std::vector<VertexId>& subset);
SimplicialComplex full_subcomplex(const SimplicialComplex& x, const std::vector<std::string>& subset);

/// Simplicial chain complex augmented in degree -1 (the empty simplex).
ChainComplexZ augmented_chain_complex(const SimplicialComplex& x);

/// Reduced integral homology in degrees -1 .. dim X. The empty complex has
/// Z in degree -1 and nothing else.
std::map<int, HomologyGroup> reduced_homology(const SimplicialComplex& x);

/// Order complex of the face poset. Vertex names are simplex labels.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& x);

/// Injective vertex map pattern -> host whose image spans a full subcomplex
/// isomorphic to the pattern.
struct Embedding {
    std::vector<VertexId> image; // indexed by pattern vertex id

    std::vector<VertexId> image_set() const;
};

/// Exact backtracking search with degree pruning; returns the first
/// embedding in lexicographic order of host vertex choices along the search
/// order (pattern vertices by decreasing degree).
std::optional<Embedding> find_full_subcomplex_isomorphic(const SimplicialComplex& host, const SimplicialComplex& pattern);

/// Applies a vertex relabelling given as names and returns the resulting
/// complex; used to check isomorphism claims.
SimplicialComplex relabel(const SimplicialComplex& x, const std::vector<std::string>& new_names);

/// Brute-force isomorphism test for small complexes.
bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

} // namespace equichar
