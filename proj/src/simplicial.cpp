#include "equichar/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "equichar/error.hpp"

namespace equichar {

namespace {

// All nonempty subsets of s (s itself included), via bitmasks.
std::vector<Simplex> nonempty_faces(const Simplex& s) {
    if (s.size() > 20) throw ResourceError("simplex too large for face enumeration");
    std::vector<Simplex> out;
    const std::uint32_t n = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Simplex f;
        for (std::uint32_t i = 0; i < n; ++i)
            if (mask & (1u << i)) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::string> check_vertex_names(std::vector<std::string> vertices) {
    std::set<std::string> seen;
    for (const auto& v : vertices) {
        if (v.empty()) throw InputError("empty vertex name");
        if (!seen.insert(v).second) throw InputError("duplicate vertex name '" + v + "'");
    }
    return vertices;
}

} // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertices,
                                                    const std::vector<Simplex>& simplices) {
    SimplicialComplex x;
    x.vertices_ = check_vertex_names(std::move(vertices));
    for (std::size_t i = 0; i < x.vertices_.size(); ++i) x.index_.emplace(x.vertices_[i], static_cast<VertexId>(i));
    for (VertexId v = 0; v < x.vertices_.size(); ++v) x.all_.insert(Simplex{v});
    for (Simplex s : simplices) {
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("simplex with repeated vertex");
        for (VertexId v : s)
            if (v >= x.vertices_.size()) throw InputError("simplex mentions an unknown vertex id");
        if (s.empty()) continue;
        for (auto& f : nonempty_faces(s)) x.all_.insert(std::move(f));
    }
    for (const auto& s : x.all_) {
        const std::size_t d = s.size() - 1;
        if (x.by_dim_.size() <= d) x.by_dim_.resize(d + 1);
        x.by_dim_[d].push_back(s);
    }
    for (auto& level : x.by_dim_) std::sort(level.begin(), level.end());
    x.neighbours_.assign(x.vertices_.size(), {});
    for (const auto& e : x.simplices(1)) {
        x.neighbours_[e[0]].insert(e[1]);
        x.neighbours_[e[1]].insert(e[0]);
    }
    return x;
}

SimplicialComplex SimplicialComplex::from_maximal_simplices(std::vector<std::string> vertices,
                                                            const std::vector<std::vector<std::string>>& facets) {
    std::map<std::string, VertexId> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<VertexId>(i));
    std::vector<Simplex> ids;
    for (const auto& f : facets) {
        Simplex s;
        for (const auto& name : f) {
            auto it = index.find(name);
            if (it == index.end()) throw InputError("facet mentions unknown vertex '" + name + "'");
            s.push_back(it->second);
        }
        ids.push_back(std::move(s));
    }
    return from_simplices(std::move(vertices), ids);
}

std::optional<VertexId> SimplicialComplex::vertex_id(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId SimplicialComplex::require_vertex(const std::string& name) const {
    auto id = vertex_id(name);
    if (!id) throw InputError("unknown vertex '" + name + "'");
    return *id;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
    static const std::vector<Simplex> none;
    if (dim < 0 || dim >= static_cast<int>(by_dim_.size())) return none;
    return by_dim_[static_cast<std::size_t>(dim)];
}

bool SimplicialComplex::contains(const Simplex& s) const { return s.empty() || all_.count(s) > 0; }

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(all_.size());
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (const auto& s : all_simplices()) {
        bool maximal = true;
        for (VertexId v = 0; v < vertices_.size() && maximal; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex t = s;
            t.insert(std::upper_bound(t.begin(), t.end(), v), v);
            if (all_.count(t)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

bool SimplicialComplex::adjacent(VertexId a, VertexId b) const { return neighbours_[a].count(b) > 0; }

std::size_t SimplicialComplex::degree(VertexId v) const { return neighbours_[v].size(); }

std::vector<std::string> SimplicialComplex::names(const Simplex& s) const {
    std::vector<std::string> out;
    for (VertexId v : s) out.push_back(vertices_[v]);
    return out;
}

std::string SimplicialComplex::label(const Simplex& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += vertices_[s[i]];
    }
    return out + "}";
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& names) const {
    Simplex s;
    for (const auto& n : names) s.push_back(require_vertex(n));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::set<std::vector<std::string>> SimplicialComplex::canonical() const {
    std::set<std::vector<std::string>> out;
    for (const auto& s : all_) {
        auto n = names(s);
        std::sort(n.begin(), n.end());
        out.insert(std::move(n));
    }
    return out;
}

// ---------------------------------------------------------------------------

SimplicialComplex flag_complex_from_graph(std::vector<std::string> vertices,
                                          const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, VertexId> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i], static_cast<VertexId>(i));
    const std::size_t n = vertices.size();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw InputError("edge mentions unknown vertex '" + (ia == index.end() ? a : b) + "'");
        if (ia->second == ib->second) throw InputError("self-loop at vertex '" + a + "'");
        if (adj[ia->second][ib->second]) throw InputError("duplicate edge {" + a + "," + b + "}");
        adj[ia->second][ib->second] = adj[ib->second][ia->second] = true;
    }
    // Grow cliques one vertex at a time, always appending a larger id.
    std::vector<Simplex> cliques;
    std::vector<Simplex> level;
    for (VertexId v = 0; v < n; ++v) level.push_back({v});
    while (!level.empty()) {
        std::vector<Simplex> next;
        for (const auto& c : level) {
            for (VertexId w = c.back() + 1; w < n; ++w) {
                bool ok = true;
                for (VertexId u : c)
                    if (!adj[u][w]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    Simplex d = c;
                    d.push_back(w);
                    next.push_back(std::move(d));
                }
            }
        }
        cliques.insert(cliques.end(), level.begin(), level.end());
        level = std::move(next);
    }
    return SimplicialComplex::from_simplices(std::move(vertices), cliques);
}

bool is_flag(const SimplicialComplex& x) {
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : x.simplices(1)) edges.emplace_back(x.vertices()[e[0]], x.vertices()[e[1]]);
    const SimplicialComplex clique = flag_complex_from_graph(x.vertices(), edges);
    return clique.simplex_count() == x.simplex_count();
}

std::int64_t euler_characteristic(const SimplicialComplex& x) {
    std::int64_t chi = 0;
    for (int d = 0; d <= x.dimension(); ++d) {
        const auto c = static_cast<std::int64_t>(x.count(d));
        chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& sigma) {
    if (!x.contains(sigma)) throw InputError("link: " + x.label(sigma) + " is not a simplex of the complex");
    if (sigma.empty()) return x;
    std::vector<Simplex> taus;
    std::set<VertexId> used;
    for (const auto& tau : x.all_simplices()) {
        bool disjoint = true;
        for (VertexId v : tau)
            if (std::binary_search(sigma.begin(), sigma.end(), v)) {
                disjoint = false;
                break;
            }
        if (!disjoint) continue;
        Simplex u;
        std::set_union(tau.begin(), tau.end(), sigma.begin(), sigma.end(), std::back_inserter(u));
        if (!x.contains(u)) continue;
        taus.push_back(tau);
        used.insert(tau.begin(), tau.end());
    }
    // Re-index onto the link's own vertex set, keeping X's order.
    std::vector<std::string> names;
    std::map<VertexId, VertexId> remap;
    for (VertexId v : used) {
        remap[v] = static_cast<VertexId>(names.size());
        names.push_back(x.vertices()[v]);
    }
    for (auto& t : taus)
        for (auto& v : t) v = remap.at(v);
    return SimplicialComplex::from_simplices(std::move(names), taus);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& x, const std::vector<VertexId>& subset) {
    std::vector<VertexId> keep = subset;
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::map<VertexId, VertexId> remap;
    std::vector<std::string> names;
    for (VertexId v : keep) {
        if (v >= x.vertex_count()) throw InputError("full_subcomplex: vertex id out of range");
        remap[v] = static_cast<VertexId>(names.size());
        names.push_back(x.vertices()[v]);
    }
    std::vector<Simplex> kept;
    for (const auto& s : x.all_simplices()) {
        bool inside = true;
        for (VertexId v : s)
            if (!remap.count(v)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        Simplex t;
        for (VertexId v : s) t.push_back(remap.at(v));
        kept.push_back(std::move(t));
    }
    return SimplicialComplex::from_simplices(std::move(names), kept);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& x, const std::vector<std::string>& subset) {
    std::vector<VertexId> ids;
    for (const auto& n : subset) ids.push_back(x.require_vertex(n));
    return full_subcomplex(x, ids);
}

ChainComplexZ augmented_chain_complex(const SimplicialComplex& x) {
    std::vector<IntegerMatrix> boundaries;
    std::vector<std::vector<std::string>> labels;
    boundaries.emplace_back(0, 1); // degree -1: the empty simplex
    labels.push_back({"{}"});
    IntegerMatrix aug(1, x.count(0));
    for (std::size_t j = 0; j < x.count(0); ++j) aug(0, j) = 1;
    if (x.dimension() >= 0) {
        boundaries.push_back(std::move(aug));
        std::vector<std::string> l;
        for (const auto& s : x.simplices(0)) l.push_back(x.label(s));
        labels.push_back(std::move(l));
    }
    for (int d = 1; d <= x.dimension(); ++d) {
        const auto& rows = x.simplices(d - 1);
        const auto& cols = x.simplices(d);
        std::map<Simplex, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);
        IntegerMatrix b(rows.size(), cols.size());
        std::vector<std::string> l;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Simplex& s = cols[j];
            for (std::size_t k = 0; k < s.size(); ++k) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                b(row_index.at(face), j) = (k % 2 == 0) ? 1 : -1;
            }
            l.push_back(x.label(s));
        }
        boundaries.push_back(std::move(b));
        labels.push_back(std::move(l));
    }
    return ChainComplexZ(-1, std::move(boundaries), std::move(labels));
}

std::map<int, HomologyGroup> reduced_homology(const SimplicialComplex& x) {
    return homology(augmented_chain_complex(x));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& x) {
    const std::vector<Simplex> faces = x.all_simplices();
    std::map<Simplex, VertexId> index;
    std::vector<std::string> names;
    for (const auto& s : faces) {
        index.emplace(s, static_cast<VertexId>(names.size()));
        names.push_back(x.label(s));
    }
    // Maximal chains suffice: descend from each facet by removing one vertex at a time.
    std::vector<Simplex> chains;
    std::function<void(const Simplex&, Simplex&)> descend = [&](const Simplex& current, Simplex& chain) {
        chain.push_back(index.at(current));
        if (current.size() == 1) {
            chains.push_back(chain);
        } else {
            for (std::size_t k = 0; k < current.size(); ++k) {
                Simplex face = current;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
                descend(face, chain);
            }
        }
        chain.pop_back();
    };
    for (const auto& f : x.facets()) {
        Simplex chain;
        descend(f, chain);
    }
    return SimplicialComplex::from_simplices(std::move(names), chains);
}

// ---------------------------------------------------------------------------
// Embedding search

std::vector<VertexId> Embedding::image_set() const {
    std::vector<VertexId> s = image;
    std::sort(s.begin(), s.end());
    return s;
}

SimplicialComplex relabel(const SimplicialComplex& x, const std::vector<std::string>& new_names) {
    if (new_names.size() != x.vertex_count()) throw InputError("relabel: name count mismatch");
    return SimplicialComplex::from_simplices(new_names, x.all_simplices());
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const SimplicialComplex& host, const SimplicialComplex& pattern) : host_(host), pattern_(pattern) {
        order_.resize(pattern.vertex_count());
        std::iota(order_.begin(), order_.end(), VertexId{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](VertexId a, VertexId b) { return pattern.degree(a) > pattern.degree(b); });
        image_.assign(pattern.vertex_count(), 0);
        used_.assign(host.vertex_count(), false);
    }

    std::optional<Embedding> run() {
        if (pattern_.vertex_count() > host_.vertex_count()) return std::nullopt;
        if (extend(0)) return Embedding{image_};
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return verify();
        const VertexId pv = order_[depth];
        for (VertexId hv = 0; hv < host_.vertex_count(); ++hv) {
            if (used_[hv] || host_.degree(hv) < pattern_.degree(pv)) continue;
            bool consistent = true;
            for (std::size_t k = 0; k < depth && consistent; ++k) {
                const VertexId other = order_[k];
                consistent = pattern_.adjacent(pv, other) == host_.adjacent(hv, image_[other]);
            }
            if (!consistent) continue;
            image_[pv] = hv;
            used_[hv] = true;
            if (extend(depth + 1)) return true;
            used_[hv] = false;
        }
        return false;
    }

    // The 1-skeleton agrees; check every higher simplex both ways.
    bool verify() const {
        for (const auto& s : pattern_.all_simplices()) {
            Simplex t;
            for (VertexId v : s) t.push_back(image_[v]);
            std::sort(t.begin(), t.end());
            if (!host_.contains(t)) return false;
        }
        std::vector<VertexId> img = image_;
        std::sort(img.begin(), img.end());
        return full_subcomplex(host_, img).simplex_count() == pattern_.simplex_count();
    }

    const SimplicialComplex& host_;
    const SimplicialComplex& pattern_;
    std::vector<VertexId> order_;
    std::vector<VertexId> image_;
    std::vector<bool> used_;
};

} // namespace

std::optional<Embedding> find_full_subcomplex_isomorphic(const SimplicialComplex& host, const SimplicialComplex& pattern) {
    return EmbeddingSearch(host, pattern).run();
}

bool are_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension()) return false;
    for (int d = 0; d <= a.dimension(); ++d)
        if (a.count(d) != b.count(d)) return false;
    return find_full_subcomplex_isomorphic(b, a).has_value();
}

} // namespace equichar
