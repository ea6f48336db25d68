#include "equichar/action.hpp"

#include <algorithm>

#include "equichar/error.hpp"

namespace equichar {

GroupAction GroupAction::create(SimplicialComplex x, FiniteGroup g, std::vector<Permutation> vertex_maps) {
    if (vertex_maps.size() != g.order()) throw InputError("action: need one vertex map per group element");
    for (const auto& m : vertex_maps)
        if (m.degree() != x.vertex_count()) throw InputError("action: vertex map has the wrong degree");
    if (!vertex_maps[FiniteGroup::identity()].is_identity())
        throw InputError("action: identity element does not act trivially");
    // Homomorphism: checking products with generators covers the whole group.
    for (const auto& gen : g.generators()) {
        const ElementId s = g.id_of(gen);
        for (ElementId e = 0; e < g.order(); ++e)
            if (vertex_maps[g.multiply(e, s)] != vertex_maps[e] * vertex_maps[s])
                throw InputError("action: vertex maps do not form a homomorphism");
    }
    GroupAction a;
    a.complex_ = std::move(x);
    a.group_ = std::move(g);
    a.maps_ = std::move(vertex_maps);
    for (const auto& gen : a.group_.generators()) {
        const ElementId s = a.group_.id_of(gen);
        for (const auto& sigma : a.complex_.all_simplices())
            if (!a.complex_.contains(a.apply(s, sigma)))
                throw InputError("action: " + a.group_.cycles(s) + " maps simplex " + a.complex_.label(sigma) +
                                 " to a non-simplex");
    }
    return a;
}

GroupAction GroupAction::of_permutation_group(SimplicialComplex x, FiniteGroup g) {
    if (g.points().size() != x.vertex_count()) throw InputError("action: group points differ from complex vertices");
    // Translate group points to vertex ids by name.
    std::vector<VertexId> to_vertex(g.points().size());
    for (std::size_t i = 0; i < g.points().size(); ++i) to_vertex[i] = x.require_vertex(g.points()[i]);
    std::vector<Permutation> maps;
    maps.reserve(g.order());
    for (const auto& p : g.elements()) {
        std::vector<Point> images(x.vertex_count());
        for (std::size_t i = 0; i < g.points().size(); ++i) images[to_vertex[i]] = to_vertex[p(static_cast<Point>(i))];
        maps.emplace_back(std::move(images));
    }
    return create(std::move(x), std::move(g), std::move(maps));
}

Simplex GroupAction::apply(ElementId e, const Simplex& s) const {
    Simplex t;
    t.reserve(s.size());
    for (VertexId v : s) t.push_back(maps_[e](v));
    std::sort(t.begin(), t.end());
    return t;
}

AdmissibilityResult is_admissible(const GroupAction& a) {
    const auto simplices = a.complex().all_simplices();
    for (ElementId e = 0; e < a.group().order(); ++e)
        for (const auto& s : simplices) {
            if (a.apply(e, s) != s) continue;
            for (VertexId v : s)
                if (a.vertex_map(e)(v) != v) return {false, e, s};
        }
    return {};
}

std::vector<VertexId> fixed_vertices(const GroupAction& a, const Subgroup& h) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < a.complex().vertex_count(); ++v) {
        bool fixed = true;
        for (ElementId e : h.elements())
            if (a.vertex_map(e)(v) != v) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(v);
    }
    return out;
}

SimplicialComplex fixed_subcomplex(const GroupAction& a, const Subgroup& h) {
    if (!is_subgroup(a.group(), h)) throw InputError("fixed_subcomplex: not a subgroup of the acting group");
    const auto adm = is_admissible(a);
    if (!adm.admissible)
        throw PreconditionError("action is not admissible: " + a.group().cycles(*adm.element) + " fixes " +
                                a.complex().label(*adm.simplex) + " setwise but not pointwise");
    return full_subcomplex(a.complex(), fixed_vertices(a, h));
}

InducedAction induced_quotient_action(const GroupAction& a, const Subgroup& h) {
    const FiniteGroup& k = a.group();
    const Subgroup n = normalizer(k, h);
    QuotientGroup w = quotient(k, n, h);
    SimplicialComplex fixed = fixed_subcomplex(a, h);

    std::vector<VertexId> host_ids;
    for (const auto& name : fixed.vertices()) host_ids.push_back(a.complex().require_vertex(name));

    // Any coset representative acts the same way on X^H because H fixes it pointwise.
    std::vector<Permutation> maps;
    for (ElementId q = 0; q < w.group.order(); ++q) {
        const Permutation& m = a.vertex_map(w.lift[q]);
        std::vector<Point> images(fixed.vertex_count());
        for (VertexId i = 0; i < fixed.vertex_count(); ++i) {
            const auto target = fixed.vertex_id(a.complex().vertices()[m(host_ids[i])]);
            if (!target) throw InternalError("normalizer element moves a fixed vertex out of the fixed set");
            images[i] = *target;
        }
        maps.emplace_back(std::move(images));
    }
    GroupAction induced = GroupAction::create(std::move(fixed), w.group, std::move(maps));
    return {std::move(w), std::move(induced)};
}

} // namespace equichar
