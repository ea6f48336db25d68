#include "equichar/duality.hpp"

#include <set>

#include "equichar/error.hpp"

namespace equichar {

CMReport cohen_macaulay(const SimplicialComplex& x) {
    if (x.empty()) throw InputError("cohen_macaulay: the complex is empty");
    CMReport out;
    out.dimension = x.dimension();
    std::vector<Simplex> sigmas{Simplex{}};
    for (auto& s : x.all_simplices()) sigmas.push_back(std::move(s));
    for (const auto& sigma : sigmas) {
        const int allowed = out.dimension - (static_cast<int>(sigma.size()) - 1) - 1;
        for (const auto& [d, g] : reduced_homology(link(x, sigma)))
            if (d != allowed && !g.is_zero()) out.failures.push_back({sigma, d, g});
    }
    out.is_cm = out.failures.empty();
    return out;
}

DualityVerdict raag_duality(const SimplicialComplex& x) {
    if (!is_flag(x)) throw PreconditionError("raag_duality: the complex is not flag");
    DualityVerdict v;
    v.report = cohen_macaulay(x);
    v.is_duality = v.report.is_cm;
    return v;
}

std::vector<int> JMProfile::nonzero_degrees() const {
    std::vector<int> out;
    for (const auto& [k, entries] : by_degree)
        if (!entries.empty()) out.push_back(k);
    return out;
}

JMProfile jensen_meier_profile(const SimplicialComplex& x, int max_degree) {
    JMProfile out;
    for (int k = 0; k <= max_degree; ++k) out.by_degree[k];
    std::vector<Simplex> sigmas{Simplex{}};
    for (auto& s : x.all_simplices()) sigmas.push_back(std::move(s));
    for (const auto& sigma : sigmas) {
        const int dim = static_cast<int>(sigma.size()) - 1;
        const auto cohom = cohomology_from_homology(reduced_homology(link(x, sigma)));
        for (const auto& [j, g] : cohom) {
            if (g.is_zero()) continue;
            const int k = j + dim + 2;
            if (k < 0 || k > max_degree) continue;
            out.by_degree[k].push_back({sigma, j, g});
            if (!g.is_free()) out.torsion_free = false;
        }
    }
    return out;
}

DoubledComplex double_along(const SimplicialComplex& x, const SimplicialComplex& along) {
    for (const auto& v : along.vertices())
        if (!x.vertex_id(v)) throw InputError("double_along: vertex '" + v + "' is not in the complex");
    if (!(full_subcomplex(x, along.vertices()) == along))
        throw PreconditionError("double_along: the subcomplex is not full");

    const std::set<std::string> glued(along.vertices().begin(), along.vertices().end());
    std::set<std::string> taken(x.vertices().begin(), x.vertices().end());
    DoubledComplex out;
    std::vector<std::string> names = x.vertices();
    for (const auto& v : x.vertices()) {
        if (glued.count(v)) continue;
        std::string copy = v + "'";
        while (taken.count(copy)) copy += "'";
        taken.insert(copy);
        out.copy_of[v] = copy;
        names.push_back(copy);
    }
    std::map<std::string, VertexId> index;
    for (std::size_t i = 0; i < names.size(); ++i) index.emplace(names[i], static_cast<VertexId>(i));

    std::vector<Simplex> simplices;
    for (const auto& s : x.all_simplices()) {
        simplices.push_back(s);
        Simplex t;
        for (VertexId v : s) {
            const std::string& name = x.vertices()[v];
            t.push_back(glued.count(name) ? v : index.at(out.copy_of.at(name)));
        }
        simplices.push_back(std::move(t));
    }
    out.complex = SimplicialComplex::from_simplices(names, simplices);

    std::vector<Point> images(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) images[i] = static_cast<Point>(i);
    for (const auto& [v, c] : out.copy_of) {
        images[index.at(v)] = index.at(c);
        images[index.at(c)] = index.at(v);
    }
    FiniteGroup c2 = FiniteGroup::from_generators(names, {Permutation(std::move(images))});
    out.swap = GroupAction::of_permutation_group(out.complex, std::move(c2));
    return out;
}

ObstructionScan bredon_duality_obstruction(const GroupAction& a) {
    ObstructionScan out;
    for (const auto& cls : conjugacy_classes_of_subgroups(a.group())) {
        ClassObstruction c;
        c.subgroup = cls.representative;
        c.label = subgroup_label(a.group(), cls.representative);
        c.fixed = fixed_subcomplex(a, cls.representative);
        if (c.fixed.empty()) {
            c.report.is_cm = true; // trivial centralizer
        } else {
            c.report = cohen_macaulay(c.fixed);
        }
        c.obstructed = !c.report.is_cm;
        out.any_obstruction = out.any_obstruction || c.obstructed;
        out.classes.push_back(std::move(c));
    }
    return out;
}

} // namespace equichar
