#include "equichar/poset.hpp"

#include <functional>

#include "equichar/checked.hpp"
#include "equichar/error.hpp"

namespace equichar {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> less)
    : labels_(std::move(labels)), less_(std::move(less)) {
    const std::size_t n = labels_.size();
    if (less_.size() != n) throw InputError("poset: relation size mismatch");
    for (const auto& row : less_)
        if (row.size() != n) throw InputError("poset: relation size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (less_[i][i]) throw InputError("poset: relation is not irreflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (!less_[i][j]) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (less_[j][k] && !less_[i][k]) throw InputError("poset: relation is not transitive");
        }
    }
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) {
            if (!less_[i][j]) continue;
            bool between = false;
            for (std::size_t k = 0; k < size() && !between; ++k) between = less_[i][k] && less_[k][j];
            if (!between) out.emplace_back(i, j);
        }
    return out;
}

namespace {

bool is_squarefree_abelian(const FiniteGroup& g, const Subgroup& h) {
    if (!is_abelian(g, h)) return false;
    for (ElementId e : h.elements()) {
        std::size_t n = g.element_order(e);
        for (std::size_t d = 2; d * d <= n; ++d)
            if (n % (d * d) == 0) return false;
    }
    return true;
}

} // namespace

SubgroupPoset subgroup_poset(const FiniteGroup& g, const Subgroup& within, SubgroupFilter filter) {
    SubgroupPoset out;
    for (const auto& h : all_subgroups(g)) {
        if (!h.is_subset_of(within) || h.is_trivial()) continue;
        bool keep = true;
        switch (filter) {
        case SubgroupFilter::Nontrivial: break;
        case SubgroupFilter::NilpotentNontrivial: keep = is_nilpotent(g, h); break;
        case SubgroupFilter::ElementaryAbelianNontrivial: keep = is_elementary_abelian(g, h); break;
        case SubgroupFilter::ProperNontrivial: keep = h.order() < within.order(); break;
        case SubgroupFilter::SquarefreeAbelianNontrivial: keep = is_squarefree_abelian(g, h); break;
        }
        if (keep) out.subgroups.push_back(h);
    }
    const std::size_t n = out.subgroups.size();
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(subgroup_label(g, out.subgroups[i]));
        for (std::size_t j = 0; j < n; ++j)
            less[i][j] = i != j && out.subgroups[i].order() < out.subgroups[j].order() &&
                         out.subgroups[i].is_subset_of(out.subgroups[j]);
    }
    out.poset = FinitePoset(std::move(labels), std::move(less));
    return out;
}

SubgroupPoset subgroup_poset(const FiniteGroup& g, SubgroupFilter filter) {
    return subgroup_poset(g, g.whole(), filter);
}

SimplicialComplex order_complex(const FinitePoset& p) {
    std::vector<Simplex> maximal_chains;
    std::function<void(Simplex&)> grow = [&](Simplex& chain) {
        bool extended = false;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.less(chain.back(), j)) {
                extended = true;
                chain.push_back(static_cast<VertexId>(j));
                grow(chain);
                chain.pop_back();
            }
        if (!extended) maximal_chains.push_back(chain);
    };
    for (std::size_t i = 0; i < p.size(); ++i) {
        Simplex chain{static_cast<VertexId>(i)};
        grow(chain);
    }
    return SimplicialComplex::from_simplices(p.labels(), maximal_chains);
}

std::vector<std::int64_t> chain_counts(const FinitePoset& p) {
    // up[i][k]: chains with k+1 elements whose least element is i.
    const std::size_t n = p.size();
    std::vector<std::vector<std::int64_t>> up(n);
    std::vector<bool> done(n, false);
    std::function<void(std::size_t)> solve = [&](std::size_t i) {
        if (done[i]) return;
        std::vector<std::int64_t> counts{1};
        for (std::size_t j = 0; j < n; ++j) {
            if (!p.less(i, j)) continue;
            solve(j);
            if (counts.size() < up[j].size() + 1) counts.resize(up[j].size() + 1, 0);
            for (std::size_t k = 0; k < up[j].size(); ++k) counts[k + 1] = checked::add(counts[k + 1], up[j][k]);
        }
        up[i] = std::move(counts);
        done[i] = true;
    };
    std::vector<std::int64_t> total;
    for (std::size_t i = 0; i < n; ++i) {
        solve(i);
        if (total.size() < up[i].size()) total.resize(up[i].size(), 0);
        for (std::size_t k = 0; k < up[i].size(); ++k) total[k] = checked::add(total[k], up[i][k]);
    }
    return total;
}

std::int64_t augmented_euler(const FinitePoset& p) {
    std::int64_t e = -1;
    const auto counts = chain_counts(p);
    for (std::size_t k = 0; k < counts.size(); ++k) e = k % 2 == 0 ? checked::add(e, counts[k]) : checked::sub(e, counts[k]);
    return e;
}

std::int64_t elementary_abelian_euler_formula(std::int64_t p, int n) {
    if (!is_prime(p)) throw InputError("elementary_abelian_euler_formula: p is not prime");
    if (n < 0) throw InputError("elementary_abelian_euler_formula: negative rank");
    const unsigned binom = n < 2 ? 0u : static_cast<unsigned>(n * (n - 1) / 2);
    const std::int64_t power = checked::pow(p, binom);
    return n % 2 == 0 ? power : -power;
}

bool same_homology(const std::map<int, HomologyGroup>& a, const std::map<int, HomologyGroup>& b) {
    auto get = [](const std::map<int, HomologyGroup>& m, int d) {
        auto it = m.find(d);
        return it == m.end() ? HomologyGroup{} : it->second;
    };
    for (const auto& [d, g] : a)
        if (get(b, d) != g) return false;
    for (const auto& [d, g] : b)
        if (get(a, d) != g) return false;
    return true;
}

HomologyComparison quillen_thevenaz_check(const FiniteGroup& g, SubgroupFilter abelian) {
    if (abelian != SubgroupFilter::ElementaryAbelianNontrivial && abelian != SubgroupFilter::SquarefreeAbelianNontrivial)
        throw InputError("quillen_thevenaz_check: the filter must select abelian subgroups");
    HomologyComparison out;
    out.first = reduced_homology(order_complex(subgroup_poset(g, SubgroupFilter::NilpotentNontrivial).poset));
    out.second = reduced_homology(order_complex(subgroup_poset(g, abelian).poset));
    out.equal = same_homology(out.first, out.second);
    return out;
}

HomologyComparison weyl_poset_check(const FiniteGroup& g, const Subgroup& h) {
    if (!p_group_prime(g.order())) throw PreconditionError("weyl_poset_check: the group is not a p-group");
    if (!is_subgroup(g, h)) throw InputError("weyl_poset_check: not a subgroup");

    // {K : H < K <= G}
    std::vector<Subgroup> above;
    for (const auto& k : all_subgroups(g))
        if (k.order() > h.order() && h.is_subset_of(k)) above.push_back(k);
    const std::size_t n = above.size();
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(subgroup_label(g, above[i]));
        for (std::size_t j = 0; j < n; ++j)
            less[i][j] = above[i].order() < above[j].order() && above[i].is_subset_of(above[j]);
    }
    const FinitePoset upper(std::move(labels), std::move(less));

    const QuotientGroup w = quotient(g, normalizer(g, h), h);
    const FinitePoset weyl = subgroup_poset(w.group, SubgroupFilter::Nontrivial).poset;

    HomologyComparison out;
    out.first = reduced_homology(order_complex(upper));
    out.second = reduced_homology(order_complex(weyl));
    out.equal = same_homology(out.first, out.second);
    return out;
}

} // namespace equichar
