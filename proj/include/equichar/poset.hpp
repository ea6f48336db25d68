#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equichar/group.hpp"
#include "equichar/simplicial.hpp"

namespace equichar {

/// Finite poset given by a strict order relation.
class FinitePoset {
public:
    FinitePoset() = default;
    /// less[i][j] means element i < element j. Throws InputError unless the
    /// relation is irreflexive and transitive.
    FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> less);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
    /// Pairs (i, j) with i < j and nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<bool>> less_;
};

enum class SubgroupFilter {
    Nontrivial,             // F_1
    NilpotentNontrivial,    // N_1
    ElementaryAbelianNontrivial, // A_1
    ProperNontrivial,       // S(G): nontrivial proper subgroups
    SquarefreeAbelianNontrivial, // abelian, every element of squarefree order
};

struct SubgroupPoset {
    FinitePoset poset;
    std::vector<Subgroup> subgroups; // parallel to poset elements
};

/// Subgroups of `within` passing the filter, ordered by strict inclusion.
SubgroupPoset subgroup_poset(const FiniteGroup& g, const Subgroup& within, SubgroupFilter filter);
SubgroupPoset subgroup_poset(const FiniteGroup& g, SubgroupFilter filter);

/// Simplices are the chains.
SimplicialComplex order_complex(const FinitePoset& p);

/// chain_counts[k] = number of chains with k+1 elements.
std::vector<std::int64_t> chain_counts(const FinitePoset& p);

/// Euler characteristic of the augmented chain complex: -1 for the empty
/// chain plus sum over k of (-1)^k times the number of (k+1)-element chains.
std::int64_t augmented_euler(const FinitePoset& p);

/// (-1)^n p^(n choose 2), with the p-power factor 1 for n in {0, 1}.
std::int64_t elementary_abelian_euler_formula(std::int64_t p, int n);

struct HomologyComparison {
    std::map<int, HomologyGroup> first;
    std::map<int, HomologyGroup> second;
    bool equal = false;
};

/// Reduced homology of |N_1(G)| against the order complex of the abelian
/// filter, by default A_1(G). Products of elementary abelian groups for
/// different primes, such as C_6, are in the squarefree filter only.
HomologyComparison quillen_thevenaz_check(const FiniteGroup& g,
                                          SubgroupFilter abelian = SubgroupFilter::ElementaryAbelianNontrivial);

/// Reduced homology of |{K : H < K <= G}| against |F_1(N_G(H)/H)|. G must
/// be a p-group (PreconditionError otherwise).
HomologyComparison weyl_poset_check(const FiniteGroup& g, const Subgroup& h);

/// Compares two reduced homology maps degreewise, treating missing degrees as zero.
bool same_homology(const std::map<int, HomologyGroup>& a, const std::map<int, HomologyGroup>& b);

} // namespace equichar
