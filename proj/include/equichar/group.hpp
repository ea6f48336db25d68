#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace equichar {

using Point = std::uint32_t;
using ElementId = std::uint32_t;

/// Bijection of {0, ..., n-1}. Composition is left to right:
/// (a * b)(x) = b(a(x)), matching the exponent notation h^g = g^-1 h g.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Point> images);
    static Permutation identity(std::size_t n);

    std::size_t degree() const { return images_.size(); }
    Point operator()(Point x) const { return images_[x]; }
    const std::vector<Point>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> images_;
};

/// Parse cycle notation such as "(v1 v2)(w1 w2)" over the given point names.
/// "()" and "" denote the identity. Throws InputError on unknown names,
/// repeated points or malformed text.
Permutation parse_cycles(const std::string& text, std::span<const std::string> points);

/// Cycle notation over point names; "()" for the identity.
std::string format_cycles(const Permutation& p, std::span<const std::string> points);

/// Sorted set of element ids of a FiniteGroup. Closure is checked by the
/// functions that create subgroups, not by this type.
class Subgroup {
public:
    Subgroup() = default;
    explicit Subgroup(std::vector<ElementId> sorted_elements) : elements_(std::move(sorted_elements)) {}

    const std::vector<ElementId>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }
    bool is_trivial() const { return elements_.size() == 1; }
    bool contains(ElementId e) const;
    bool is_subset_of(const Subgroup& other) const;

    friend bool operator==(const Subgroup&, const Subgroup&) = default;
    friend auto operator<=>(const Subgroup&, const Subgroup&) = default;

private:
    std::vector<ElementId> elements_;
};

/// Finite permutation group on named points, fully enumerated.
///
/// Elements are stored in lexicographic order of their image vectors, so the
/// identity always has id 0.
class FiniteGroup {
public:
    static constexpr std::size_t kDefaultOrderBound = 20000;

    FiniteGroup() = default;

    /// Closure of the generators. Throws InputError for generators of the
    /// wrong degree, ResourceError when the order exceeds `order_bound`.
    static FiniteGroup from_generators(std::vector<std::string> points, std::vector<Permutation> generators,
                                       std::size_t order_bound = kDefaultOrderBound);

    const std::vector<std::string>& points() const { return points_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }
    const Permutation& element(ElementId id) const { return elements_[id]; }
    const std::vector<Permutation>& elements() const { return elements_; }

    static constexpr ElementId identity() { return 0; }
    ElementId id_of(const Permutation& p) const;
    ElementId multiply(ElementId a, ElementId b) const;
    ElementId inverse(ElementId a) const { return inverses_[a]; }
    /// g^-1 h g
    ElementId conjugate(ElementId h, ElementId g) const { return multiply(multiply(inverses_[g], h), g); }
    std::size_t element_order(ElementId a) const;

    Subgroup whole() const;
    Subgroup trivial() const { return Subgroup({identity()}); }

    /// Closure of a set of elements.
    Subgroup generate(std::span<const ElementId> gens) const;
    /// Validates that `elements` is a subgroup; throws InputError otherwise.
    Subgroup make_subgroup(std::vector<ElementId> elements) const;

    std::string cycles(ElementId e) const { return format_cycles(elements_[e], points_); }

private:
    std::vector<std::string> points_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::map<Permutation, ElementId> index_;
    std::vector<ElementId> inverses_;
    std::vector<ElementId> table_; // full Cayley table when small enough
};

/// Greedy generating set: scan elements in id order, keep those not already
/// generated.
std::vector<ElementId> generators_of(const FiniteGroup& g, const Subgroup& h);

/// "1" for the trivial group, otherwise "⟨(1 2), (3 4)⟩".
std::string subgroup_label(const FiniteGroup& g, const Subgroup& h);

/// Cycle strings of generators_of(h).
std::vector<std::string> subgroup_generator_strings(const FiniteGroup& g, const Subgroup& h);

/// Every subgroup once, sorted by (order, element list). Built from cyclic
/// subgroups by repeated joins.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t count_bound = 100000);

struct ConjugacyClass {
    Subgroup representative; // least member in element-list order
    std::vector<Subgroup> members;
};

/// Partition of `subgroups` (every subgroup of g, closed under conjugation)
/// into G-conjugacy classes; sorted by (order, representative).
std::vector<ConjugacyClass> conjugacy_classes_of_subgroups(const FiniteGroup& g, const std::vector<Subgroup>& subgroups);
std::vector<ConjugacyClass> conjugacy_classes_of_subgroups(const FiniteGroup& g);

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, ElementId by);

/// Normalizer and centralizer of h inside `within` (default: the whole group).
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& within, const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& within, const Subgroup& h);

bool is_subgroup(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& n, const Subgroup& h);

/// N/H realized as a permutation group on the right cosets of H in N.
struct QuotientGroup {
    Subgroup normalizer_part; // N
    Subgroup normal_part;     // H
    FiniteGroup group;        // acts on points "H*x"
    std::vector<Subgroup> cosets;                // as subsets of the parent group
    std::map<ElementId, ElementId> projection;   // parent id in N -> quotient id
    std::vector<ElementId> lift;                 // quotient id -> a parent id in N
};

/// Throws InputError unless h is a normal subgroup of n.
QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n, const Subgroup& h);

bool is_abelian(const FiniteGroup& g, const Subgroup& h);
bool is_cyclic(const FiniteGroup& g, const Subgroup& h);
bool is_p_group(const Subgroup& h, std::int64_t p);
/// The prime p with |h| a power of p; nullopt for the trivial group or
/// orders with two distinct prime factors.
std::optional<std::int64_t> p_group_prime(std::size_t order);
bool is_nilpotent(const FiniteGroup& g, const Subgroup& h);
bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h, std::int64_t p);
/// True for elementary abelian p-groups for some prime p, and for the trivial group.
bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h);
/// n with |h| = p^n; throws PreconditionError if h is not elementary abelian.
int elementary_abelian_rank(const FiniteGroup& g, const Subgroup& h, std::int64_t p);

/// Integer logarithm: n with p^n == value, or nullopt.
std::optional<int> exact_log(std::size_t value, std::int64_t p);

} // namespace equichar
