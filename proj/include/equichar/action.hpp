#pragma once

#include <optional>
#include <vector>

#include "equichar/group.hpp"
#include "equichar/simplicial.hpp"

namespace equichar {

/// Simplicial action of an enumerated finite group on a complex. Stores one
/// vertex permutation per group element.
class GroupAction {
public:
    GroupAction() = default;

    /// Validates that the assignment is a homomorphism into the simplicial
    /// automorphisms of X. Throws InputError naming a witness simplex when an
    /// element breaks a simplex.
    static GroupAction create(SimplicialComplex x, FiniteGroup g, std::vector<Permutation> vertex_maps);

    /// Action of a permutation group whose points are the vertex names of X.
    static GroupAction of_permutation_group(SimplicialComplex x, FiniteGroup g);

    const SimplicialComplex& complex() const { return complex_; }
    const FiniteGroup& group() const { return group_; }
    const Permutation& vertex_map(ElementId e) const { return maps_[e]; }

    Simplex apply(ElementId e, const Simplex& s) const;

private:
    SimplicialComplex complex_;
    FiniteGroup group_;
    std::vector<Permutation> maps_;
};

struct AdmissibilityResult {
    bool admissible = true;
    /// Witness on failure: an element fixing `simplex` setwise but not pointwise.
    std::optional<ElementId> element;
    std::optional<Simplex> simplex;
};

/// Setwise-fixed simplices must be pointwise fixed.
AdmissibilityResult is_admissible(const GroupAction& a);

/// Full subcomplex on the vertices fixed by every element of H. Throws
/// PreconditionError for non-admissible actions.
SimplicialComplex fixed_subcomplex(const GroupAction& a, const Subgroup& h);

/// Vertex ids of X fixed by every element of H.
std::vector<VertexId> fixed_vertices(const GroupAction& a, const Subgroup& h);

struct InducedAction {
    QuotientGroup weyl;  // N_K(H)/H
    GroupAction action;  // of weyl.group on X^H
};

/// Action of N_K(H)/H on the H-fixed subcomplex.
InducedAction induced_quotient_action(const GroupAction& a, const Subgroup& h);

} // namespace equichar
