#pragma once

#include <map>
#include <string>
#include <vector>

#include "equichar/action.hpp"
#include "equichar/chain_complex.hpp"
#include "equichar/simplicial.hpp"

namespace equichar {

struct CMFailure {
    Simplex simplex; // may be empty (the empty simplex)
    int degree = 0;
    HomologyGroup group;
};

struct CMReport {
    bool is_cm = true;
    int dimension = -1;
    std::vector<CMFailure> failures;
};

/// Every simplex σ, the empty one included, must have reduced link homology
/// concentrated in degree dim X - dim σ - 1. Throws InputError for the empty
/// complex.
CMReport cohen_macaulay(const SimplicialComplex& x);

struct DualityVerdict {
    bool is_duality = false;
    CMReport report;
};

/// A_X is a duality group iff X is Cohen–Macaulay. X must be flag
/// (PreconditionError otherwise).
DualityVerdict raag_duality(const SimplicialComplex& x);

struct ProfileEntry {
    Simplex simplex;      // σ; empty vector for the empty simplex
    int link_degree = 0;  // k - dim σ - 2
    HomologyGroup group;  // reduced cohomology of Lk σ in link_degree
};

/// Contributions to H^k(A_X, Z A_X) = ⊕_σ ⊕_{i≥1} H̃^{k-dim σ-2}(Lk σ).
/// Each entry stands for the infinite direct sum ⊕_{i=1}^∞ of its group.
struct JMProfile {
    std::map<int, std::vector<ProfileEntry>> by_degree; // every k in [0, max_degree], possibly empty
    bool torsion_free = true;

    /// Degrees with at least one contribution.
    std::vector<int> nonzero_degrees() const;
};

JMProfile jensen_meier_profile(const SimplicialComplex& x, int max_degree);

struct DoubledComplex {
    SimplicialComplex complex;
    GroupAction swap; // C_2 exchanging the copies, fixing A pointwise
    /// copy name for each vertex of X outside A
    std::map<std::string, std::string> copy_of;
};

/// Two copies of X glued along the full subcomplex spanned by `along`.
/// Throws PreconditionError unless the given subcomplex is full.
DoubledComplex double_along(const SimplicialComplex& x, const SimplicialComplex& along);

struct ClassObstruction {
    Subgroup subgroup;
    std::string label;
    SimplicialComplex fixed;
    CMReport report;
    bool obstructed = false;
};

struct ObstructionScan {
    std::vector<ClassObstruction> classes;
    bool any_obstruction = false;
};

/// Checks C_{A_L}(H) = A_{L^H} for duality at every class H ≤ K. A verdict
/// without obstruction is not a proof of Bredon duality. An empty fixed
/// complex gives the trivial centralizer and is never an obstruction.
ObstructionScan bredon_duality_obstruction(const GroupAction& a);

} // namespace equichar
