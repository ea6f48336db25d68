#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equichar/action.hpp"
#include "equichar/group.hpp"
#include "equichar/rational.hpp"

namespace equichar {

/// One coefficient of the formal sum  sum_H c_H [Γ/H].
struct EulerTerm {
    std::string label;                   // "1", "⟨(1 3)(2 4)⟩", or a caller-supplied name
    std::vector<std::string> generators; // cycle strings; empty for the trivial class
    std::optional<Subgroup> subgroup;    // absent for abstract (table-driven) classes
    Rational coefficient;
};

struct EulerClass {
    std::vector<EulerTerm> terms;

    const EulerTerm* find(const std::string& label) const;
    bool is_zero() const;
    /// Nonzero terms, e.g. "-1·[Γ/1] + 1·[Γ/⟨(1 3)(2 4)⟩]"; "0" when all vanish.
    std::string str() const;
};

/// Integer per conjugacy-class representative.
using ChiTable = std::map<Subgroup, std::int64_t>;

/// χ(L^H) for every class representative H of the acting group.
ChiTable chi_fixed_table(const GroupAction& a);

/// (-1)^n p^(n choose 2) / |N_K(E)| for an elementary abelian E of rank n;
/// the p-power is 1 for n <= 1.
Rational elementary_weight(const FiniteGroup& k, const Subgroup& e, std::int64_t p);

/// Coefficient of [Γ/1] for Γ = K ⋉ G:
///   sum over classes E of elementary abelian subgroups of K of
///   elementary_weight(E) * χ(C_G(E)).
/// `chi_centralizer` may be keyed by any member of each class. Throws
/// PreconditionError if K is not a p-group or a class is missing.
Rational free_coefficient(const FiniteGroup& k, const std::map<Subgroup, Rational>& chi_centralizer);

/// Sum of elementary_weight over all elementary abelian classes of K,
/// including the trivial subgroup. Zero for every nontrivial p-group.
Rational vanishing_identity(const FiniteGroup& k);

/// Coefficient of [Γ/H] for Γ = K ⋉ A_L, computed as the free coefficient
/// of the Weyl group (N_K(H)/H) ⋉ A_{L^H} using χ(A_M) = 1 - χ(M).
Rational euler_coefficient_raag(const GroupAction& a, const Subgroup& h);

/// Full class over conjugacy-class representatives of K.
EulerClass euler_class_raag(const GroupAction& a);

/// Closed form for cyclic K = ⟨x⟩ of order p^n with K_i = ⟨x^(p^i)⟩:
///   (1 - χ(L^K))[Γ/K] + sum_i p^-i (χ(L^{K_{i-1}}) - χ(L^{K_i}))[Γ/K_i].
EulerClass euler_class_cyclic(const GroupAction& a);

/// Finite data for the cyclic-subgroup formula
///   c_H = χ(WH) - sum_{Q in A_1(WH)/WH} χ(N_Γ(Q)/H).
struct CyclicEulerData {
    std::vector<std::string> classes;                                    // the H
    std::map<std::string, Rational> chi_weyl;                            // H -> χ(WH)
    std::map<std::string, std::vector<std::string>> order_p_classes;     // H -> Q labels
    std::map<std::pair<std::string, std::string>, Rational> chi_normalizer_quotient; // (H, Q) -> χ(N_Γ(Q)/H)
};

/// Evaluates the formula without any group computation. Throws InputError
/// on missing table entries.
EulerClass euler_class_cyclic_abstract(const CyclicEulerData& data);

/// Tables for K ⋉ A_L with K cyclic, derived from the action:
/// χ(WH) = χ(A_{L^H}) / |K/H| and χ(N_Γ(Q)/H) = χ(A_{L^Q}) / |K/H|.
CyclicEulerData cyclic_data_from_action(const GroupAction& a);

struct AcyclicityResult {
    bool holds = false;
    std::vector<std::string> uncovered_vertices;
    /// "H1-criterion" for rank-2 elementary abelian K,
    /// "H1-criterion (remark scope)" for forced runs on other p-groups.
    std::string scope;
};

/// Every vertex of L fixed by some nontrivial proper subgroup of K.
/// Requires K ≅ C_p x C_p unless `force`, which accepts any p-group of order
/// at least p^2.
AcyclicityResult acyclicity_condition(const GroupAction& a, bool force = false);

} // namespace equichar
