#include "equichar/euler.hpp"

#include <algorithm>

#include "equichar/checked.hpp"
#include "equichar/error.hpp"
#include "equichar/poset.hpp"

namespace equichar {

const EulerTerm* EulerClass::find(const std::string& label) const {
    for (const auto& t : terms)
        if (t.label == label) return &t;
    return nullptr;
}

bool EulerClass::is_zero() const {
    return std::all_of(terms.begin(), terms.end(), [](const EulerTerm& t) { return t.coefficient.is_zero(); });
}

std::string EulerClass::str() const {
    std::string out;
    for (const auto& t : terms) {
        if (t.coefficient.is_zero()) continue;
        const Rational c = t.coefficient;
        if (out.empty()) {
            out = c.str();
        } else if (c < Rational(0)) {
            out += " - " + (-c).str();
        } else {
            out += " + " + c.str();
        }
        out += "·[Γ/" + t.label + "]";
    }
    return out.empty() ? "0" : out;
}

namespace {

// Prime of a p-group; the trivial group counts as a p-group for any p.
std::int64_t require_p_group(const FiniteGroup& k, const char* what) {
    if (k.order() == 1) return 2;
    const auto p = p_group_prime(k.order());
    if (!p) throw PreconditionError(std::string(what) + ": acting group of order " + std::to_string(k.order()) +
                                    " is not a p-group");
    return *p;
}

void require_admissible(const GroupAction& a) {
    const auto adm = is_admissible(a);
    if (!adm.admissible)
        throw PreconditionError("action is not admissible: " + a.group().cycles(*adm.element) + " fixes " +
                                a.complex().label(*adm.simplex) + " setwise but not pointwise");
}

EulerTerm make_term(const FiniteGroup& k, const Subgroup& h, Rational c) {
    return EulerTerm{subgroup_label(k, h), subgroup_generator_strings(k, h), h, c};
}

} // namespace

ChiTable chi_fixed_table(const GroupAction& a) {
    require_admissible(a);
    ChiTable out;
    for (const auto& cls : conjugacy_classes_of_subgroups(a.group()))
        out.emplace(cls.representative, euler_characteristic(fixed_subcomplex(a, cls.representative)));
    return out;
}

Rational elementary_weight(const FiniteGroup& k, const Subgroup& e, std::int64_t p) {
    const int n = e.is_trivial() ? 0 : elementary_abelian_rank(k, e, p);
    const auto sign_power = elementary_abelian_euler_formula(p, n);
    return Rational(sign_power, static_cast<std::int64_t>(normalizer(k, e).order()));
}

Rational free_coefficient(const FiniteGroup& k, const std::map<Subgroup, Rational>& chi_centralizer) {
    const std::int64_t p = require_p_group(k, "free_coefficient");
    Rational total;
    for (const auto& cls : conjugacy_classes_of_subgroups(k)) {
        if (!is_elementary_abelian(k, cls.representative)) continue;
        const Rational* chi = nullptr;
        for (const auto& m : cls.members)
            if (auto it = chi_centralizer.find(m); it != chi_centralizer.end()) {
                chi = &it->second;
                break;
            }
        if (!chi)
            throw PreconditionError("free_coefficient: no χ value for the class of " +
                                    subgroup_label(k, cls.representative));
        total += elementary_weight(k, cls.representative, p) * *chi;
    }
    return total;
}

Rational vanishing_identity(const FiniteGroup& k) {
    if (k.order() == 1) throw PreconditionError("vanishing_identity: the group must be nontrivial");
    const std::int64_t p = require_p_group(k, "vanishing_identity");
    Rational total;
    for (const auto& cls : conjugacy_classes_of_subgroups(k))
        if (is_elementary_abelian(k, cls.representative)) total += elementary_weight(k, cls.representative, p);
    return total;
}

Rational euler_coefficient_raag(const GroupAction& a, const Subgroup& h) {
    require_p_group(a.group(), "euler_class_raag");
    require_admissible(a);
    const InducedAction induced = induced_quotient_action(a, h);
    const FiniteGroup& w = induced.action.group();
    std::map<Subgroup, Rational> chi;
    for (const auto& cls : conjugacy_classes_of_subgroups(w)) {
        if (!is_elementary_abelian(w, cls.representative)) continue;
        // C_{A_{L^H}}(E) = A_{(L^H)^E} and χ(A_M) = 1 - χ(M).
        const auto fixed = fixed_subcomplex(induced.action, cls.representative);
        chi.emplace(cls.representative, Rational(1 - euler_characteristic(fixed)));
    }
    return free_coefficient(w, chi);
}

EulerClass euler_class_raag(const GroupAction& a) {
    require_p_group(a.group(), "euler_class_raag");
    require_admissible(a);
    EulerClass out;
    for (const auto& cls : conjugacy_classes_of_subgroups(a.group()))
        out.terms.push_back(make_term(a.group(), cls.representative, euler_coefficient_raag(a, cls.representative)));
    return out;
}

namespace {

struct CyclicChain {
    std::int64_t p = 2;
    int n = 0;
    std::vector<Subgroup> k; // k[i] = ⟨x^(p^i)⟩, k[0] = K, k[n] = 1
};

CyclicChain cyclic_chain(const FiniteGroup& g) {
    CyclicChain c;
    const Subgroup whole = g.whole();
    if (!is_cyclic(g, whole)) throw PreconditionError("euler_class_cyclic: the acting group is not cyclic");
    if (g.order() == 1) {
        c.k.push_back(whole);
        return c;
    }
    c.p = require_p_group(g, "euler_class_cyclic");
    c.n = *exact_log(g.order(), c.p);
    ElementId x = 0;
    for (ElementId e = 0; e < g.order(); ++e)
        if (g.element_order(e) == g.order()) {
            x = e;
            break;
        }
    ElementId power = x;
    for (int i = 0; i <= c.n; ++i) {
        c.k.push_back(g.generate(std::span<const ElementId>(&power, 1)));
        ElementId next = FiniteGroup::identity(); // power^p
        for (std::int64_t r = 0; r < c.p; ++r) next = g.multiply(next, power);
        power = next;
    }
    return c;
}

} // namespace

EulerClass euler_class_cyclic(const GroupAction& a) {
    require_admissible(a);
    const FiniteGroup& g = a.group();
    const CyclicChain c = cyclic_chain(g);
    auto chi = [&](const Subgroup& h) { return euler_characteristic(fixed_subcomplex(a, h)); };

    // Terms ordered like the conjugacy classes: increasing order, i.e. K_n first.
    EulerClass out;
    for (int i = c.n; i >= 1; --i) {
        const Rational coeff(checked::sub(chi(c.k[i - 1]), chi(c.k[i])), checked::pow(c.p, static_cast<unsigned>(i)));
        out.terms.push_back(make_term(g, c.k[i], coeff));
    }
    out.terms.push_back(make_term(g, c.k[0], Rational(1 - chi(c.k[0]))));
    return out;
}

EulerClass euler_class_cyclic_abstract(const CyclicEulerData& data) {
    EulerClass out;
    for (const auto& h : data.classes) {
        auto w = data.chi_weyl.find(h);
        if (w == data.chi_weyl.end()) throw InputError("cyclic Euler data: no χ(WH) for class " + h);
        Rational c = w->second;
        if (auto qs = data.order_p_classes.find(h); qs != data.order_p_classes.end()) {
            for (const auto& q : qs->second) {
                auto it = data.chi_normalizer_quotient.find({h, q});
                if (it == data.chi_normalizer_quotient.end())
                    throw InputError("cyclic Euler data: no χ(N(Q)/H) for H = " + h + ", Q = " + q);
                c -= it->second;
            }
        }
        out.terms.push_back(EulerTerm{h, {}, std::nullopt, c});
    }
    return out;
}

CyclicEulerData cyclic_data_from_action(const GroupAction& a) {
    require_admissible(a);
    const FiniteGroup& g = a.group();
    const CyclicChain c = cyclic_chain(g);
    auto chi_raag = [&](const Subgroup& h) { return Rational(1 - euler_characteristic(fixed_subcomplex(a, h))); };

    CyclicEulerData data;
    for (int j = c.n; j >= 0; --j) {
        const Subgroup& h = c.k[static_cast<std::size_t>(j)];
        const std::string label = subgroup_label(g, h);
        const auto index = static_cast<std::int64_t>(g.order() / h.order());
        data.classes.push_back(label);
        data.chi_weyl[label] = chi_raag(h) / Rational(index);
        data.order_p_classes[label] = {};
        if (j >= 1) {
            // The unique subgroup of order p in K/H is K_{j-1}/H.
            const Subgroup& q = c.k[static_cast<std::size_t>(j - 1)];
            const std::string ql = subgroup_label(g, q);
            data.order_p_classes[label].push_back(ql);
            data.chi_normalizer_quotient[{label, ql}] = chi_raag(q) / Rational(index);
        }
    }
    return data;
}

AcyclicityResult acyclicity_condition(const GroupAction& a, bool force) {
    require_admissible(a);
    const FiniteGroup& k = a.group();
    const auto p = p_group_prime(k.order());
    AcyclicityResult out;
    const bool rank_two = p && is_elementary_abelian(k, k.whole(), *p) && *exact_log(k.order(), *p) == 2;
    if (rank_two) {
        out.scope = "H1-criterion";
    } else if (force && p && *exact_log(k.order(), *p) >= 2) {
        out.scope = "H1-criterion (remark scope)";
    } else {
        throw PreconditionError("acyclicity_condition: acting group of order " + std::to_string(k.order()) +
                                " is not C_p x C_p" + (force ? " nor a p-group of order at least p^2" : ""));
    }
    std::vector<bool> covered(a.complex().vertex_count(), false);
    for (const auto& q : all_subgroups(k)) {
        if (q.is_trivial() || q.order() == k.order()) continue;
        for (VertexId v : fixed_vertices(a, q)) covered[v] = true;
    }
    for (VertexId v = 0; v < covered.size(); ++v)
        if (!covered[v]) out.uncovered_vertices.push_back(a.complex().vertices()[v]);
    out.holds = out.uncovered_vertices.empty();
    return out;
}

} // namespace equichar
