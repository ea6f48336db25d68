#include "equichar/commands.hpp"

#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "equichar/duality.hpp"
#include "equichar/error.hpp"
#include "equichar/euler.hpp"
#include "equichar/jones.hpp"
#include "equichar/poset.hpp"

namespace equichar {

namespace {

using oj = nlohmann::ordered_json;

oj envelope(const std::string& command) {
    oj doc;
    doc["schema"] = "equichar/1";
    doc["command"] = command;
    return doc;
}

oj to_json(const Rational& r) { return oj{{"num", r.num()}, {"den", r.den()}}; }

oj to_json(const HomologyGroup& g) {
    return oj{{"betti", g.betti}, {"torsion", g.torsion}, {"group", g.str()}};
}

oj to_json(const std::map<int, HomologyGroup>& h) {
    oj out = oj::array();
    for (const auto& [d, g] : h) {
        oj e{{"degree", d}};
        e.update(to_json(g));
        out.push_back(std::move(e));
    }
    return out;
}

std::string homology_text(const std::map<int, HomologyGroup>& h) {
    std::string out;
    for (const auto& [d, g] : h) {
        if (g.is_zero()) continue;
        if (!out.empty()) out += ", ";
        out += "H~" + std::to_string(d) + " = " + g.str();
    }
    return out.empty() ? "all zero" : out;
}

std::string simplex_text(const SimplicialComplex& x, const Simplex& s) { return s.empty() ? "∅" : x.label(s); }

oj simplex_json(const SimplicialComplex& x, const Simplex& s) { return x.names(s); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

const ComplexFile& need_complex(const CommandOptions& o, const std::string& cmd) {
    if (!o.complex) throw InputError(cmd + ": --complex is required");
    return *o.complex;
}

const GroupFile& need_group(const CommandOptions& o, const std::string& cmd) {
    if (!o.group) throw InputError(cmd + ": --group is required");
    return *o.group;
}

std::int64_t need_int(const std::optional<std::int64_t>& v, const std::string& cmd, const char* flag) {
    if (!v) throw InputError(cmd + ": " + flag + " is required");
    return *v;
}

oj class_json(const FiniteGroup& g, const ConjugacyClass& c) {
    return oj{{"label", subgroup_label(g, c.representative)},
              {"generators", subgroup_generator_strings(g, c.representative)},
              {"order", c.representative.order()},
              {"class_size", c.members.size()}};
}

oj cm_json(const SimplicialComplex& x, const CMReport& r) {
    oj failures = oj::array();
    for (const auto& f : r.failures)
        failures.push_back(oj{{"simplex", simplex_json(x, f.simplex)}, {"degree", f.degree}, {"group", to_json(f.group)}});
    return oj{{"is_cm", r.is_cm}, {"dimension", r.dimension}, {"failures", std::move(failures)}};
}

void cm_text(std::ostream& os, const SimplicialComplex& x, const CMReport& r, const std::string& indent) {
    for (const auto& f : r.failures)
        os << indent << "failure at " << simplex_text(x, f.simplex) << ": H~" << f.degree << "(Lk) = " << f.group.str()
           << " (allowed degree " << r.dimension - static_cast<int>(f.simplex.size()) << ")\n";
}

oj scan_json(const ObstructionScan& s) {
    oj classes = oj::array();
    for (const auto& c : s.classes)
        classes.push_back(oj{{"label", c.label},
                             {"fixed_vertices", c.fixed.vertices()},
                             {"fixed_empty", c.fixed.empty()},
                             {"cm", cm_json(c.fixed, c.report)},
                             {"obstructed", c.obstructed}});
    return oj{{"classes", std::move(classes)},
              {"any_obstruction", s.any_obstruction},
              {"verdict", s.any_obstruction ? "obstructed" : "no obstruction found (not a proof of Bredon duality)"}};
}

void scan_text(std::ostream& os, const ObstructionScan& s) {
    for (const auto& c : s.classes) {
        os << "  H = " << c.label << ": L^H has " << c.fixed.vertex_count() << " vertices, ";
        if (c.fixed.empty()) os << "empty";
        else os << (c.report.is_cm ? "Cohen-Macaulay" : "not Cohen-Macaulay");
        os << (c.obstructed ? "  -> obstructed\n" : "\n");
        if (c.obstructed) cm_text(os, c.fixed, c.report, "    ");
    }
    os << (s.any_obstruction ? "verdict: obstructed\n" : "verdict: no obstruction found (not a proof of Bredon duality)\n");
}

// ---------------------------------------------------------------------------

Report cmd_euler_class(const CommandOptions& o) {
    const std::string cmd = "euler-class";
    const GroupAction a = build_action(need_complex(o, cmd), need_group(o, cmd));
    const FiniteGroup& g = a.group();
    const EulerClass cls = euler_class_raag(a);
    const ChiTable chi = chi_fixed_table(a);

    std::optional<EulerClass> cyc;
    bool agrees = true;
    if (is_cyclic(g, g.whole())) {
        cyc = euler_class_cyclic(a);
        for (const auto& t : cls.terms) {
            const EulerTerm* u = cyc->find(t.label);
            agrees = agrees && u && u->coefficient == t.coefficient;
        }
        agrees = agrees && cyc->terms.size() == cls.terms.size();
    }

    Report r;
    std::ostringstream os;
    os << cls.str() << "\n";
    os << "group order " << g.order() << ", " << cls.terms.size() << " conjugacy classes of subgroups\n";
    oj classes = oj::array();
    const auto reps = conjugacy_classes_of_subgroups(g);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto& t = cls.terms[i];
        const std::int64_t x = chi.at(reps[i].representative);
        os << "  [Γ/" << t.label << "]  χ(L^H) = " << x << "  coefficient " << t.coefficient << "\n";
        oj c = class_json(g, reps[i]);
        c["chi_fixed"] = x;
        c["coefficient"] = to_json(t.coefficient);
        classes.push_back(std::move(c));
    }
    oj doc = envelope(cmd);
    doc["complex"] = o.complex->name;
    doc["group"] = o.group->name;
    doc["group_order"] = g.order();
    doc["formal_sum"] = cls.str();
    doc["classes"] = std::move(classes);
    if (cyc) {
        os << "cyclic closed form: " << (agrees ? "agrees" : "DISAGREES") << "\n";
        doc["cyclic_check"] = oj{{"applicable", true}, {"agrees", agrees}, {"formal_sum", cyc->str()}};
    } else {
        doc["cyclic_check"] = oj{{"applicable", false}};
    }
    r.verdict = agrees ? Verdict::Ok : Verdict::Negative;
    r.text = os.str();
    r.json = doc.dump(2);
    return r;
}

Report cmd_euler_free_coeff(const CommandOptions& o) {
    const std::string cmd = "euler-free-coeff";
    const GroupAction a = build_action(need_complex(o, cmd), need_group(o, cmd));
    const FiniteGroup& k = a.group();
    const Rational via_weyl = euler_coefficient_raag(a, k.trivial());

    std::ostringstream os;
    oj terms = oj::array();
    std::optional<Rational> ea_sum;
    if (k.order() > 1) {
        const std::int64_t p = *p_group_prime(k.order());
        Rational sum;
        for (const auto& c : conjugacy_classes_of_subgroups(k)) {
            if (!is_elementary_abelian(k, c.representative)) continue;
            const Rational w = elementary_weight(k, c.representative, p);
            const std::int64_t x = euler_characteristic(fixed_subcomplex(a, c.representative));
            sum -= w * Rational(x);
            oj t = class_json(k, c);
            t["weight"] = to_json(w);
            t["chi_fixed"] = x;
            terms.push_back(std::move(t));
        }
        ea_sum = sum;
    }
    const bool agrees = !ea_sum || *ea_sum == via_weyl;

    os << "coefficient of [Γ/1]: " << via_weyl << "\n";
    if (ea_sum)
        os << "elementary abelian sum: " << *ea_sum << " (" << (agrees ? "agrees" : "DISAGREES") << ")\n";
    oj doc = envelope(cmd);
    doc["complex"] = o.complex->name;
    doc["group"] = o.group->name;
    doc["coefficient"] = to_json(via_weyl);
    doc["elementary_abelian_terms"] = std::move(terms);
    doc["elementary_abelian_sum"] = ea_sum ? to_json(*ea_sum) : oj(nullptr);
    doc["agrees"] = agrees;
    return Report{agrees ? Verdict::Ok : Verdict::Negative, os.str(), doc.dump(2)};
}

Report cmd_acyclicity(const CommandOptions& o) {
    const std::string cmd = "acyclicity-check";
    const GroupAction a = build_action(need_complex(o, cmd), need_group(o, cmd));
    const AcyclicityResult res = acyclicity_condition(a, o.force);
    std::ostringstream os;
    if (res.holds) os << "condition holds\n";
    else os << "fails; uncovered: " << join(res.uncovered_vertices, ",") << "\n";
    os << "scope: " << res.scope << "\n";
    oj doc = envelope(cmd);
    doc["complex"] = o.complex->name;
    doc["group"] = o.group->name;
    doc["holds"] = res.holds;
    doc["uncovered_vertices"] = res.uncovered_vertices;
    doc["scope"] = res.scope;
    return Report{res.holds ? Verdict::Ok : Verdict::Negative, os.str(), doc.dump(2)};
}

Report cmd_cm_check(const CommandOptions& o) {
    const std::string cmd = "cm-check";
    const ComplexFile& x = need_complex(o, cmd);
    const CMReport rep = cohen_macaulay(x.complex);
    std::ostringstream os;
    os << (rep.is_cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << " (dimension " << rep.dimension << ")\n";
    cm_text(os, x.complex, rep, "  ");
    oj doc = envelope(cmd);
    doc["complex"] = x.name;
    doc.update(cm_json(x.complex, rep));
    return Report{rep.is_cm ? Verdict::Ok : Verdict::Negative, os.str(), doc.dump(2)};
}

Report cmd_duality_report(const CommandOptions& o) {
    const std::string cmd = "duality-report";
    const ComplexFile& x = need_complex(o, cmd);
    const DualityVerdict v = raag_duality(x.complex);
    const int top = x.complex.dimension() + 1;
    const JMProfile prof = jensen_meier_profile(x.complex, top);

    std::ostringstream os;
    os << "A_L is " << (v.is_duality ? "" : "not ") << "a duality group (L "
       << (v.report.is_cm ? "is" : "is not") << " Cohen-Macaulay)\n";
    cm_text(os, x.complex, v.report, "  ");
    os << "H^k(A_L, Z A_L), each entry an infinite direct sum of copies of its group:\n";
    oj profile = oj::array();
    for (const auto& [k, entries] : prof.by_degree) {
        os << "  k = " << k << ": ";
        if (entries.empty()) os << "0";
        oj js = oj::array();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            os << (i ? ", " : "") << e.group.str() << " at " << simplex_text(x.complex, e.simplex);
            js.push_back(oj{{"simplex", simplex_json(x.complex, e.simplex)},
                            {"link_degree", e.link_degree},
                            {"group", to_json(e.group)},
                            {"multiplicity", "infinite"}});
        }
        os << "\n";
        profile.push_back(oj{{"degree", k}, {"entries", std::move(js)}});
    }
    os << "profile is " << (prof.torsion_free ? "" : "not ") << "torsion-free\n";

    oj doc = envelope(cmd);
    doc["complex"] = x.name;
    doc["is_duality"] = v.is_duality;
    doc["cm"] = cm_json(x.complex, v.report);
    doc["profile"] = std::move(profile);
    doc["torsion_free"] = prof.torsion_free;
    if (o.group) {
        const GroupAction a = build_action(x, *o.group);
        const ObstructionScan s = bredon_duality_obstruction(a);
        os << "Bredon duality scan over " << s.classes.size() << " classes:\n";
        scan_text(os, s);
        doc["group"] = o.group->name;
        doc["bredon_scan"] = scan_json(s);
    }
    return Report{Verdict::Ok, os.str(), doc.dump(2)};
}

Report cmd_double(const CommandOptions& o) {
    const std::string cmd = "double";
    const ComplexFile& x = need_complex(o, cmd);
    if (!o.pattern) throw InputError(cmd + ": --pattern is required");
    const ComplexFile& pat = *o.pattern;
    oj doc = envelope(cmd);
    doc["complex"] = x.name;
    doc["pattern"] = pat.name;

    const auto emb = find_full_subcomplex_isomorphic(x.complex, pat.complex);
    std::ostringstream os;
    if (!emb) {
        os << "no full subcomplex of " << x.name << " is isomorphic to " << pat.name << "\n";
        doc["embedding"] = nullptr;
        return Report{Verdict::Negative, os.str(), doc.dump(2)};
    }
    oj image;
    os << "embedding:";
    for (std::size_t v = 0; v < emb->image.size(); ++v) {
        const std::string& from = pat.complex.vertices()[v];
        const std::string& to = x.complex.vertices()[emb->image[v]];
        image[from] = to;
        os << " " << from << "->" << to << " (degree " << x.complex.degree(emb->image[v]) << ")";
    }
    os << "\n";

    const SimplicialComplex along = full_subcomplex(x.complex, emb->image_set());
    const DoubledComplex d = double_along(x.complex, along);
    const SimplicialComplex fixed = fixed_subcomplex(d.swap, d.swap.group().whole());
    const CMReport l_cm = cohen_macaulay(d.complex);
    const bool flag = is_flag(d.complex);
    const bool fixed_is_pattern = are_isomorphic(fixed, pat.complex);
    const CMReport fixed_cm = cohen_macaulay(fixed);
    const ObstructionScan scan = bredon_duality_obstruction(d.swap);

    os << "doubled complex: " << d.complex.vertex_count() << " vertices, dimension " << d.complex.dimension()
       << ", " << (flag ? "flag" : "not flag") << ", " << (l_cm.is_cm ? "Cohen-Macaulay" : "not Cohen-Macaulay")
       << "\n";
    os << "fixed complex of the swap: " << (fixed_is_pattern ? "isomorphic" : "not isomorphic") << " to "
       << pat.name << ", " << (fixed_cm.is_cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << "\n";
    cm_text(os, fixed, fixed_cm, "  ");
    os << "Bredon duality scan:\n";
    scan_text(os, scan);

    doc["embedding"] = std::move(image);
    doc["doubled"] = oj::parse(complex_to_json(x.name + "-doubled", d.complex));
    doc["copy_of"] = d.copy_of;
    doc["doubled_is_flag"] = flag;
    doc["doubled_cm"] = cm_json(d.complex, l_cm);
    doc["fixed_isomorphic_to_pattern"] = fixed_is_pattern;
    doc["fixed_cm"] = cm_json(fixed, fixed_cm);
    doc["bredon_scan"] = scan_json(scan);
    return Report{Verdict::Ok, os.str(), doc.dump(2)};
}

Report cmd_quillen(const CommandOptions& o) {
    const std::string cmd = "quillen-check";
    const FiniteGroup g = build_group(need_group(o, cmd));
    const HomologyComparison c = quillen_thevenaz_check(g);
    const HomologyComparison sq = quillen_thevenaz_check(g, SubgroupFilter::SquarefreeAbelianNontrivial);
    std::ostringstream os;
    os << "|N_1(G)|: " << homology_text(c.first) << "\n";
    os << "|A_1(G)|: " << homology_text(c.second) << "\n";
    os << "reduced homology " << (c.equal ? "agrees" : "DIFFERS") << "\n";
    os << "abelian subgroups of squarefree exponent: " << homology_text(sq.second) << " ("
       << (sq.equal ? "agrees" : "differs") << ")\n";
    oj doc = envelope(cmd);
    doc["group"] = o.group->name;
    doc["group_order"] = g.order();
    doc["nilpotent_poset_homology"] = to_json(c.first);
    doc["elementary_abelian_poset_homology"] = to_json(c.second);
    doc["equal"] = c.equal;
    doc["squarefree_abelian_poset_homology"] = to_json(sq.second);
    doc["squarefree_equal"] = sq.equal;
    bool ok = c.equal;
    if (g.order() > 1 && p_group_prime(g.order())) {
        const bool acyclic = is_acyclic(c.second);
        os << "p-group: |A_1(G)| " << (acyclic ? "is" : "is NOT") << " acyclic\n";
        doc["p_group_a1_acyclic"] = acyclic;
        ok = ok && acyclic;
    } else {
        doc["p_group_a1_acyclic"] = nullptr;
    }
    return Report{ok ? Verdict::Ok : Verdict::Negative, os.str(), doc.dump(2)};
}

Report cmd_weyl(const CommandOptions& o) {
    const std::string cmd = "weyl-check";
    const FiniteGroup g = build_group(need_group(o, cmd));
    if (!p_group_prime(g.order())) throw PreconditionError(cmd + ": the group is not a p-group");
    std::ostringstream os;
    oj classes = oj::array();
    bool all = true;
    for (const auto& c : conjugacy_classes_of_subgroups(g)) {
        const HomologyComparison h = weyl_poset_check(g, c.representative);
        all = all && h.equal;
        os << "  H = " << subgroup_label(g, c.representative) << ": " << (h.equal ? "agrees" : "DIFFERS") << " ("
           << homology_text(h.first) << ")\n";
        oj j = class_json(g, c);
        j["upper_interval_homology"] = to_json(h.first);
        j["weyl_poset_homology"] = to_json(h.second);
        j["equal"] = h.equal;
        classes.push_back(std::move(j));
    }
    os << (all ? "all classes agree\n" : "some class differs\n");
    oj doc = envelope(cmd);
    doc["group"] = o.group->name;
    doc["classes"] = std::move(classes);
    doc["all_equal"] = all;
    return Report{all ? Verdict::Ok : Verdict::Negative, os.str(), doc.dump(2)};
}

Report cmd_poset_euler(const CommandOptions& o) {
    const std::string cmd = "poset-euler";
    FiniteGroup g;
    std::string name;
    if (o.group) {
        g = build_group(*o.group);
        name = o.group->name;
    } else {
        const std::int64_t p = need_int(o.p, cmd, "--p (or --group)");
        const std::int64_t n = need_int(o.n, cmd, "--n");
        if (!is_prime(p)) throw InputError(cmd + ": p = " + std::to_string(p) + " is not prime");
        if (n < 1 || n > 4) throw InputError(cmd + ": n must lie in 1..4");
        std::vector<std::string> points;
        std::vector<Permutation> gens;
        const auto deg = static_cast<std::size_t>(p * n);
        for (std::size_t i = 0; i < deg; ++i) points.push_back(std::to_string(i + 1));
        for (std::int64_t f = 0; f < n; ++f) {
            std::vector<Point> images(deg);
            for (std::size_t i = 0; i < deg; ++i) images[i] = static_cast<Point>(i);
            for (std::int64_t i = 0; i < p; ++i)
                images[static_cast<std::size_t>(f * p + i)] = static_cast<Point>(f * p + (i + 1) % p);
            gens.emplace_back(std::move(images));
        }
        g = FiniteGroup::from_generators(std::move(points), std::move(gens));
        name = "C" + std::to_string(p) + "^" + std::to_string(n);
    }
    const SubgroupPoset s = subgroup_poset(g, SubgroupFilter::ProperNontrivial);
    const std::int64_t e = augmented_euler(s.poset);
    std::ostringstream os;
    os << "S(" << name << "): " << s.poset.size() << " nontrivial proper subgroups, augmented Euler characteristic "
       << e << "\n";
    oj doc = envelope(cmd);
    doc["group"] = name;
    doc["group_order"] = g.order();
    doc["poset_size"] = s.poset.size();
    doc["chain_counts"] = chain_counts(s.poset);
    doc["augmented_euler"] = e;
    bool ok = true;
    const auto p = p_group_prime(g.order());
    if (g.order() > 1 && p && is_elementary_abelian(g, g.whole(), *p)) {
        const int n = elementary_abelian_rank(g, g.whole(), *p);
        const std::int64_t f = elementary_abelian_euler_formula(*p, n);
        ok = f == e;
        os << "elementary abelian of rank " << n << ": (-1)^n p^(n choose 2) = " << f << " ("
           << (ok ? "agrees" : "DIFFERS") << ")\n";
        doc["formula"] = f;
        doc["equal"] = ok;
    } else {
        doc["formula"] = nullptr;
        doc["equal"] = nullptr;
    }
    return Report{ok ? Verdict::Ok : Verdict::Negative, os.str(), doc.dump(2)};
}

Report cmd_subgroups(const CommandOptions& o) {
    const std::string cmd = "subgroups";
    const FiniteGroup g = build_group(need_group(o, cmd));
    const auto subs = all_subgroups(g);
    const auto classes = conjugacy_classes_of_subgroups(g, subs);
    std::ostringstream os;
    os << "order " << g.order() << ", " << subs.size() << " subgroups in " << classes.size() << " conjugacy classes\n";
    oj js = oj::array();
    for (const auto& c : classes) {
        const Subgroup& h = c.representative;
        std::vector<std::string> flags;
        if (is_normal(g, g.whole(), h)) flags.push_back("normal");
        if (is_cyclic(g, h)) flags.push_back("cyclic");
        if (is_abelian(g, h)) flags.push_back("abelian");
        if (!h.is_trivial() && is_elementary_abelian(g, h)) flags.push_back("elementary-abelian");
        if (is_nilpotent(g, h)) flags.push_back("nilpotent");
        const std::size_t nk = normalizer(g, h).order();
        os << "  order " << h.order() << "  x" << c.members.size() << "  |N| = " << nk << "  " << subgroup_label(g, h);
        if (!flags.empty()) os << "  [" << join(flags, ", ") << "]";
        os << "\n";
        oj j = class_json(g, c);
        j["normalizer_order"] = nk;
        j["properties"] = flags;
        js.push_back(std::move(j));
    }
    oj doc = envelope(cmd);
    doc["group"] = o.group->name;
    doc["group_order"] = g.order();
    doc["subgroup_count"] = subs.size();
    doc["classes"] = std::move(js);
    return Report{Verdict::Ok, os.str(), doc.dump(2)};
}

Report cmd_jones(const CommandOptions& o) {
    const std::string cmd = "jones-verify";
    const std::int64_t m = need_int(o.m, cmd, "--m");
    const std::int64_t q = need_int(o.q, cmd, "--q");
    const std::int64_t p = need_int(o.p, cmd, "--p");
    if (m < 1 || m > 64) throw InputError(cmd + ": m must lie in 1..64");
    if (q < 2) throw InputError(cmd + ": q must be at least 2");
    if (p > 4096 || q > 4096) throw InputError(cmd + ": p and q are limited to 4096");
    const JonesReport rep = jones_verify(static_cast<int>(m), q, p);
    std::ostringstream os;
    os << "extension of M(Z/" << q << ", " << m << ") by free C_" << p << "-cells\n";
    os << "  total complex: " << (rep.acyclic ? "acyclic" : "NOT acyclic") << " ("
       << homology_text(rep.total_reduced_homology) << ")\n";
    os << "  fixed part " << (rep.fixed_part_is_moore ? "equals" : "DIFFERS from") << " the Moore complex, H_" << m
       << " = " << rep.fixed_homology_m.str() << "\n";
    if (is_prime(q)) os << "  dim H_" << m << "(fixed; F_" << q << ") = " << rep.fixed_mod_q_dimension_m << "\n";
    os << (rep.verified() ? "verified\n" : "NOT verified\n");
    oj doc = envelope(cmd);
    doc["m"] = m;
    doc["q"] = q;
    doc["p"] = p;
    doc["acyclic"] = rep.acyclic;
    doc["total_reduced_homology"] = to_json(rep.total_reduced_homology);
    doc["fixed_part_is_moore"] = rep.fixed_part_is_moore;
    doc["fixed_homology_m"] = to_json(rep.fixed_homology_m);
    doc["fixed_mod_q_dimension_m"] = is_prime(q) ? oj(rep.fixed_mod_q_dimension_m) : oj(nullptr);
    doc["verified"] = rep.verified();
    return Report{rep.verified() ? Verdict::Ok : Verdict::Negative, os.str(), doc.dump(2)};
}

using Handler = std::function<Report(const CommandOptions&)>;

const std::vector<std::pair<std::string, Handler>>& table() {
    static const std::vector<std::pair<std::string, Handler>> t{
        {"euler-class", cmd_euler_class},    {"euler-free-coeff", cmd_euler_free_coeff},
        {"acyclicity-check", cmd_acyclicity}, {"cm-check", cmd_cm_check},
        {"duality-report", cmd_duality_report}, {"double", cmd_double},
        {"quillen-check", cmd_quillen},      {"weyl-check", cmd_weyl},
        {"poset-euler", cmd_poset_euler},    {"subgroups", cmd_subgroups},
        {"jones-verify", cmd_jones},
    };
    return t;
}

} // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, h] : table()) out.push_back(n);
        return out;
    }();
    return names;
}

Report run_command(const std::string& name, const CommandOptions& opt) {
    for (const auto& [n, h] : table())
        if (n == name) return h(opt);
    throw InputError("unknown command '" + name + "'");
}

} // namespace equichar
