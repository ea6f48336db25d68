#include "equichar/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "equichar/error.hpp"

namespace equichar {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
        if (x >= images_.size() || seen[x]) throw InputError("permutation is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Point> id(n);
    std::iota(id.begin(), id.end(), Point{0});
    return Permutation(std::move(id));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<Point> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw InputError("composing permutations of different degree");
    Permutation p;
    p.images_.resize(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) p.images_[i] = b.images_[a.images_[i]];
    return p;
}

Permutation parse_cycles(const std::string& text, std::span<const std::string> points) {
    std::map<std::string, Point, std::less<>> index;
    for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], static_cast<Point>(i));

    std::vector<Point> images(points.size());
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> moved(points.size(), false);

    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw InputError("cycle notation: expected '(' in \"" + text + "\"");
        ++pos;
        std::vector<Point> cycle;
        for (;;) {
            skip_ws();
            if (pos >= text.size()) throw InputError("cycle notation: unterminated cycle in \"" + text + "\"");
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            std::size_t start = pos;
            while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ')' &&
                   text[pos] != '(' && text[pos] != ',')
                ++pos;
            const std::string name = text.substr(start, pos - start);
            if (name.empty()) throw InputError("cycle notation: empty point name in \"" + text + "\"");
            auto it = index.find(name);
            if (it == index.end()) throw InputError("cycle notation: unknown point '" + name + "'");
            cycle.push_back(it->second);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') ++pos;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (moved[cycle[i]]) throw InputError("cycle notation: point '" + points[cycle[i]] + "' repeated");
            moved[cycle[i]] = true;
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_ws();
    }
    return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p, std::span<const std::string> points) {
    std::ostringstream os;
    std::vector<bool> done(p.degree(), false);
    for (Point start = 0; start < p.degree(); ++start) {
        if (done[start] || p(start) == start) continue;
        os << '(';
        Point x = start;
        bool first = true;
        do {
            if (!first) os << ' ';
            os << points[x];
            done[x] = true;
            x = p(x);
            first = false;
        } while (x != start);
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------------------
// Subgroup

bool Subgroup::contains(ElementId e) const { return std::binary_search(elements_.begin(), elements_.end(), e); }

bool Subgroup::is_subset_of(const Subgroup& other) const {
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace {
constexpr std::size_t kTableBound = 512;
}

FiniteGroup FiniteGroup::from_generators(std::vector<std::string> points, std::vector<Permutation> generators,
                                         std::size_t order_bound) {
    {
        std::set<std::string> unique(points.begin(), points.end());
        if (unique.size() != points.size()) throw InputError("group: duplicate point names");
    }
    for (const auto& g : generators)
        if (g.degree() != points.size()) throw InputError("group: generator degree does not match point count");

    FiniteGroup G;
    G.points_ = std::move(points);
    G.generators_ = std::move(generators);

    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    const Permutation id = Permutation::identity(G.points_.size());
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation x = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : G.generators_) {
            Permutation y = x * s;
            if (seen.insert(y).second) {
                if (seen.size() > order_bound)
                    throw ResourceError("group order exceeds the configured bound of " + std::to_string(order_bound));
                queue.push_back(std::move(y));
            }
        }
    }
    G.elements_.assign(seen.begin(), seen.end());
    for (std::size_t i = 0; i < G.elements_.size(); ++i) G.index_.emplace(G.elements_[i], static_cast<ElementId>(i));
    G.inverses_.resize(G.elements_.size());
    for (std::size_t i = 0; i < G.elements_.size(); ++i) G.inverses_[i] = G.index_.at(G.elements_[i].inverse());

    const std::size_t n = G.elements_.size();
    if (n <= kTableBound) {
        G.table_.resize(n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) G.table_[a * n + b] = G.index_.at(G.elements_[a] * G.elements_[b]);
    }
    return G;
}

ElementId FiniteGroup::id_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw InputError("permutation is not an element of the group");
    return it->second;
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
    if (!table_.empty()) return table_[a * elements_.size() + b];
    return index_.at(elements_[a] * elements_[b]);
}

std::size_t FiniteGroup::element_order(ElementId a) const {
    std::size_t k = 1;
    for (ElementId x = a; x != identity(); x = multiply(x, a)) ++k;
    return k;
}

Subgroup FiniteGroup::whole() const {
    std::vector<ElementId> all(elements_.size());
    std::iota(all.begin(), all.end(), ElementId{0});
    return Subgroup(std::move(all));
}

Subgroup FiniteGroup::generate(std::span<const ElementId> gens) const {
    std::vector<bool> in(elements_.size(), false);
    std::vector<ElementId> members{identity()};
    in[identity()] = true;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (ElementId s : gens) {
            const ElementId y = multiply(members[i], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return Subgroup(std::move(members));
}

Subgroup FiniteGroup::make_subgroup(std::vector<ElementId> elements) const {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    for (ElementId e : elements)
        if (e >= order()) throw InputError("subgroup: element id out of range");
    Subgroup h(std::move(elements));
    if (!is_subgroup(*this, h)) throw InputError("subset is not a subgroup");
    return h;
}

std::vector<ElementId> generators_of(const FiniteGroup& g, const Subgroup& h) {
    std::vector<ElementId> gens;
    Subgroup current = g.trivial();
    for (ElementId e : h.elements()) {
        if (current.contains(e)) continue;
        gens.push_back(e);
        current = g.generate(gens);
        if (current.order() == h.order()) break;
    }
    return gens;
}

std::vector<std::string> subgroup_generator_strings(const FiniteGroup& g, const Subgroup& h) {
    std::vector<std::string> out;
    for (ElementId e : generators_of(g, h)) out.push_back(g.cycles(e));
    return out;
}

std::string subgroup_label(const FiniteGroup& g, const Subgroup& h) {
    if (h.is_trivial()) return "1";
    std::string s = "⟨";
    bool first = true;
    for (const auto& c : subgroup_generator_strings(g, h)) {
        if (!first) s += ", ";
        s += c;
        first = false;
    }
    return s + "⟩";
}

namespace {
bool by_order_then_elements(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a < b;
}
} // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t count_bound) {
    std::map<Subgroup, std::vector<ElementId>> found; // subgroup -> generators
    std::vector<ElementId> cyclic_gens;
    for (ElementId e = 0; e < g.order(); ++e) {
        Subgroup c = g.generate(std::span<const ElementId>(&e, 1));
        if (found.emplace(c, std::vector<ElementId>{e}).second) cyclic_gens.push_back(e);
    }
    std::vector<Subgroup> frontier;
    for (const auto& [h, gens] : found) frontier.push_back(h);
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& a : frontier)
            for (ElementId c : cyclic_gens) {
                if (a.contains(c)) continue;
                std::vector<ElementId> gens = found.at(a);
                gens.push_back(c);
                Subgroup j = g.generate(gens);
                if (found.emplace(j, gens).second) {
                    if (found.size() > count_bound)
                        throw ResourceError("subgroup count exceeds the configured bound");
                    next.push_back(std::move(j));
                }
            }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& [h, gens] : found) out.push_back(h);
    std::sort(out.begin(), out.end(), by_order_then_elements);
    return out;
}

Subgroup conjugate(const FiniteGroup& g, const Subgroup& h, ElementId by) {
    std::vector<ElementId> els;
    els.reserve(h.order());
    for (ElementId x : h.elements()) els.push_back(g.conjugate(x, by));
    std::sort(els.begin(), els.end());
    return Subgroup(std::move(els));
}

std::vector<ConjugacyClass> conjugacy_classes_of_subgroups(const FiniteGroup& g, const std::vector<Subgroup>& subgroups) {
    std::set<Subgroup> pending(subgroups.begin(), subgroups.end());
    std::vector<ConjugacyClass> classes;
    while (!pending.empty()) {
        const Subgroup h = *pending.begin();
        std::set<Subgroup> orbit;
        for (ElementId x = 0; x < g.order(); ++x) orbit.insert(conjugate(g, h, x));
        ConjugacyClass cls;
        for (const auto& m : orbit) {
            if (pending.erase(m) == 0) throw InputError("subgroup list is not closed under conjugation");
            cls.members.push_back(m);
        }
        cls.representative = cls.members.front();
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return by_order_then_elements(a.representative, b.representative);
    });
    return classes;
}

std::vector<ConjugacyClass> conjugacy_classes_of_subgroups(const FiniteGroup& g) {
    return conjugacy_classes_of_subgroups(g, all_subgroups(g));
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& h) {
    if (h.elements().empty() || !h.contains(FiniteGroup::identity())) return false;
    for (ElementId a : h.elements()) {
        if (a >= g.order() || !h.contains(g.inverse(a))) return false;
        for (ElementId b : h.elements())
            if (!h.contains(g.multiply(a, b))) return false;
    }
    return true;
}

namespace {
void require_subgroup(const FiniteGroup& g, const Subgroup& h, const char* what) {
    if (!is_subgroup(g, h)) throw InputError(std::string(what) + ": argument is not a subgroup");
}

bool normalizes(const FiniteGroup& g, ElementId x, const Subgroup& h) {
    for (ElementId a : h.elements())
        if (!h.contains(g.conjugate(a, x))) return false;
    return true;
}
} // namespace

Subgroup normalizer(const FiniteGroup& g, const Subgroup& within, const Subgroup& h) {
    require_subgroup(g, h, "normalizer");
    require_subgroup(g, within, "normalizer");
    std::vector<ElementId> out;
    for (ElementId x : within.elements())
        if (normalizes(g, x, h)) out.push_back(x);
    return Subgroup(std::move(out));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) { return normalizer(g, g.whole(), h); }

Subgroup centralizer(const FiniteGroup& g, const Subgroup& within, const Subgroup& h) {
    require_subgroup(g, h, "centralizer");
    require_subgroup(g, within, "centralizer");
    std::vector<ElementId> out;
    for (ElementId x : within.elements()) {
        bool commutes = true;
        for (ElementId a : h.elements())
            if (g.multiply(x, a) != g.multiply(a, x)) {
                commutes = false;
                break;
            }
        if (commutes) out.push_back(x);
    }
    return Subgroup(std::move(out));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) { return centralizer(g, g.whole(), h); }

bool is_normal(const FiniteGroup& g, const Subgroup& n, const Subgroup& h) {
    if (!h.is_subset_of(n)) return false;
    for (ElementId x : n.elements())
        if (!normalizes(g, x, h)) return false;
    return true;
}

QuotientGroup quotient(const FiniteGroup& g, const Subgroup& n, const Subgroup& h) {
    require_subgroup(g, n, "quotient");
    require_subgroup(g, h, "quotient");
    if (!is_normal(g, n, h)) throw InputError("quotient: subgroup is not normal");

    QuotientGroup q;
    q.normalizer_part = n;
    q.normal_part = h;

    std::map<ElementId, std::size_t> coset_of;
    for (ElementId x : n.elements()) {
        if (coset_of.count(x)) continue;
        std::vector<ElementId> coset;
        for (ElementId a : h.elements()) coset.push_back(g.multiply(a, x));
        std::sort(coset.begin(), coset.end());
        for (ElementId y : coset) coset_of[y] = q.cosets.size();
        q.cosets.emplace_back(std::move(coset));
    }

    const std::size_t k = q.cosets.size();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("H*" + std::to_string(i));

    // Right multiplication on cosets: Hy -> Hyx.
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < k; ++i) {
        const ElementId x = q.cosets[i].elements().front();
        std::vector<Point> images(k);
        for (std::size_t j = 0; j < k; ++j) {
            const ElementId y = q.cosets[j].elements().front();
            images[j] = static_cast<Point>(coset_of.at(g.multiply(y, x)));
        }
        perms.emplace_back(std::move(images));
    }
    q.group = FiniteGroup::from_generators(names, perms);
    if (q.group.order() != k) throw InternalError("quotient: coset action is not regular");

    q.lift.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
        const ElementId qid = q.group.id_of(perms[i]);
        q.lift[qid] = q.cosets[i].elements().front();
        for (ElementId y : q.cosets[i].elements()) q.projection[y] = qid;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Predicates

std::optional<int> exact_log(std::size_t value, std::int64_t p) {
    if (value == 0 || p < 2) return std::nullopt;
    int n = 0;
    while (value % static_cast<std::size_t>(p) == 0) {
        value /= static_cast<std::size_t>(p);
        ++n;
    }
    if (value != 1) return std::nullopt;
    return n;
}

std::optional<std::int64_t> p_group_prime(std::size_t order) {
    if (order < 2) return std::nullopt;
    std::size_t p = 2;
    while (order % p != 0) ++p;
    if (!exact_log(order, static_cast<std::int64_t>(p))) return std::nullopt;
    return static_cast<std::int64_t>(p);
}

bool is_abelian(const FiniteGroup& g, const Subgroup& h) {
    for (ElementId a : h.elements())
        for (ElementId b : h.elements())
            if (g.multiply(a, b) != g.multiply(b, a)) return false;
    return true;
}

bool is_cyclic(const FiniteGroup& g, const Subgroup& h) {
    for (ElementId a : h.elements())
        if (g.element_order(a) == h.order()) return true;
    return false;
}

bool is_p_group(const Subgroup& h, std::int64_t p) { return exact_log(h.order(), p).has_value(); }

bool is_nilpotent(const FiniteGroup& g, const Subgroup& h) {
    // Upper central series Z_0 = 1, Z_{i+1} = {x in H : [x, y] in Z_i for all y in H}.
    Subgroup z = g.trivial();
    for (;;) {
        std::vector<ElementId> next;
        for (ElementId x : h.elements()) {
            bool central = true;
            for (ElementId y : h.elements()) {
                const ElementId comm = g.multiply(g.multiply(g.inverse(x), g.inverse(y)), g.multiply(x, y));
                if (!z.contains(comm)) {
                    central = false;
                    break;
                }
            }
            if (central) next.push_back(x);
        }
        if (next.size() == h.order()) return true;
        if (next.size() == z.order()) return false;
        z = Subgroup(std::move(next));
    }
}

bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h, std::int64_t p) {
    if (!is_p_group(h, p) || !is_abelian(g, h)) return false;
    for (ElementId a : h.elements())
        if (a != FiniteGroup::identity() && g.element_order(a) != static_cast<std::size_t>(p)) return false;
    return true;
}

bool is_elementary_abelian(const FiniteGroup& g, const Subgroup& h) {
    if (h.is_trivial()) return true;
    const auto p = p_group_prime(h.order());
    return p && is_elementary_abelian(g, h, *p);
}

int elementary_abelian_rank(const FiniteGroup& g, const Subgroup& h, std::int64_t p) {
    if (!is_elementary_abelian(g, h, p))
        throw PreconditionError("elementary_abelian_rank: subgroup is not elementary abelian for p = " +
                                std::to_string(p));
    return *exact_log(h.order(), p);
}

} // namespace equichar
