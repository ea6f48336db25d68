#include <doctest.h>

#include <algorithm>
#include <set>

#include "equichar/action.hpp"
#include "equichar/error.hpp"
#include "equichar/simplicial.hpp"
#include "support.hpp"

using namespace equichar;
using equichar::testing::action_of;
using equichar::testing::complex_named;
using equichar::testing::group_named;
using equichar::testing::rng;

namespace {

std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

struct RandomGraph {
    std::size_t n;
    std::vector<std::vector<bool>> adj;
    std::vector<std::pair<std::string, std::string>> edges;
};

RandomGraph random_graph(std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    RandomGraph g{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)), {}};
    const auto names = numbered(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng())) {
                g.adj[i][j] = g.adj[j][i] = true;
                g.edges.emplace_back(names[i], names[j]);
            }
    return g;
}

// Cliques by subset enumeration, as sorted name lists.
std::set<std::vector<std::string>> brute_cliques(const RandomGraph& g) {
    const auto names = numbered(g.n);
    std::set<std::vector<std::string>> out;
    for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < g.n; ++i)
            if (mask >> i & 1u) vs.push_back(i);
        bool clique = true;
        for (std::size_t a = 0; a < vs.size() && clique; ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (!g.adj[vs[a]][vs[b]]) clique = false;
        if (!clique) continue;
        std::vector<std::string> s;
        for (std::size_t i : vs) s.push_back(names[i]);
        std::sort(s.begin(), s.end());
        out.insert(s);
    }
    return out;
}

// All nonempty faces of the facets, counted directly.
std::int64_t brute_euler(const std::vector<Simplex>& facets) {
    std::set<Simplex> faces;
    for (const Simplex& f : facets)
        for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (mask >> i & 1u) s.push_back(f[i]);
            faces.insert(s);
        }
    std::int64_t chi = 0;
    for (const Simplex& s : faces) chi += (s.size() % 2 == 1) ? 1 : -1;
    return chi;
}

std::int64_t reduced_euler_from_homology(const std::map<int, HomologyGroup>& h) {
    std::int64_t sum = 0;
    for (const auto& [d, g] : h) sum += (d % 2 == 0 ? 1 : -1) * g.betti;
    return sum;
}

HomologyGroup Z() { return HomologyGroup{1, {}}; }

// Nonzero reduced homology groups only.
std::map<int, HomologyGroup> nonzero(const std::map<int, HomologyGroup>& h) {
    std::map<int, HomologyGroup> out;
    for (const auto& [d, g] : h)
        if (!g.is_zero()) out[d] = g;
    return out;
}

// Injective maps pattern -> host preserving simplices both ways, by brute force.
bool brute_embeds(const SimplicialComplex& host, const SimplicialComplex& pattern) {
    const std::size_t n = pattern.vertex_count(), m = host.vertex_count();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == n) masks.push_back(mask);
    for (std::uint32_t mask : masks) {
        std::vector<VertexId> chosen;
        for (VertexId v = 0; v < m; ++v)
            if (mask >> v & 1u) chosen.push_back(v);
        do {
            bool ok = true;
            for (std::uint32_t sub = 1; sub < (1u << n) && ok; ++sub) {
                Simplex ps, hs;
                for (std::size_t i = 0; i < n; ++i)
                    if (sub >> i & 1u) {
                        ps.push_back(static_cast<VertexId>(i));
                        hs.push_back(chosen[i]);
                    }
                std::sort(hs.begin(), hs.end());
                if (pattern.contains(ps) != host.contains(hs)) ok = false;
            }
            if (ok) return true;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return false;
}

} // namespace

TEST_CASE("face closure and basic counts") {
    const SimplicialComplex t = complex_named("T");
    CHECK(t.vertex_count() == 5);
    CHECK(t.dimension() == 2);
    CHECK(t.count(0) == 5);
    CHECK(t.count(1) == 6);
    CHECK(t.count(2) == 2);
    CHECK(t.facets().size() == 2);
    CHECK(euler_characteristic(t) == 1);
    CHECK(t.contains({}));
    CHECK(t.degree(t.require_vertex("u")) == 4);
    CHECK(t.label(t.simplex_of({"v1", "u"})) == "{u,v1}");

    const SimplicialComplex empty;
    CHECK(empty.dimension() == -1);
    CHECK(euler_characteristic(empty) == 0);
    CHECK(nonzero(reduced_homology(empty)) == std::map<int, HomologyGroup>{{-1, Z()}});
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_simplices({"a"}, {{"a", "b"}}), InputError);
    CHECK_THROWS_AS(flag_complex_from_graph({"a", "b"}, {{"a", "a"}}), InputError);
    CHECK_THROWS_AS(flag_complex_from_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InputError);
    const SimplicialComplex t = complex_named("T");
    CHECK_THROWS_AS(link(t, t.simplex_of({"v1", "v2"})), InputError);
}

TEST_CASE("flag complexes of random graphs match clique enumeration") {
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + trial % 6;
        const RandomGraph g = random_graph(n, 0.3 + 0.1 * (trial % 5));
        const SimplicialComplex x = flag_complex_from_graph(numbered(n), g.edges);
        CHECK(x.canonical() == brute_cliques(g));
        CHECK(is_flag(x));
        CHECK(euler_characteristic(x) == brute_euler(x.facets()));
        // Euler-Poincare for the reduced theory
        CHECK(reduced_euler_from_homology(reduced_homology(x)) == euler_characteristic(x) - 1);
    }
}

TEST_CASE("non-flag complexes are recognized") {
    CHECK_FALSE(is_flag(complex_named("boundary_tetrahedron")));
    const SimplicialComplex hollow = SimplicialComplex::from_maximal_simplices(
        {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK_FALSE(is_flag(hollow));
    for (const char* name : {"T", "artinL", "star", "octahedron", "square", "point", "edge", "two_edges",
                             "sd_boundary_tetrahedron"}) {
        CAPTURE(name);
        CHECK(is_flag(complex_named(name)));
    }
}

TEST_CASE("reduced homology of standard spaces") {
    using H = std::map<int, HomologyGroup>;
    CHECK(nonzero(reduced_homology(complex_named("boundary_tetrahedron"))) == H{{2, Z()}});
    CHECK(nonzero(reduced_homology(complex_named("octahedron"))) == H{{2, Z()}});
    CHECK(nonzero(reduced_homology(complex_named("sd_boundary_tetrahedron"))) == H{{2, Z()}});
    CHECK(nonzero(reduced_homology(complex_named("square"))) == H{{1, Z()}});
    CHECK(nonzero(reduced_homology(complex_named("two_edges"))) == H{{0, Z()}});
    for (const char* name : {"T", "artinL", "star", "point", "edge"}) {
        CAPTURE(name);
        CHECK(nonzero(reduced_homology(complex_named(name))).empty());
    }
    // boundary of the 4-simplex: S^3
    std::vector<std::vector<std::string>> facets;
    const auto v = numbered(5);
    for (std::size_t skip = 0; skip < 5; ++skip) {
        std::vector<std::string> f;
        for (std::size_t i = 0; i < 5; ++i)
            if (i != skip) f.push_back(v[i]);
        facets.push_back(f);
    }
    CHECK(nonzero(reduced_homology(SimplicialComplex::from_maximal_simplices(v, facets))) == H{{3, Z()}});
}

TEST_CASE("links agree with the definition") {
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 4 + trial % 4;
        const RandomGraph g = random_graph(n, 0.55);
        const SimplicialComplex x = flag_complex_from_graph(numbered(n), g.edges);
        for (const Simplex& sigma : x.all_simplices()) {
            std::set<std::vector<std::string>> expected;
            for (const Simplex& tau : x.all_simplices()) {
                Simplex u;
                std::set_union(sigma.begin(), sigma.end(), tau.begin(), tau.end(), std::back_inserter(u));
                if (u.size() == sigma.size() + tau.size() && x.contains(u)) {
                    auto names = x.names(tau);
                    std::sort(names.begin(), names.end());
                    expected.insert(names);
                }
            }
            CHECK(link(x, sigma).canonical() == expected);
        }
        CHECK(link(x, {}) == x);
    }
    const SimplicialComplex oct = complex_named("octahedron");
    CHECK(nonzero(reduced_homology(link(oct, oct.simplex_of({"a"})))) ==
          std::map<int, HomologyGroup>{{1, Z()}});
    const SimplicialComplex t = complex_named("T");
    CHECK(nonzero(reduced_homology(link(t, t.simplex_of({"u"})))) == std::map<int, HomologyGroup>{{0, Z()}});
}

TEST_CASE("full subcomplexes") {
    const SimplicialComplex oct = complex_named("octahedron");
    const SimplicialComplex sq = full_subcomplex(oct, std::vector<std::string>{"a", "b", "a'", "b'"});
    CHECK(sq.count(1) == 4);
    CHECK(sq.dimension() == 1);
    CHECK(are_isomorphic(sq, complex_named("square")));
    CHECK(full_subcomplex(oct, std::vector<std::string>{}).empty());
}

TEST_CASE("barycentric subdivision") {
    const SimplicialComplex sd = barycentric_subdivision(complex_named("boundary_tetrahedron"));
    CHECK(sd == complex_named("sd_boundary_tetrahedron"));
    CHECK(sd.vertex_count() == 14);
    CHECK(sd.count(2) == 24);
    CHECK(is_flag(sd));
    const SimplicialComplex sdt = barycentric_subdivision(complex_named("T"));
    CHECK(euler_characteristic(sdt) == euler_characteristic(complex_named("T")));
    CHECK(sdt.vertex_count() == complex_named("T").simplex_count());
}

TEST_CASE("isomorphism and relabelling") {
    const SimplicialComplex star = complex_named("star");
    CHECK(star == complex_named("artinL"));
    CHECK(are_isomorphic(complex_named("square"), relabel(complex_named("square"), {"p", "q", "r", "s"})));
    CHECK_FALSE(are_isomorphic(complex_named("square"), complex_named("artinL")));
    CHECK_FALSE(are_isomorphic(complex_named("two_edges"), complex_named("square")));
}

TEST_CASE("full subcomplex search") {
    const SimplicialComplex t = complex_named("T");
    const SimplicialComplex oct = complex_named("octahedron");
    const SimplicialComplex sd = complex_named("sd_boundary_tetrahedron");

    CHECK_FALSE(find_full_subcomplex_isomorphic(oct, t).has_value());
    CHECK_FALSE(brute_embeds(oct, t));

    const auto e = find_full_subcomplex_isomorphic(sd, t);
    REQUIRE(e.has_value());
    const SimplicialComplex image = full_subcomplex(sd, e->image_set());
    std::vector<std::string> names;
    for (VertexId v : e->image) names.push_back(sd.vertices()[v]);
    CHECK(relabel(t, names) == image);

    CHECK(find_full_subcomplex_isomorphic(oct, complex_named("point")).has_value());
    CHECK(find_full_subcomplex_isomorphic(oct, complex_named("square")).has_value());
    CHECK_FALSE(find_full_subcomplex_isomorphic(complex_named("square"), complex_named("two_edges")).has_value());

    for (int trial = 0; trial < 30; ++trial) {
        const RandomGraph hg = random_graph(6, 0.5);
        const RandomGraph pg = random_graph(3 + trial % 2, 0.5);
        const SimplicialComplex host = flag_complex_from_graph(numbered(6), hg.edges);
        const SimplicialComplex pat = flag_complex_from_graph(numbered(pg.n), pg.edges);
        const auto found = find_full_subcomplex_isomorphic(host, pat);
        CHECK(found.has_value() == brute_embeds(host, pat));
        if (found) {
            std::vector<std::string> img;
            for (VertexId v : found->image) img.push_back(host.vertices()[v]);
            CHECK(relabel(pat, img) == full_subcomplex(host, found->image_set()));
        }
    }
}

TEST_CASE("group actions: validation and admissibility") {
    const GroupAction ok = action_of("artinL", "d8_star");
    CHECK(ok.group().order() == 8);
    CHECK(is_admissible(ok).admissible);

    const SimplicialComplex sq = complex_named("square");
    const FiniteGroup bad = FiniteGroup::from_generators(sq.vertices(), {parse_cycles("(1 2)", sq.vertices())});
    CHECK_THROWS_AS(GroupAction::of_permutation_group(sq, bad), InputError);

    const SimplicialComplex edge = complex_named("edge");
    const FiniteGroup flip = FiniteGroup::from_generators(edge.vertices(), {parse_cycles("(a b)", edge.vertices())});
    const GroupAction flipped = GroupAction::of_permutation_group(edge, flip);
    const AdmissibilityResult r = is_admissible(flipped);
    CHECK_FALSE(r.admissible);
    REQUIRE(r.simplex.has_value());
    CHECK(edge.label(*r.simplex) == "{a,b}");
    CHECK_THROWS_AS(fixed_subcomplex(flipped, flip.whole()), PreconditionError);
}

TEST_CASE("fixed subcomplexes") {
    const GroupAction a = action_of("two_edges", "c2swap");
    CHECK(fixed_subcomplex(a, a.group().whole()).empty());
    CHECK(fixed_subcomplex(a, a.group().trivial()) == a.complex());

    const GroupAction d = action_of("artinL", "d8_star");
    const FiniteGroup& g = d.group();
    for (const Subgroup& h : all_subgroups(g)) {
        // oracle: vertices fixed by every element, then the full subcomplex
        std::vector<VertexId> fixed;
        for (VertexId v = 0; v < d.complex().vertex_count(); ++v) {
            bool all = true;
            for (ElementId e : h.elements())
                if (d.vertex_map(e)(v) != v) all = false;
            if (all) fixed.push_back(v);
        }
        CHECK(fixed_vertices(d, h) == fixed);
        CHECK(fixed_subcomplex(d, h) == full_subcomplex(d.complex(), fixed));
    }
}

TEST_CASE("induced action of the Weyl group") {
    const GroupAction d = action_of("artinL", "d8_star");
    const FiniteGroup& g = d.group();
    const std::vector<std::string> pts = g.points();
    const Permutation refl = parse_cycles("(1 3)", pts);
    const Subgroup h = g.generate(std::vector<ElementId>{g.id_of(refl)});
    const InducedAction ind = induced_quotient_action(d, h);
    CHECK(ind.weyl.normalizer_part.order() == 4);
    CHECK(ind.weyl.group.order() == 2);
    const SimplicialComplex& fx = ind.action.complex();
    CHECK(fx == full_subcomplex(d.complex(), std::vector<std::string>{"2", "4", "5"}));
    // the nontrivial Weyl element swaps the two remaining leaves
    const Permutation& w = ind.action.vertex_map(1);
    CHECK(fx.vertices()[w(*fx.vertex_id("2"))] == "4");
    CHECK(fx.vertices()[w(*fx.vertex_id("5"))] == "5");
}
