#include <doctest.h>

#include <numeric>

#include "equichar/error.hpp"
#include "equichar/jones.hpp"
#include "equichar/matrix.hpp"

using namespace equichar;

namespace {

IntegerMatrix product(const IntegerMatrix& a, const IntegerMatrix& b) {
    IntegerMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
}

bool is_zero(const IntegerMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) return false;
    return true;
}

// Augmented complex for field-coefficient checks.
ChainComplexZ augmented(const ChainComplexZ& c) {
    std::vector<IntegerMatrix> b;
    b.emplace_back(0, 1);
    IntegerMatrix aug(1, c.rank(0));
    for (std::size_t j = 0; j < c.rank(0); ++j) aug(0, j) = 1;
    b.push_back(aug);
    for (int d = 1; d <= c.hi(); ++d) b.push_back(c.boundary(d));
    return ChainComplexZ(-1, b);
}

// Acyclic over Z iff acyclic over every prime field; the boundary entries
// here are small, so the primes up to 13 and those dividing p, q suffice for
// a strong cross-check.
bool acyclic_mod_small_primes(const ChainComplexZ& c, std::int64_t p, std::int64_t q) {
    std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
    for (std::int64_t x : {p, q})
        for (std::int64_t d = 2; d <= x; ++d)
            if (x % d == 0 && is_prime(d)) primes.push_back(d);
    const ChainComplexZ a = augmented(c);
    for (std::int64_t ell : primes)
        for (const auto& [deg, dim] : homology_mod_p(a, ell))
            if (dim != 0) return false;
    return true;
}

std::int64_t euler(const ChainComplexZ& c) {
    std::int64_t chi = 0;
    for (int d = c.lo(); d <= c.hi(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c.rank(d));
    return chi;
}

} // namespace

TEST_CASE("projective plane cell complex") {
    const ChainComplexZ rp2 = rp2_complex();
    CHECK(rp2.rank(0) == 1);
    CHECK(rp2.rank(1) == 1);
    CHECK(rp2.rank(2) == 1);
    CHECK(rp2.boundary(2)(0, 0) == 2);
    CHECK(rp2.boundary(1)(0, 0) == 0);
    const auto h = homology(rp2);
    CHECK(h.at(0) == HomologyGroup{1, {}});
    CHECK(h.at(1) == HomologyGroup{0, {2}});
    CHECK(h.at(2).is_zero());
    CHECK(homology_mod_p(rp2, 2) == std::map<int, std::int64_t>{{0, 1}, {1, 1}, {2, 1}});
    CHECK(homology_mod_p(rp2, 3) == std::map<int, std::int64_t>{{0, 1}, {1, 0}, {2, 0}});
    CHECK(rp2 == moore_complex(1, 2));
}

TEST_CASE("Moore complexes") {
    for (int m = 1; m <= 4; ++m)
        for (std::int64_t q : {2, 3, 4, 5, 12}) {
            CAPTURE(m);
            CAPTURE(q);
            const ChainComplexZ c = moore_complex(m, q);
            const auto h = homology(c);
            CHECK(h.at(m) == HomologyGroup{0, {q}});
            for (const auto& [d, g] : h)
                if (d != 0 && d != m) CHECK(g.is_zero());
        }
    CHECK_THROWS_AS(moore_complex(0, 2), InputError);
    CHECK_THROWS_AS(moore_complex(1, 1), InputError);
}

TEST_CASE("extension by free cells: chain structure") {
    const EquivChainComplex e = jones_extension(1, 2, 3);
    const ChainComplexZ& c = e.complex();
    CHECK(c.rank(2) == 4); // l, s0, s1, s2
    CHECK(c.rank(3) == 3); // t0, t1, t2
    CHECK(e.is_fixed(2, 0));
    CHECK_FALSE(e.is_fixed(2, 1));
    CHECK(e.act(2, 1) == 2);
    CHECK(e.act(3, 2) == 0);
    // ∂t_0 = l - s0 - s1
    const IntegerMatrix& b3 = c.boundary(3);
    CHECK(b3(0, 0) == 1);
    CHECK(b3(1, 0) == -1);
    CHECK(b3(2, 0) == -1);
    CHECK(b3(3, 0) == 0);
    for (int d = c.lo() + 2; d <= c.hi(); ++d) CHECK(is_zero(product(c.boundary(d - 1), c.boundary(d))));
}

TEST_CASE("extensions are acyclic with the Moore complex as fixed part") {
    int verified = 0;
    for (int m = 1; m <= 3; ++m)
        for (std::int64_t q : {2, 3, 4, 5})
            for (std::int64_t p = 2; p <= 7; ++p) {
                if (std::gcd(p, q) != 1) {
                    CHECK_THROWS_AS(jones_extension(m, q, p), PreconditionError);
                    continue;
                }
                CAPTURE(m);
                CAPTURE(q);
                CAPTURE(p);
                const EquivChainComplex e = jones_extension(m, q, p);
                const ChainComplexZ& c = e.complex();
                for (int d = c.lo() + 2; d <= c.hi(); ++d) CHECK(is_zero(product(c.boundary(d - 1), c.boundary(d))));
                CHECK(euler(c) == 1);
                const bool oracle = acyclic_mod_small_primes(c, p, q);
                CHECK(verify_acyclic(e) == oracle);
                CHECK(fixed_part(e) == moore_complex(m, q));

                const JonesReport r = jones_verify(m, q, p);
                CHECK(r.acyclic == oracle);
                CHECK(r.fixed_part_is_moore);
                CHECK(r.fixed_homology_m == HomologyGroup{0, {q}});
                if (is_prime(q)) CHECK(r.fixed_mod_q_dimension_m == 1);
                if (r.verified()) ++verified;
                // the free cells see nothing mod q in positive degrees
                if (oracle) {
                    for (const auto& [d, dim] : homology_mod_p(augmented(c), is_prime(q) ? q : 2)) CHECK(dim == 0);
                }
            }
    CHECK(verified > 0);
}

TEST_CASE("q = 2 with odd p: both structural claims hold") {
    for (std::int64_t p : {3, 5, 7, 9, 15})
        for (int m : {1, 2}) {
            const JonesReport r = jones_verify(m, 2, p);
            CHECK(r.acyclic);
            CHECK(r.fixed_homology_m == HomologyGroup{0, {2}});
            CHECK(r.verified());
        }
    CHECK_THROWS_AS(jones_extension(1, 2, 2), PreconditionError);
    CHECK_THROWS_AS(jones_extension(1, 2, 1), PreconditionError);
}

TEST_CASE("acyclicity check on plain complexes") {
    const EquivChainComplex rp2(rp2_complex(), 3, {});
    CHECK_FALSE(verify_acyclic(rp2));
    const EquivChainComplex pt(ChainComplexZ(0, {IntegerMatrix(0, 1)}), 2, {});
    CHECK(verify_acyclic(pt));
    CHECK(fixed_part(rp2) == rp2_complex());
}

TEST_CASE("equivariant complex validation") {
    const ChainComplexZ two_points(0, {IntegerMatrix(0, 2)});
    CHECK_NOTHROW(EquivChainComplex(two_points, 2, {{0, {1, 0}}}));
    CHECK_THROWS_AS(EquivChainComplex(two_points, 3, {{0, {1, 0}}}), InputError); // orbit of size 2
    CHECK_THROWS_AS(EquivChainComplex(two_points, 2, {{0, {0, 0}}}), InputError);
    CHECK_THROWS_AS(EquivChainComplex(two_points, 2, {{0, {1}}}), InputError);
    // an edge from a to b with the swap does not commute with the boundary
    IntegerMatrix d1(2, 1);
    d1(0, 0) = -1;
    d1(1, 0) = 1;
    const ChainComplexZ edge(0, {IntegerMatrix(0, 2), d1});
    CHECK_THROWS_AS(EquivChainComplex(edge, 2, {{0, {1, 0}}, {1, {0}}}), InputError);
}
