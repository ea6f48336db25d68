#include <doctest.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "equichar/chain_complex.hpp"
#include "equichar/error.hpp"
#include "equichar/jones.hpp"
#include "equichar/matrix.hpp"
#include "equichar/rational.hpp"
#include "equichar/simplicial.hpp"
#include "support.hpp"

using namespace equichar;

namespace {

// Fraction-free Gaussian elimination (Bareiss) in 128-bit arithmetic.
// Returns the rank and, for square matrices, |det|.
struct BareissResult {
    std::size_t rank = 0;
    __int128 abs_det = 0;
};

BareissResult bareiss(const IntegerMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<__int128>> a(rows, std::vector<__int128>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
    __int128 prev = 1;
    std::size_t r = 0;
    int sign = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r) {
            std::swap(a[piv], a[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    BareissResult out;
    out.rank = r;
    if (rows == cols && r == rows && rows > 0) out.abs_det = prev < 0 ? -prev : prev;
    return out;
}

IntegerMatrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, double density) {
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_real_distribution<double> coin(0, 1);
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (coin(testing::rng()) < density) m(i, j) = val(testing::rng());
    return m;
}

HomologyGroup group(std::int64_t betti, std::vector<std::int64_t> torsion = {}) {
    HomologyGroup g;
    g.betti = betti;
    g.torsion = std::move(torsion);
    return g;
}

// Checks dim_Fp H_d = b_d + #{t in tors H_d : p | t} + #{t in tors H_{d-1} : p | t}.
void check_universal_coefficients(const ChainComplexZ& c) {
    const auto h = homology(c);
    for (std::int64_t p : {2, 3, 5}) {
        const auto hp = homology_mod_p(c, p);
        for (const auto& [d, dim] : hp) {
            std::int64_t expected = h.at(d).betti;
            for (auto t : h.at(d).torsion) expected += t % p == 0;
            if (auto it = h.find(d - 1); it != h.end())
                for (auto t : it->second.torsion) expected += t % p == 0;
            CHECK_MESSAGE(dim == expected, "degree " << d << ", p = " << p);
        }
    }
}

// Complex with the basis of one degree permuted.
ChainComplexZ permute_degree(const ChainComplexZ& c, int d, const std::vector<std::size_t>& perm) {
    std::vector<IntegerMatrix> b;
    for (int k = c.lo(); k <= c.hi(); ++k) {
        IntegerMatrix m = c.boundary(k);
        if (k == d) {
            IntegerMatrix n(m.rows(), m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) n(i, perm[j]) = m(i, j);
            m = n;
        } else if (k == d + 1) {
            IntegerMatrix n(m.rows(), m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) n(perm[i], j) = m(i, j);
            m = n;
        }
        b.push_back(std::move(m));
    }
    return ChainComplexZ(c.lo(), std::move(b));
}

} // namespace

TEST_CASE("rationals are reduced with positive denominators") {
    const Rational a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(2, 3) * Rational(3, 4)) == Rational(1, 2));
    CHECK((Rational(2, 3) / Rational(4, 3)) == Rational(1, 2));
    CHECK(Rational(-1, 8) < Rational(1, 9));
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK_THROWS_AS(Rational(1, 0), InputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InputError);
}

TEST_CASE("rational arithmetic aborts on overflow instead of wrapping") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Rational(big) + Rational(1), OverflowError);
    CHECK_THROWS_AS(Rational(big) * Rational(2), OverflowError);
    CHECK_THROWS_AS(Rational(1, big) + Rational(1, big - 1), OverflowError);
    const IntegerMatrix m{{big, 1}};
    const IntegerMatrix n{{2}, {0}};
    CHECK_THROWS_AS(m * n, OverflowError);
}

TEST_CASE("smith normal form on the documented examples") {
    SmithForm s = smith_normal_form(IntegerMatrix{{2}});
    CHECK(s.diagonal == std::vector<std::int64_t>{2});
    CHECK(s.rank == 1);

    s = smith_normal_form(IntegerMatrix(0, 0));
    CHECK(s.diagonal.empty());
    CHECK(s.rank == 0);

    s = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
    CHECK(s.diagonal == std::vector<std::int64_t>{1, 6});
    CHECK(s.rank == 2);

    s = smith_normal_form(IntegerMatrix(3, 2));
    CHECK(s.diagonal == std::vector<std::int64_t>{0, 0});
    CHECK(s.rank == 0);

    s = smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(s.diagonal == std::vector<std::int64_t>{2, 6, 12});
}

TEST_CASE("smith normal form: divisibility chain, rank and determinant against Bareiss") {
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(0, 7);
        const IntegerMatrix m = random_matrix(dim(testing::rng()), dim(testing::rng()), -9, 9, 0.6);
        const SmithForm s = smith_normal_form(m);
        const BareissResult oracle = bareiss(m);
        REQUIRE(s.diagonal.size() == std::min(m.rows(), m.cols()));
        CHECK(s.rank == oracle.rank);
        for (std::size_t i = 0; i < s.diagonal.size(); ++i) {
            if (i < s.rank) CHECK(s.diagonal[i] > 0);
            else CHECK(s.diagonal[i] == 0);
            if (i + 1 < s.rank) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        }
        if (m.rows() == m.cols() && oracle.rank == m.rows() && m.rows() > 0) {
            __int128 prod = 1;
            for (auto d : s.diagonal) prod *= d;
            CHECK(prod == oracle.abs_det);
        }
    }
}

TEST_CASE("smith normal form survives 64-bit entry growth on larger dense matrices") {
    for (int trial = 0; trial < 20; ++trial) {
        const IntegerMatrix m = random_matrix(8, 8, -60, 60, 1.0);
        const SmithForm s = smith_normal_form(m);
        const BareissResult oracle = bareiss(m);
        CHECK(s.rank == oracle.rank);
        if (oracle.rank == 8) {
            __int128 prod = 1;
            for (auto d : s.diagonal) prod *= d;
            CHECK(prod == oracle.abs_det);
        }
    }
}

TEST_CASE("invariant factors beyond 64 bits are reported, not truncated") {
    // Coprime diagonal entries: the form is diag(1, 2^40 (2^40 + 1)).
    const std::int64_t big = std::int64_t{1} << 40;
    IntegerMatrix m{{big, 0}, {0, big + 1}};
    CHECK_THROWS_AS(smith_normal_form(m), OverflowError);
}

TEST_CASE("rank mod p") {
    CHECK(rank_mod_p(IntegerMatrix{{2}}, 2) == 0);
    CHECK(rank_mod_p(IntegerMatrix{{2}}, 3) == 1);
    CHECK(rank_mod_p(IntegerMatrix{{1, 1}, {1, -1}}, 2) == 1);
    CHECK_THROWS_AS(rank_mod_p(IntegerMatrix{{1}}, 4), InputError);
    CHECK_THROWS_AS(rank_mod_p(IntegerMatrix{{1}}, 1), InputError);
}

TEST_CASE("homology of the RP2 cell complex") {
    const ChainComplexZ rp2 = rp2_complex();
    const auto h = homology(rp2);
    CHECK(h.at(0) == group(1));
    CHECK(h.at(1) == group(0, {2}));
    CHECK(h.at(2) == group(0));
    CHECK(h.at(1).str() == "Z/2");

    const auto h2 = homology_mod_p(rp2, 2);
    CHECK(h2.at(0) == 1);
    CHECK(h2.at(1) == 1);
    CHECK(h2.at(2) == 1);
    const auto h3 = homology_mod_p(rp2, 3);
    CHECK(h3.at(0) == 1);
    CHECK(h3.at(1) == 0);
    CHECK(h3.at(2) == 0);
    CHECK_THROWS_AS(homology_mod_p(rp2, 6), InputError);
}

TEST_CASE("zero complexes have trivial homology") {
    const ChainComplexZ z = ChainComplexZ::zero(0, {0, 0, 0});
    for (const auto& [d, g] : homology(z)) CHECK(g.is_zero());
    for (const auto& [d, n] : homology_mod_p(z, 5)) CHECK(n == 0);
    const ChainComplexZ free = ChainComplexZ::zero(0, {2, 0, 1});
    CHECK(homology(free).at(0) == group(2));
    CHECK(homology(free).at(2) == group(1));
}

TEST_CASE("boundary of the 3-simplex from hand-built boundary matrices") {
    // Faces of {0,1,2,3} listed by dimension, boundary signs (-1)^k.
    std::vector<std::vector<std::vector<int>>> faces(3);
    for (int a = 0; a < 4; ++a) faces[0].push_back({a});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) faces[1].push_back({a, b});
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            for (int c = b + 1; c < 4; ++c) faces[2].push_back({a, b, c});
    std::vector<IntegerMatrix> b;
    b.emplace_back(0, 1);
    IntegerMatrix aug(1, 4);
    for (int j = 0; j < 4; ++j) aug(0, j) = 1;
    b.push_back(aug);
    for (int d = 1; d <= 2; ++d) {
        IntegerMatrix m(faces[d - 1].size(), faces[d].size());
        for (std::size_t j = 0; j < faces[d].size(); ++j)
            for (std::size_t k = 0; k < faces[d][j].size(); ++k) {
                auto face = faces[d][j];
                face.erase(face.begin() + static_cast<long>(k));
                const auto row = std::find(faces[d - 1].begin(), faces[d - 1].end(), face) - faces[d - 1].begin();
                m(static_cast<std::size_t>(row), j) = k % 2 ? -1 : 1;
            }
        b.push_back(m);
    }
    const ChainComplexZ c(-1, b);
    const auto h = homology(c);
    CHECK(h.at(2) == group(1));
    for (int d = -1; d <= 1; ++d) CHECK(h.at(d).is_zero());
    CHECK(h == reduced_homology(testing::complex_named("boundary_tetrahedron")));
}

TEST_CASE("chain complex construction validates shapes and dd = 0") {
    CHECK_THROWS_AS(ChainComplexZ(0, {IntegerMatrix(0, 1), IntegerMatrix(2, 1)}), InputError);
    CHECK_THROWS_AS(ChainComplexZ(0, {IntegerMatrix(0, 1), IntegerMatrix{{1}}, IntegerMatrix{{1}}}), InputError);
    CHECK_NOTHROW(ChainComplexZ(0, {IntegerMatrix(0, 1), IntegerMatrix{{0}}, IntegerMatrix{{5}}}));
}

TEST_CASE("universal coefficients hold across Moore complexes and random simplicial complexes") {
    for (int m = 1; m <= 3; ++m)
        for (std::int64_t q = 2; q <= 12; ++q) check_universal_coefficients(moore_complex(m, q));
    std::bernoulli_distribution coin(0.35);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::string> names{"a", "b", "c", "d", "e", "f"};
        std::vector<std::vector<std::string>> facets;
        for (int x = 0; x < 6; ++x)
            for (int y = x + 1; y < 6; ++y)
                for (int z = y + 1; z < 6; ++z)
                    if (coin(testing::rng())) facets.push_back({names[x], names[y], names[z]});
        const auto k = SimplicialComplex::from_maximal_simplices(names, facets);
        check_universal_coefficients(augmented_chain_complex(k));
    }
}

TEST_CASE("homology ignores the order of basis cells within a degree") {
    const ChainComplexZ c = augmented_chain_complex(testing::complex_named("octahedron"));
    const auto reference = homology(c);
    for (int d = c.lo(); d <= c.hi(); ++d) {
        std::vector<std::size_t> perm(c.rank(d));
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), testing::rng());
        CHECK(homology(permute_degree(c, d, perm)) == reference);
    }
    const ChainComplexZ m = moore_complex(2, 6);
    CHECK(homology(m).at(2) == group(0, {6}));
}

TEST_CASE("reduced cohomology from reduced homology") {
    std::map<int, HomologyGroup> h{{0, group(0)}, {1, group(0, {2})}, {2, group(0)}};
    const auto c = cohomology_from_homology(h);
    CHECK(c.at(1).is_zero());
    CHECK(c.at(2) == group(0, {2}));
    std::map<int, HomologyGroup> empty{{-1, group(1)}};
    CHECK(cohomology_from_homology(empty).at(-1) == group(1));
}
