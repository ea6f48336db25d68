#include "equichar/jones.hpp"

#include <numeric>

#include "equichar/error.hpp"

namespace equichar {

EquivChainComplex::EquivChainComplex(ChainComplexZ complex, std::int64_t p,
                                     std::map<int, std::vector<std::size_t>> generator_action)
    : complex_(std::move(complex)), p_(p), action_(std::move(generator_action)) {
    if (p_ < 1) throw InputError("equivariant complex: group order must be positive");
    if (complex_.empty()) return;
    for (int d = complex_.lo(); d <= complex_.hi(); ++d) {
        auto& perm = action_[d];
        if (perm.empty() && complex_.rank(d) > 0) {
            perm.resize(complex_.rank(d));
            std::iota(perm.begin(), perm.end(), std::size_t{0});
        }
        if (perm.size() != complex_.rank(d)) throw InputError("equivariant complex: action does not cover degree " + std::to_string(d));
        std::vector<bool> hit(perm.size(), false);
        for (std::size_t x : perm) {
            if (x >= perm.size() || hit[x]) throw InputError("equivariant complex: action is not a permutation of cells");
            hit[x] = true;
        }
        for (std::size_t cell = 0; cell < perm.size(); ++cell) {
            std::int64_t len = 1;
            for (std::size_t y = perm[cell]; y != cell; y = perm[y]) ++len;
            if (len != 1 && len != p_)
                throw InputError("equivariant complex: orbit of size " + std::to_string(len) + " is neither fixed nor free");
        }
    }
    for (int d = complex_.lo() + 1; d <= complex_.hi(); ++d) {
        const IntegerMatrix& b = complex_.boundary(d);
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t i = 0; i < b.rows(); ++i)
                if (b(action_.at(d - 1)[i], action_.at(d)[j]) != b(i, j))
                    throw InputError("equivariant complex: boundary does not commute with the action in degree " +
                                     std::to_string(d));
    }
}

std::size_t EquivChainComplex::act(int degree, std::size_t cell) const { return action_.at(degree).at(cell); }

ChainComplexZ moore_complex(int m, std::int64_t q) {
    if (m < 1) throw InputError("moore_complex: m must be at least 1");
    if (q < 2) throw InputError("moore_complex: q must be at least 2");
    std::vector<IntegerMatrix> b;
    std::vector<std::vector<std::string>> labels;
    b.emplace_back(0, 1);
    labels.push_back({"pt"});
    for (int d = 1; d < m; ++d) {
        b.emplace_back(b.back().cols(), 0);
        labels.emplace_back();
    }
    b.emplace_back(b.back().cols(), 1); // c: zero boundary
    labels.push_back({"c"});
    b.push_back(IntegerMatrix{{q}});
    labels.push_back({"l"});
    return ChainComplexZ(0, std::move(b), std::move(labels));
}

ChainComplexZ rp2_complex() { return moore_complex(1, 2); }

EquivChainComplex jones_extension(int m, std::int64_t q, std::int64_t p) {
    if (p < 2) throw PreconditionError("jones_extension: the cyclic group order must exceed 1");
    if (std::gcd(p, q) != 1)
        throw PreconditionError("jones_extension: gcd(p, q) = " + std::to_string(std::gcd(p, q)) + ", must be 1");
    const ChainComplexZ base = moore_complex(m, q);
    const auto n = static_cast<std::size_t>(p);

    std::vector<IntegerMatrix> b;
    std::vector<std::vector<std::string>> labels;
    std::map<int, std::vector<std::size_t>> action;
    for (int d = 0; d < m; ++d) {
        b.push_back(base.boundary(d));
        labels.push_back(base.labels(d));
    }
    b.push_back(base.boundary(m));
    labels.push_back(base.labels(m));

    // degree m+1: l, s_0..s_{p-1}
    IntegerMatrix top(1, 1 + n);
    top(0, 0) = q;
    std::vector<std::string> top_labels{"l"};
    std::vector<std::size_t> top_action{0};
    for (std::size_t i = 0; i < n; ++i) {
        top(0, 1 + i) = 1;
        top_labels.push_back("s" + std::to_string(i));
        top_action.push_back(1 + (i + 1) % n);
    }
    b.push_back(std::move(top));
    labels.push_back(std::move(top_labels));
    action[m + 1] = std::move(top_action);

    // degree m+2: t_0..t_{p-1}
    IntegerMatrix kill(1 + n, n);
    std::vector<std::string> kill_labels;
    std::vector<std::size_t> kill_action;
    for (std::size_t i = 0; i < n; ++i) {
        kill(0, i) = 1;
        for (std::int64_t k = 0; k < q; ++k) kill(1 + (i + static_cast<std::size_t>(k)) % n, i) -= 1;
        kill_labels.push_back("t" + std::to_string(i));
        kill_action.push_back((i + 1) % n);
    }
    b.push_back(std::move(kill));
    labels.push_back(std::move(kill_labels));
    action[m + 2] = std::move(kill_action);

    return EquivChainComplex(ChainComplexZ(0, std::move(b), std::move(labels)), p, std::move(action));
}

std::map<int, HomologyGroup> reduced_homology(const ChainComplexZ& c) {
    if (c.empty()) return homology(ChainComplexZ(-1, {IntegerMatrix(0, 1)}));
    if (c.lo() != 0) throw InputError("reduced_homology: complex must start in degree 0");
    std::vector<IntegerMatrix> b;
    b.emplace_back(0, 1);
    IntegerMatrix aug(1, c.rank(0));
    for (std::size_t j = 0; j < c.rank(0); ++j) aug(0, j) = 1;
    b.push_back(std::move(aug));
    for (int d = 1; d <= c.hi(); ++d) b.push_back(c.boundary(d));
    return homology(ChainComplexZ(-1, std::move(b)));
}

bool verify_acyclic(const EquivChainComplex& c) { return is_acyclic(reduced_homology(c.complex())); }

ChainComplexZ fixed_part(const EquivChainComplex& c) {
    const ChainComplexZ& x = c.complex();
    if (x.empty()) return x;
    std::map<int, std::vector<std::size_t>> fixed;
    for (int d = x.lo(); d <= x.hi(); ++d)
        for (std::size_t i = 0; i < x.rank(d); ++i)
            if (c.is_fixed(d, i)) fixed[d].push_back(i);

    int top = x.hi();
    while (top > x.lo() && fixed[top].empty()) --top; // drop empty top degrees

    std::vector<IntegerMatrix> b;
    std::vector<std::vector<std::string>> labels;
    for (int d = x.lo(); d <= top; ++d) {
        const auto& cols = fixed[d];
        const auto& rows = fixed[d - 1];
        const IntegerMatrix& full = x.boundary(d);
        IntegerMatrix sub(rows.size(), cols.size());
        std::vector<std::string> l;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::size_t r = 0;
            for (std::size_t i = 0; i < full.rows(); ++i) {
                const bool kept = r < rows.size() && rows[r] == i;
                if (kept) sub(r++, j) = full(i, cols[j]);
                else if (full(i, cols[j]) != 0)
                    throw InternalError("fixed_part: boundary of a fixed cell meets a free cell");
            }
            if (!x.labels(d).empty()) l.push_back(x.labels(d)[cols[j]]);
        }
        b.push_back(std::move(sub));
        labels.push_back(std::move(l));
    }
    return ChainComplexZ(x.lo(), std::move(b), std::move(labels));
}

bool JonesReport::verified() const {
    HomologyGroup expected;
    expected.torsion = {q};
    return acyclic && fixed_part_is_moore && fixed_homology_m == expected &&
           (!is_prime(q) || fixed_mod_q_dimension_m > 0);
}

JonesReport jones_verify(int m, std::int64_t q, std::int64_t p) {
    JonesReport r;
    r.m = m;
    r.q = q;
    r.p = p;
    const EquivChainComplex ext = jones_extension(m, q, p);
    r.total_reduced_homology = reduced_homology(ext.complex());
    r.acyclic = is_acyclic(r.total_reduced_homology);
    const ChainComplexZ fixed = fixed_part(ext);
    r.fixed_part_is_moore = fixed == moore_complex(m, q);
    r.fixed_homology_m = homology(fixed).at(m);
    if (is_prime(q)) r.fixed_mod_q_dimension_m = homology_mod_p(fixed, q).at(m);
    return r;
}

} // namespace equichar
