#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equichar/matrix.hpp"

namespace equichar {

/// Finitely generated abelian group Z^betti + sum of Z/t_i.
struct HomologyGroup {
    std::int64_t betti = 0;
    /// Torsion coefficients, each >= 2 and dividing the next.
    std::vector<std::int64_t> torsion;

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    bool is_free() const { return torsion.empty(); }

    /// "0", "Z", "Z^2 + Z/2", ...
    std::string str() const;

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Free chain complex over Z with explicit bases.
///
/// Degrees run over the contiguous range [lo, hi]. boundary(d) maps degree d
/// to degree d-1 and has shape rank(d-1) x rank(d), where rank(lo-1) = 0.
/// An augmented complex simply starts at lo = -1.
class ChainComplexZ {
public:
    ChainComplexZ() = default;

    /// Validates shapes and that consecutive boundaries compose to zero.
    ChainComplexZ(int lo, std::vector<IntegerMatrix> boundaries, std::vector<std::vector<std::string>> labels = {});

    /// Zero complex on the given ranks.
    static ChainComplexZ zero(int lo, const std::vector<std::size_t>& ranks);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(boundaries_.size()) - 1; }
    bool empty() const { return boundaries_.empty(); }

    std::size_t rank(int degree) const;
    const IntegerMatrix& boundary(int degree) const;
    const std::vector<std::string>& labels(int degree) const;

    friend bool operator==(const ChainComplexZ& a, const ChainComplexZ& b) {
        return a.lo_ == b.lo_ && a.boundaries_ == b.boundaries_;
    }

private:
    int lo_ = 0;
    std::vector<IntegerMatrix> boundaries_;
    std::vector<std::vector<std::string>> labels_;
};

/// Integral homology in every degree of the complex.
std::map<int, HomologyGroup> homology(const ChainComplexZ& c);

/// dim over F_p of homology in every degree. Throws InputError if p is not prime.
std::map<int, std::int64_t> homology_mod_p(const ChainComplexZ& c, std::int64_t p);

/// True iff every group in the map is zero.
bool is_acyclic(const std::map<int, HomologyGroup>& h);

/// Reduced cohomology from reduced homology by universal coefficients:
/// H^j = Z^{b_j} + tors(H_{j-1}).
std::map<int, HomologyGroup> cohomology_from_homology(const std::map<int, HomologyGroup>& h);

} // namespace equichar
