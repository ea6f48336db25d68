#include "equichar/chain_complex.hpp"

#include <sstream>
#include <utility>

#include "equichar/error.hpp"

namespace equichar {

std::string HomologyGroup::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << "^" << betti;
        first = false;
    }
    for (std::int64_t t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    return os.str();
}

ChainComplexZ::ChainComplexZ(int lo, std::vector<IntegerMatrix> boundaries, std::vector<std::vector<std::string>> labels)
    : lo_(lo), boundaries_(std::move(boundaries)), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != boundaries_.size())
        throw InputError("chain complex: label list does not cover every degree");
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        const auto& b = boundaries_[k];
        if (k == 0 && b.rows() != 0)
            throw InputError("chain complex: lowest boundary must map to the zero module");
        if (k > 0 && b.rows() != boundaries_[k - 1].cols())
            throw InputError("chain complex: boundary shape mismatch at degree " + std::to_string(lo_ + static_cast<int>(k)));
        if (!labels_.empty() && labels_[k].size() != b.cols())
            throw InputError("chain complex: label count mismatch at degree " + std::to_string(lo_ + static_cast<int>(k)));
    }
    for (std::size_t k = 1; k < boundaries_.size(); ++k) {
        if (boundaries_[k - 1].empty() || boundaries_[k].empty()) continue;
        if (!(boundaries_[k - 1] * boundaries_[k]).is_zero())
            throw InputError("chain complex: boundary of boundary is nonzero at degree " +
                             std::to_string(lo_ + static_cast<int>(k)));
    }
}

ChainComplexZ ChainComplexZ::zero(int lo, const std::vector<std::size_t>& ranks) {
    std::vector<IntegerMatrix> b;
    std::size_t prev = 0;
    for (std::size_t r : ranks) {
        b.emplace_back(prev, r);
        prev = r;
    }
    return ChainComplexZ(lo, std::move(b));
}

std::size_t ChainComplexZ::rank(int degree) const {
    if (degree < lo() || degree > hi()) return 0;
    return boundaries_[static_cast<std::size_t>(degree - lo_)].cols();
}

const IntegerMatrix& ChainComplexZ::boundary(int degree) const {
    if (degree < lo() || degree > hi()) throw InputError("chain complex: degree out of range");
    return boundaries_[static_cast<std::size_t>(degree - lo_)];
}

const std::vector<std::string>& ChainComplexZ::labels(int degree) const {
    static const std::vector<std::string> none;
    if (labels_.empty() || degree < lo() || degree > hi()) return none;
    return labels_[static_cast<std::size_t>(degree - lo_)];
}

std::map<int, HomologyGroup> homology(const ChainComplexZ& c) {
    std::map<int, HomologyGroup> out;
    if (c.empty()) return out;
    // rank and invariant factors of every boundary map
    std::map<int, SmithForm> snf;
    for (int d = c.lo(); d <= c.hi(); ++d) snf.emplace(d, smith_normal_form(c.boundary(d)));
    for (int d = c.lo(); d <= c.hi(); ++d) {
        HomologyGroup h;
        const auto cycles = static_cast<std::int64_t>(c.rank(d) - snf.at(d).rank);
        std::int64_t boundaries = 0;
        if (d < c.hi()) {
            const SmithForm& next = snf.at(d + 1);
            boundaries = static_cast<std::int64_t>(next.rank);
            for (std::size_t i = 0; i < next.rank; ++i)
                if (next.diagonal[i] > 1) h.torsion.push_back(next.diagonal[i]);
        }
        h.betti = cycles - boundaries;
        if (h.betti < 0) throw InternalError("negative Betti number");
        out.emplace(d, std::move(h));
    }
    return out;
}

std::map<int, std::int64_t> homology_mod_p(const ChainComplexZ& c, std::int64_t p) {
    if (!is_prime(p)) throw InputError("homology_mod_p: " + std::to_string(p) + " is not prime");
    std::map<int, std::int64_t> out;
    if (c.empty()) return out;
    std::map<int, std::size_t> rk;
    for (int d = c.lo(); d <= c.hi(); ++d) rk[d] = rank_mod_p(c.boundary(d), p);
    for (int d = c.lo(); d <= c.hi(); ++d) {
        const std::size_t next = d < c.hi() ? rk[d + 1] : 0;
        out[d] = static_cast<std::int64_t>(c.rank(d) - rk[d] - next);
    }
    return out;
}

bool is_acyclic(const std::map<int, HomologyGroup>& h) {
    for (const auto& [d, g] : h)
        if (!g.is_zero()) return false;
    return true;
}

std::map<int, HomologyGroup> cohomology_from_homology(const std::map<int, HomologyGroup>& h) {
    std::map<int, HomologyGroup> out;
    for (const auto& [d, g] : h) {
        HomologyGroup co;
        co.betti = g.betti;
        if (auto it = h.find(d - 1); it != h.end()) co.torsion = it->second.torsion;
        out.emplace(d, std::move(co));
    }
    // torsion of the top homology group shifts one degree up
    if (!h.empty()) {
        const auto& [top, g] = *h.rbegin();
        if (!g.torsion.empty()) out[top + 1].torsion = g.torsion;
    }
    return out;
}

} // namespace equichar
