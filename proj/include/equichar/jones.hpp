#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equichar/chain_complex.hpp"

namespace equichar {

/// Chain complex with a cellular action of the cyclic group C_p, given by
/// the permutation of basis cells induced by a generator.
class EquivChainComplex {
public:
    EquivChainComplex() = default;
    /// Validates that the generator permutes cells degreewise, that the
    /// boundary commutes with it and that every orbit has size 1 or p.
    EquivChainComplex(ChainComplexZ complex, std::int64_t p, std::map<int, std::vector<std::size_t>> generator_action);

    const ChainComplexZ& complex() const { return complex_; }
    std::int64_t order() const { return p_; }
    /// Image of cell i of the given degree under the generator.
    std::size_t act(int degree, std::size_t cell) const;
    bool is_fixed(int degree, std::size_t cell) const { return act(degree, cell) == cell; }

private:
    ChainComplexZ complex_;
    std::int64_t p_ = 1;
    std::map<int, std::vector<std::size_t>> action_;
};

/// One cell per dimension 0, 1, 2 with ∂l = 2c and ∂c = 0.
ChainComplexZ rp2_complex();

/// Moore complex M(Z/q, m): cells pt (0), c (m), l (m+1) with ∂l = q·c.
ChainComplexZ moore_complex(int m, std::int64_t q);

/// Adds a free orbit s_0..s_{p-1} in degree m+1 with ∂s_i = c and a free
/// orbit t_0..t_{p-1} in degree m+2 with ∂t_i = l - (s_i + ... + s_{i+q-1})
/// (indices mod p) to the Moore complex, with C_p acting trivially on it.
/// Throws PreconditionError unless gcd(p, q) = 1 and p > 1.
EquivChainComplex jones_extension(int m, std::int64_t q, std::int64_t p);

/// Reduced homology (augmented at the 0-cells) vanishes.
bool verify_acyclic(const EquivChainComplex& c);

/// Homology of the complex augmented at degree 0, keyed by degree.
std::map<int, HomologyGroup> reduced_homology(const ChainComplexZ& c);

/// Subcomplex spanned by the fixed cells, without empty top degrees.
/// Throws InternalError if the boundary of a fixed cell leaves the fixed cells.
ChainComplexZ fixed_part(const EquivChainComplex& c);

struct JonesReport {
    int m = 0;
    std::int64_t q = 0;
    std::int64_t p = 0;
    bool acyclic = false;
    bool fixed_part_is_moore = false;
    HomologyGroup fixed_homology_m;            // H_m of the fixed part
    std::int64_t fixed_mod_q_dimension_m = 0;  // dim H_m(fixed; F_q) when q is prime
    std::map<int, HomologyGroup> total_reduced_homology; // homology witness
    bool verified() const;
};

/// Builds the extension and checks acyclicity and the fixed part.
JonesReport jones_verify(int m, std::int64_t q, std::int64_t p);

} // namespace equichar
