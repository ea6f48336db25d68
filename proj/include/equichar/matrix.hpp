#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace equichar {

/// Dense row-major integer matrix.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    bool is_zero() const;

    /// Overflow-checked product.
    IntegerMatrix operator*(const IntegerMatrix& o) const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

struct SmithForm {
    /// Nonzero invariant factors d1 | d2 | ... | d_rank followed by zeros,
    /// min(rows, cols) entries in total.
    std::vector<std::int64_t> diagonal;
    std::size_t rank = 0;
};

/// Smith normal form by unimodular row and column operations, pivoting on
/// the entry of smallest magnitude. Runs in checked 64-bit arithmetic and
/// repeats in arbitrary precision if that overflows. Throws OverflowError
/// only when an invariant factor itself does not fit in 64 bits.
SmithForm smith_normal_form(IntegerMatrix m);

/// Rank of the matrix reduced modulo the prime p.
std::size_t rank_mod_p(const IntegerMatrix& m, std::int64_t p);

bool is_prime(std::int64_t n);

} // namespace equichar
