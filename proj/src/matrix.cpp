#include "equichar/matrix.hpp"

#include <algorithm>
#include <utility>

#include <gmpxx.h>

#include "equichar/checked.hpp"
#include "equichar/error.hpp"

namespace equichar {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& o) const {
    if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
    IntegerMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                out(i, j) = checked::add(out(i, j), checked::mul(a, o(k, j)));
        }
    return out;
}

namespace {

// Arithmetic for the reducer: checked 64-bit, or GMP when that overflows.
struct CheckedOps {
    using Int = std::int64_t;
    static Int from(std::int64_t v) { return v; }
    static std::int64_t to_int64(Int v) { return v; }
    static Int abs(Int v) { return checked::abs(v); }
    static Int add(Int a, Int b) { return checked::add(a, b); }
    static Int mul(Int a, Int b) { return checked::mul(a, b); }
    static Int neg(Int a) { return checked::neg(a); }
    static Int quot(Int a, Int b) { return a / b; }
    static bool divides(Int d, Int a) { return a % d == 0; }
};

struct BigOps {
    using Int = mpz_class;
    static Int from(std::int64_t v) { return Int(static_cast<long>(v)); }
    static std::int64_t to_int64(const Int& v) {
        if (!v.fits_slong_p()) throw OverflowError("invariant factor exceeds 64 bits");
        return v.get_si();
    }
    static Int abs(const Int& v) { return ::abs(v); }
    static Int add(const Int& a, const Int& b) { return a + b; }
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int neg(const Int& a) { return -a; }
    static Int quot(const Int& a, const Int& b) { return a / b; } // truncates like int64
    static bool divides(const Int& d, const Int& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }
};

// In-place elimination on a working copy; the pivot is the smallest
// nonzero magnitude in the trailing block.
template <class Ops>
class SmithReducer {
    using Int = typename Ops::Int;

public:
    explicit SmithReducer(const IntegerMatrix& m) : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) at(i, j) = Ops::from(m(i, j));
    }

    SmithForm run() {
        const std::size_t n = std::min(rows_, cols_);
        SmithForm out;
        out.diagonal.assign(n, 0);
        std::size_t t = 0;
        for (; t < n; ++t) {
            if (!move_smallest_to(t)) break;
            reduce_pivot(t);
            out.diagonal[t] = Ops::to_int64(Ops::abs(at(t, t)));
        }
        out.rank = t;
        return out;
    }

private:
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    bool move_smallest_to(std::size_t t) {
        std::size_t bi = 0, bj = 0;
        Int best = Ops::from(0);
        for (std::size_t i = t; i < rows_; ++i)
            for (std::size_t j = t; j < cols_; ++j) {
                if (at(i, j) == 0) continue;
                Int v = Ops::abs(at(i, j));
                if (best == 0 || v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == 0) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    // Unimodular 2x2 steps: the pivot becomes gcd(pivot, entry) and the entry 0.
    void reduce_pivot(std::size_t t) {
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows_; ++i) {
                if (at(i, t) == 0) continue;
                if (Ops::divides(at(t, t), at(i, t))) {
                    add_row(i, t, Ops::neg(Ops::quot(at(i, t), at(t, t))));
                } else {
                    const Bezout b = bezout(at(t, t), at(i, t));
                    combine_rows(t, i, b);
                }
            }
            for (std::size_t j = t + 1; j < cols_; ++j) {
                if (at(t, j) == 0) continue;
                if (Ops::divides(at(t, t), at(t, j))) {
                    add_col(j, t, Ops::neg(Ops::quot(at(t, j), at(t, t))));
                } else {
                    const Bezout b = bezout(at(t, t), at(t, j));
                    combine_cols(t, j, b);
                    clean = false; // column t may have refilled
                }
            }
            if (!clean) continue;
            // Row and column cleared; enforce divisibility of the trailing block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows_ && divisible; ++i)
                for (std::size_t j = t + 1; j < cols_; ++j)
                    if (!Ops::divides(at(t, t), at(i, j))) {
                        add_row(t, i, Ops::from(1));
                        divisible = false;
                        break;
                    }
            if (divisible) return;
        }
    }

    // x*a + y*b = g, with a/g and b/g for the second row of the transform.
    struct Bezout {
        Int x, y, ag, bg;
    };

    static Bezout bezout(const Int& a, const Int& b) {
        Int r0 = a, r1 = b, x0 = Ops::from(1), x1 = Ops::from(0), y0 = Ops::from(0), y1 = Ops::from(1);
        while (r1 != 0) {
            const Int q = Ops::quot(r0, r1);
            Int r2 = Ops::add(r0, Ops::neg(Ops::mul(q, r1)));
            Int x2 = Ops::add(x0, Ops::neg(Ops::mul(q, x1)));
            Int y2 = Ops::add(y0, Ops::neg(Ops::mul(q, y1)));
            r0 = std::move(r1);
            r1 = std::move(r2);
            x0 = std::move(x1);
            x1 = std::move(x2);
            y0 = std::move(y1);
            y1 = std::move(y2);
        }
        if (r0 < 0) {
            r0 = Ops::neg(r0);
            x0 = Ops::neg(x0);
            y0 = Ops::neg(y0);
        }
        return Bezout{x0, y0, Ops::quot(a, r0), Ops::quot(b, r0)};
    }

    // row[t] <- x*row[t] + y*row[i];  row[i] <- -(b/g)*row[t] + (a/g)*row[i]
    void combine_rows(std::size_t t, std::size_t i, const Bezout& b) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Int u = at(t, j), v = at(i, j);
            at(t, j) = Ops::add(Ops::mul(b.x, u), Ops::mul(b.y, v));
            at(i, j) = Ops::add(Ops::neg(Ops::mul(b.bg, u)), Ops::mul(b.ag, v));
        }
    }
    void combine_cols(std::size_t t, std::size_t j, const Bezout& b) {
        for (std::size_t i = 0; i < rows_; ++i) {
            const Int u = at(i, t), v = at(i, j);
            at(i, t) = Ops::add(Ops::mul(b.x, u), Ops::mul(b.y, v));
            at(i, j) = Ops::add(Ops::neg(Ops::mul(b.bg, u)), Ops::mul(b.ag, v));
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(src, j) != 0) at(dst, j) = Ops::add(at(dst, j), Ops::mul(k, at(src, j)));
    }
    void add_col(std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t i = 0; i < rows_; ++i)
            if (at(i, src) != 0) at(i, dst) = Ops::add(at(i, dst), Ops::mul(k, at(i, src)));
    }

    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    // Fermat; p is prime and small.
    std::int64_t result = 1, base = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) result = static_cast<std::int64_t>(static_cast<__int128>(result) * base % p);
        base = static_cast<std::int64_t>(static_cast<__int128>(base) * base % p);
        e >>= 1;
    }
    return result;
}

} // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
    try {
        return SmithReducer<CheckedOps>(m).run();
    } catch (const OverflowError&) {
        return SmithReducer<BigOps>(m).run();
    }
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::int64_t p) {
    if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = ((m(i, j) % p) + p) % p;

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + c] == 0) ++piv;
        if (piv == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
        const std::int64_t inv = mod_inverse(a[rank * cols + c], p);
        for (std::size_t j = c; j < cols; ++j)
            a[rank * cols + j] = static_cast<std::int64_t>(static_cast<__int128>(a[rank * cols + j]) * inv % p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank) continue;
            const std::int64_t f = a[i * cols + c];
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const auto v = static_cast<__int128>(a[i * cols + j]) - static_cast<__int128>(f) * a[rank * cols + j];
                a[i * cols + j] = static_cast<std::int64_t>(((v % p) + p) % p);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace equichar
