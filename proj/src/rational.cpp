#include "equichar/rational.hpp"

#include <numeric>
#include <ostream>

#include "equichar/checked.hpp"
#include "equichar/error.hpp"

namespace equichar {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
        num = checked::neg(num);
        den = checked::neg(den);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked::neg(num_);
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    // Reduce against gcd of denominators first to keep intermediates small.
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t lhs = checked::mul(num_, o.den_ / g);
    const std::int64_t rhs = checked::mul(o.num_, den_ / g);
    *this = Rational(checked::add(lhs, rhs), checked::mul(den_ / g, o.den_));
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    const std::int64_t a = g1 == 0 ? num_ : num_ / g1;
    const std::int64_t d = g1 == 0 ? o.den_ : o.den_ / g1;
    const std::int64_t c = g2 == 0 ? o.num_ : o.num_ / g2;
    const std::int64_t b = g2 == 0 ? den_ : den_ / g2;
    *this = Rational(checked::mul(a, c), checked::mul(b, d));
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw InputError("division by zero rational");
    return *this *= Rational(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace equichar
