#ifndef DIFFMOD_SCALAR_HPP
#define DIFFMOD_SCALAR_HPP

#include <string>
#include <utility>

#include "diffmod/rational.hpp"

namespace diffmod {

/// Element a + b*sqrt(21) of the real quadratic field Q(sqrt 21).
///
/// The representation is unique because sqrt(21) is irrational, so equality
/// is componentwise. The field contains every weight the operator modules
/// need, including -1/2 +- sqrt(21)/6.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : a_(n) {}
    Scalar(Rational a) : a_(std::move(a)) {}
    Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Scalar sqrt21() { return Scalar(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }

    Scalar operator-() const { return Scalar(-a_, -b_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    /// Multiplicative inverse. Signals a domain error on zero.
    Scalar inverse() const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Lexicographic order on (a, b); used for ordered containers only.
    friend bool operator<(const Scalar& x, const Scalar& y) {
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    /// Compact canonical text: "p/q", "r/s*r21", "p/q+r/s*r21", "p/q-r/s*r21".
    std::string str() const;

private:
    Rational a_, b_;
};

} // namespace diffmod

#endif
