#include "diffmod/scalar.hpp"

namespace diffmod {

Scalar& Scalar::operator+=(const Scalar& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (b_.is_zero() && o.b_.is_zero()) {
        a_ *= o.a_;
        return *this;
    }
    // (a1 + b1 r)(a2 + b2 r) = a1 a2 + 21 b1 b2 + (a1 b2 + b1 a2) r
    Rational a = a_ * o.a_ + Rational(21) * (b_ * o.b_);
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw domain_error("division by zero");
    if (b_.is_zero())
        return Scalar(Rational(1) / a_);
    // 1/(a + b r) = (a - b r) / (a^2 - 21 b^2); the norm is nonzero because
    // sqrt(21) is irrational.
    Rational norm = a_ * a_ - Rational(21) * (b_ * b_);
    return Scalar(a_ / norm, -b_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.b_.is_zero()) {
        if (o.a_.is_zero())
            throw domain_error("division by zero");
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    return *this *= o.inverse();
}

namespace {

// |b|*r21 with unit coefficient elided
std::string surd_str(const Rational& b) {
    if (b.is_one())
        return "r21";
    return b.str() + "*r21";
}

} // namespace

std::string Scalar::str() const {
    if (is_zero())
        return "0";
    if (b_.is_zero())
        return a_.str();
    if (a_.is_zero()) {
        if (b_.sign() < 0)
            return "-" + surd_str(-b_);
        return surd_str(b_);
    }
    std::string out = a_.str();
    if (b_.sign() < 0)
        out += "-" + surd_str(-b_);
    else
        out += "+" + surd_str(b_);
    return out;
}

} // namespace diffmod
