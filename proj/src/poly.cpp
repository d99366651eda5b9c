#include "diffmod/poly.hpp"

namespace diffmod {

namespace {
const Scalar kZero{};
} // namespace

Poly Poly::monomial(int power, Scalar coeff) {
    Poly p;
    if (coeff.is_zero())
        return p;
    p.c_.assign(static_cast<std::size_t>(power) + 1, Scalar());
    p.c_.back() = std::move(coeff);
    return p;
}

const Scalar& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return kZero;
    return c_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Poly Poly::operator-() const {
    Poly out;
    out.c_.reserve(c_.size());
    for (const Scalar& s : c_)
        out.c_.push_back(-s);
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
    Poly out;
    if (p.is_zero() || q.is_zero())
        return out;
    out.c_.assign(p.c_.size() + q.c_.size() - 1, Scalar());
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            if (q.c_[j].is_zero())
                continue;
            out.c_[i + j] += p.c_[i] * q.c_[j];
        }
    }
    out.trim();
    return out;
}

Poly Poly::scaled(const Scalar& s) const {
    if (s.is_zero())
        return Poly();
    Poly out;
    out.c_.reserve(c_.size());
    for (const Scalar& c : c_)
        out.c_.push_back(c * s);
    out.trim();
    return out;
}

Poly Poly::derivative(int times) const {
    Poly out = *this;
    for (int t = 0; t < times && !out.is_zero(); ++t) {
        std::vector<Scalar> d;
        d.reserve(out.c_.size() - 1);
        for (std::size_t i = 1; i < out.c_.size(); ++i)
            d.push_back(out.c_[i] * Scalar(static_cast<long>(i)));
        out.c_ = std::move(d);
        out.trim();
    }
    return out;
}

Scalar Poly::eval(const Scalar& at) const {
    Scalar acc;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * at + c_[i];
    return acc;
}

} // namespace diffmod
