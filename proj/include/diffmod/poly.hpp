#ifndef DIFFMOD_POLY_HPP
#define DIFFMOD_POLY_HPP

#include <vector>

#include "diffmod/scalar.hpp"

namespace diffmod {

/// Dense univariate polynomial over Scalar; coefficient index = power of x.
/// The top stored coefficient is nonzero; the zero polynomial stores nothing.
class Poly {
public:
    Poly() = default;
    Poly(long n) { if (n != 0) c_.push_back(Scalar(n)); }
    Poly(Scalar s) { if (!s.is_zero()) c_.push_back(std::move(s)); }
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(1); }
    static Poly monomial(int power, Scalar coeff = Scalar(1));

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero beyond the stored degree.
    const Scalar& coeff(int i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(const Poly& p, const Poly& q);

    Poly scaled(const Scalar& s) const;
    Poly derivative(int times = 1) const;
    Scalar eval(const Scalar& at) const;

    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

private:
    void trim();
    std::vector<Scalar> c_;
};

} // namespace diffmod

#endif
