#include "diffmod/rational.hpp"

namespace diffmod {

Rational::Rational(long n, long d) {
    if (d == 0)
        throw domain_error("division by zero: rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_integer_string(const std::string& digits) {
    return Rational(mpq_class(mpz_class(digits, 10)));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer())
        return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(mpq_class(r));
}

Rational factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(mpq_class(r));
}

} // namespace diffmod
