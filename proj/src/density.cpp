#include "diffmod/density.hpp"

#include "diffmod/errors.hpp"

namespace diffmod {

Poly lie(const Scalar& w, const VectorField& X, const Poly& f) {
    return X.comp * f.derivative() - X.comp.derivative().scaled(w) * f;
}

Density lie_derivative(const VectorField& X, const Density& phi) {
    return Density(phi.weight, lie(phi.weight, X, phi.value));
}

VectorField vf_commutator(const VectorField& X, const VectorField& Y) {
    return VectorField(X.comp * Y.comp.derivative() - X.comp.derivative() * Y.comp);
}

Scalar falling_product(const Scalar& w, int t, int n) {
    Scalar out(1);
    for (int u = t; u < n; ++u)
        out *= w - Scalar(u);
    return out;
}

Density transvectant(int n, const Density& phi, const Density& psi) {
    if (n < 0)
        throw domain_error("transvectant order must be nonnegative");
    const Scalar two_l = Scalar(2) * phi.weight;
    const Scalar two_m = Scalar(2) * psi.weight;
    Poly value;
    for (int i = 0; i <= n; ++i) {
        const int j = n - i;
        Scalar c = Scalar(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i)))
                 * falling_product(two_l, i, n) * falling_product(two_m, j, n);
        if (i % 2 != 0)
            c = -c;
        if (c.is_zero())
            continue;
        value += (phi.value.derivative(i) * psi.value.derivative(j)).scaled(c);
    }
    return Density(phi.weight + psi.weight - Scalar(n), value);
}

Poly j_op(int m, const Scalar& s, const VectorField& X, const Poly& a) {
    const Poly& Xc = X.comp;
    switch (m) {
    case 3:
        return Xc.derivative(3) * a;
    case 4:
        return Xc.derivative(4).scaled(s) * a + Xc.derivative(3).scaled(Scalar(2)) * a.derivative();
    case 5: {
        const Scalar two_s1 = Scalar(2) * s - Scalar(1);
        return Xc.derivative(5).scaled(s * two_s1) * a
             + Xc.derivative(4).scaled(Scalar(5) * two_s1) * a.derivative()
             + Xc.derivative(3).scaled(Scalar(10)) * a.derivative(2);
    }
    default:
        throw domain_error("j_op supports orders 3, 4, 5 only");
    }
}

} // namespace diffmod
