#include "diffmod/diffop.hpp"

#include <array>

#include "diffmod/errors.hpp"

namespace diffmod {

namespace {
const Poly kZeroPoly{};
} // namespace

DiffOp::DiffOp(Scalar weight, std::vector<Poly> coeffs)
    : weight_(std::move(weight)), coeffs_(std::move(coeffs)) {}

DiffOp DiffOp::zero(Scalar weight, int order) {
    return DiffOp(std::move(weight),
                  std::vector<Poly>(static_cast<std::size_t>(order) + 1));
}

DiffOp DiffOp::multiplication(Scalar weight, Poly f) {
    return DiffOp(std::move(weight), {std::move(f)});
}

const Poly& DiffOp::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return kZeroPoly;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool DiffOp::is_zero() const {
    for (const Poly& p : coeffs_)
        if (!p.is_zero())
            return false;
    return true;
}

DiffOp DiffOp::normalized() const {
    DiffOp out = *this;
    while (!out.coeffs_.empty() && out.coeffs_.back().is_zero())
        out.coeffs_.pop_back();
    return out;
}

DiffOp DiffOp::padded(int order) const {
    DiffOp out = *this;
    if (static_cast<int>(out.coeffs_.size()) < order + 1)
        out.coeffs_.resize(static_cast<std::size_t>(order) + 1);
    return out;
}

DiffOp DiffOp::operator-() const {
    DiffOp out = *this;
    for (Poly& p : out.coeffs_)
        p = -p;
    return out;
}

void DiffOp::check_same_weight(const DiffOp& o) const {
    if (weight_ != o.weight_)
        throw domain_error("weight mismatch: " + weight_.str() + " vs " + o.weight_.str());
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_same_weight(o);
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_same_weight(o);
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

DiffOp DiffOp::scaled(const Scalar& s) const {
    DiffOp out = *this;
    for (Poly& p : out.coeffs_)
        p = p.scaled(s);
    return out;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
    if (a.weight_ != b.weight_)
        return false;
    const int n = std::max(a.order(), b.order());
    for (int i = 0; i <= n; ++i)
        if (a.coeff(i) != b.coeff(i))
            return false;
    return true;
}

Density apply(const DiffOp& A, const Density& phi) {
    if (phi.weight != A.weight())
        throw domain_error("weight mismatch: operator at " + A.weight().str() +
                           " applied to density at " + phi.weight.str());
    Poly out;
    for (int i = 0; i <= A.order(); ++i) {
        if (A.coeff(i).is_zero())
            continue;
        out += A.coeff(i) * phi.value.derivative(i);
    }
    return Density(phi.weight, out);
}

DiffOp compose(const DiffOp& A, const DiffOp& B) {
    if (A.weight() != B.weight())
        throw domain_error("weight mismatch in composition: " + A.weight().str() +
                           " vs " + B.weight().str());
    const int ka = A.order(), kb = B.order();
    std::vector<Poly> out(static_cast<std::size_t>(ka + kb) + 1);
    // a_i d^i o b_j d^j = sum_t C(i,t) a_i b_j^(t) d^(i+j-t)
    for (int i = 0; i <= ka; ++i) {
        const Poly& ai = A.coeff(i);
        if (ai.is_zero())
            continue;
        for (int j = 0; j <= kb; ++j) {
            const Poly& bj = B.coeff(j);
            if (bj.is_zero())
                continue;
            Poly d = bj;
            for (int t = 0; t <= i; ++t) {
                if (!d.is_zero())
                    out[static_cast<std::size_t>(i + j - t)] +=
                        (ai * d).scaled(Scalar(binomial(static_cast<unsigned long>(i),
                                                        static_cast<unsigned long>(t))));
                d = d.derivative();
            }
        }
    }
    return DiffOp(A.weight(), std::move(out));
}

DiffOp lie_op(const VectorField& X, const Scalar& w) {
    return DiffOp(w, {X.comp.derivative().scaled(-w), X.comp});
}

DiffOp ad_action(const VectorField& X, const DiffOp& A) {
    const DiffOp L = lie_op(X, A.weight());
    DiffOp out = compose(L, A) - compose(A, L);
    // The top coefficient cancels: the principal symbol transforms as a
    // density, so the commutator stays within the stored order.
    while (out.order() > A.order()) {
        if (!out.coeffs().back().is_zero())
            throw internal_error("ad_action raised the operator order");
        out = DiffOp(out.weight(), std::vector<Poly>(out.coeffs().begin(),
                                                     out.coeffs().end() - 1));
    }
    return out.padded(A.order());
}

DiffOp adjoint(const DiffOp& A) {
    const int k = A.order();
    std::vector<Poly> out(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        const Poly& ai = A.coeff(i);
        if (ai.is_zero())
            continue;
        Poly d = ai;
        for (int t = 0; t <= i; ++t) {
            Scalar c(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(t)));
            if (i % 2 != 0)
                c = -c;
            out[static_cast<std::size_t>(i - t)] += d.scaled(c);
            d = d.derivative();
        }
    }
    return DiffOp(Scalar(-1) - A.weight(), std::move(out));
}

DiffOp anticommutator(const DiffOp& A, const DiffOp& B) {
    return compose(A, B) + compose(B, A);
}

DiffOp sym3(const VectorField& X, const VectorField& Y, const VectorField& Z,
            const Scalar& w) {
    const std::array<DiffOp, 3> L = {lie_op(X, w), lie_op(Y, w), lie_op(Z, w)};
    DiffOp out = DiffOp::zero(w, 3);
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& p : perms)
        out += compose(compose(L[p[0]], L[p[1]]), L[p[2]]);
    return out;
}

} // namespace diffmod
