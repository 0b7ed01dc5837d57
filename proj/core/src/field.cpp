#include "gl11/field.hpp"

#include <cmath>
#include <cstdio>

namespace gl11 {

NumericField::NumericField(Mode mode, double tol) : mode_(std::move(mode)), tol_(tol) {
    hbar_ = mode_.hbar();
    q_ = qpow(Exponent(WeightComponent(1)));
}

NumericField::Scalar NumericField::qpow(const Exponent& x0) const {
    Exponent x = mode_.canon(x0);
    if (mode_.is_rou()) {
        // hbar = 2 pi i / r (odd) or pi i / r (even); reduce the exponent
        // modulo the period before converting to floating point.
        const Q period = mode_.kind() == ModeKind::RouOdd ? Q(mode_.r()) : Q(2 * mode_.r());
        Q red = mod_q(x.c0, period);
        return std::polar(1.0, 2.0 * M_PI * to_double(red / period));
    }
    const Scalar ipi{0.0, M_PI};
    // hbar * (c0 + c1 u + c2 u^2) with u = pi i / hbar.
    Scalar e = hbar_ * to_double(x.c0);
    // pi i * c1: reduce c1 modulo 2 for accuracy.
    e += ipi * to_double(mod_q(x.c1, Q(2)));
    if (x.c2 != 0) e += to_double(x.c2) * ipi * ipi / hbar_;
    return std::exp(e);
}

NumericField::Scalar NumericField::bracket(const WeightComponent& z) const {
    if (mode_.in_lattice(z)) return {0.0, 0.0};
    return (qpow(z) - qpow(-z)) / qdiff();
}

NumericField::Scalar NumericField::inv(const Scalar& x) const {
    if (std::abs(x) == 0.0) throw BackendError("division by zero");
    return 1.0 / x;
}

std::string NumericField::format(const Scalar& x) const { return format_complex(x); }

std::string format_complex(const std::complex<double>& x, int digits) {
    auto clean = [](double v) { return (v == 0.0) ? 0.0 : v; };
    char buf[96];
    double re = clean(x.real()), im = clean(x.imag());
    std::snprintf(buf, sizeof buf, "%.*g%+.*gi", digits, re, digits, im);
    return buf;
}

ExactField::ExactField(Mode mode) : mode_(std::move(mode)) {
    if (!mode_.is_rou()) throw ValidationError("the exact backend requires a root-of-unity mode");
    n_ = 4 * mode_.r();
    // q = exp(2 pi i / r) = zeta_{4r}^4 (odd), q = exp(pi i / r) = zeta_{4r}^2 (even).
    steps_ = mode_.kind() == ModeKind::RouOdd ? Q(4) : Q(2);
    q_ = qpow(Exponent(WeightComponent(1)));
}

ExactField::Scalar ExactField::qpow(const Exponent& x0) const {
    Exponent x = mode_.canon(x0);
    Q k = x.c0 * steps_;
    if (!is_integer(k))
        throw BackendError("q^" + to_string(x.c0) + " is outside Q(zeta_" + std::to_string(n_) +
                           "); needs numeric backend");
    Z kk;
    mpz_fdiv_r_ui(kk.get_mpz_t(), k.get_num_mpz_t(), static_cast<unsigned long>(n_));
    return Cyclo::zeta_power(n_, kk.get_si());
}

ExactField::Scalar ExactField::bracket(const WeightComponent& z) const {
    if (mode_.in_lattice(z)) return from_int(0);
    return (qpow(z) - qpow(-z)) / qdiff();
}

}  // namespace gl11
