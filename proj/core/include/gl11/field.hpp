#pragma once

#include "gl11/cyclotomic.hpp"
#include "gl11/error.hpp"
#include "gl11/mode.hpp"

#include <complex>
#include <string>

namespace gl11 {

// Scalar backends. Both expose the same interface so that every algebraic
// routine is written once as a template over the field type.

class NumericField {
public:
    using Scalar = std::complex<double>;
    static constexpr bool exact = false;

    explicit NumericField(Mode mode, double tol = 1e-9);

    const Mode& mode() const { return mode_; }
    double tol() const { return tol_; }

    Scalar qpow(const Exponent& x) const;
    Scalar qpow(const WeightComponent& z) const { return qpow(Exponent(z)); }
    Scalar q() const { return q_; }
    Scalar qdiff() const { return q_ - 1.0 / q_; }  // q - q^{-1}
    Scalar bracket(const WeightComponent& z) const;
    Scalar from_q(const Q& x) const { return {to_double(x), 0.0}; }
    Scalar from_int(long x) const { return {static_cast<double>(x), 0.0}; }
    Scalar imag_unit() const { return {0.0, 1.0}; }
    Scalar inv(const Scalar& x) const;
    bool is_zero(const Scalar& x) const { return std::abs(x) <= tol_; }
    std::string format(const Scalar& x) const;

private:
    Mode mode_;
    double tol_;
    Scalar hbar_;
    Scalar q_;
};

class ExactField {
public:
    using Scalar = Cyclo;
    static constexpr bool exact = true;

    // Requires a root-of-unity mode; values live in Q(zeta_{4r}).
    explicit ExactField(Mode mode);

    const Mode& mode() const { return mode_; }
    double tol() const { return 0.0; }
    int conductor() const { return n_; }

    Scalar qpow(const Exponent& x) const;
    Scalar qpow(const WeightComponent& z) const { return qpow(Exponent(z)); }
    Scalar q() const { return q_; }
    Scalar qdiff() const { return q_ - q_.inverse(); }
    Scalar bracket(const WeightComponent& z) const;
    Scalar from_q(const Q& x) const { return Cyclo::rational(n_, x); }
    Scalar from_int(long x) const { return Cyclo::rational(n_, Q(x)); }
    Scalar imag_unit() const { return Cyclo::zeta_power(n_, n_ / 4); }
    Scalar inv(const Scalar& x) const { return x.inverse(); }
    bool is_zero(const Scalar& x) const { return x.is_zero(); }
    std::string format(const Scalar& x) const { return x.format(); }

private:
    Mode mode_;
    int n_;
    // q^z = zeta_n^{z * steps_}
    Q steps_;
    Scalar q_;
};

std::string format_complex(const std::complex<double>& x, int digits = 12);

}  // namespace gl11
