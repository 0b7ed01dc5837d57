#pragma once

#include "gl11/rational.hpp"

#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace gl11 {

// Arithmetic tables for Q(zeta_n): the n-th cyclotomic polynomial and the
// reductions of zeta^k onto the power basis 1, zeta, ..., zeta^{phi-1}.
struct CycloContext {
    int n = 0;
    int phi = 0;
    std::vector<Z> poly;                 // monic, degree phi
    std::vector<std::vector<Q>> reduce;  // zeta^k for 0 <= k < max(n, 2*phi - 1)

    static const CycloContext* get(int n);
};

// Element of Q(zeta_n), stored on the power basis. A null context marks a
// rational constant; it is promoted on contact with a typed element.
class Cyclo {
public:
    Cyclo() : coeffs_(1, Q(0)) {}
    Cyclo(int x) : coeffs_(1, Q(x)) {}
    Cyclo(long x) : coeffs_(1, Q(x)) {}
    Cyclo(const Q& x) : coeffs_(1, x) {}

    static Cyclo zeta_power(int n, long k);
    static Cyclo rational(int n, const Q& x);

    const CycloContext* context() const { return ctx_; }
    int conductor() const { return ctx_ ? ctx_->n : 0; }
    const std::vector<Q>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Cyclo inverse() const;
    std::complex<double> to_complex() const;

    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);
    Cyclo& operator/=(const Cyclo& o) { return *this *= o.inverse(); }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
    friend Cyclo operator/(Cyclo a, const Cyclo& b) { return a /= b; }
    friend Cyclo operator-(Cyclo a);
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // "[c0, c1, ...]@zeta<n>" or a bare rational.
    std::string format() const;

private:
    Cyclo(const CycloContext* ctx, std::vector<Q> c) : ctx_(ctx), coeffs_(std::move(c)) {}
    void promote(const CycloContext* ctx);

    const CycloContext* ctx_ = nullptr;
    std::vector<Q> coeffs_;
};

inline double magnitude(const Cyclo& x) { return std::abs(x.to_complex()); }
inline bool negligible(const Cyclo& x, double) { return x.is_zero(); }
inline double pivot_score(const Cyclo& x) { return x.is_zero() ? 0.0 : 1.0; }
inline std::complex<double> to_complex(const Cyclo& x) { return x.to_complex(); }

inline double magnitude(const std::complex<double>& x) { return std::abs(x); }
inline bool negligible(const std::complex<double>& x, double tol) { return std::abs(x) <= tol; }
inline double pivot_score(const std::complex<double>& x) { return std::abs(x); }
inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }

}  // namespace gl11
