#pragma once

#include "gl11/rational.hpp"

#include <complex>
#include <optional>
#include <string>

namespace gl11 {

// The exact complex number a + b*u with u = pi*i/hbar.
struct WeightComponent {
    Q a{0};
    Q b{0};

    WeightComponent() = default;
    WeightComponent(Q a_, Q b_ = Q(0)) : a(std::move(a_)), b(std::move(b_)) {}
    WeightComponent(long a_) : a(a_), b(0) {}

    friend WeightComponent operator+(const WeightComponent& x, const WeightComponent& y) { return {x.a + y.a, x.b + y.b}; }
    friend WeightComponent operator-(const WeightComponent& x, const WeightComponent& y) { return {x.a - y.a, x.b - y.b}; }
    friend WeightComponent operator-(const WeightComponent& x) { return {-x.a, -x.b}; }
    friend WeightComponent operator*(const Q& s, const WeightComponent& x) { return {s * x.a, s * x.b}; }
    friend bool operator==(const WeightComponent& x, const WeightComponent& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const WeightComponent& x, const WeightComponent& y) { return !(x == y); }
    // Lexicographic order on (a, b); used only for deterministic tie-breaking.
    friend bool operator<(const WeightComponent& x, const WeightComponent& y) {
        return x.a < y.a || (x.a == y.a && x.b < y.b);
    }
};

// c0 + c1*u + c2*u^2, the general exponent appearing in q-powers of weight
// products such as q^{lambda_E * mu_G}.
struct Exponent {
    Q c0{0}, c1{0}, c2{0};

    Exponent() = default;
    Exponent(const WeightComponent& z) : c0(z.a), c1(z.b), c2(0) {}
    Exponent(Q c0_, Q c1_, Q c2_) : c0(std::move(c0_)), c1(std::move(c1_)), c2(std::move(c2_)) {}

    friend Exponent operator+(const Exponent& x, const Exponent& y) { return {x.c0 + y.c0, x.c1 + y.c1, x.c2 + y.c2}; }
    friend Exponent operator-(const Exponent& x, const Exponent& y) { return {x.c0 - y.c0, x.c1 - y.c1, x.c2 - y.c2}; }
    friend Exponent operator-(const Exponent& x) { return {-x.c0, -x.c1, -x.c2}; }
    friend Exponent operator*(const Q& s, const Exponent& x) { return {s * x.c0, s * x.c1, s * x.c2}; }
};

Exponent operator*(const WeightComponent& x, const WeightComponent& y);

struct Weight {
    WeightComponent e;  // E-weight
    WeightComponent g;  // G-weight

    friend Weight operator+(const Weight& x, const Weight& y) { return {x.e + y.e, x.g + y.g}; }
    friend Weight operator-(const Weight& x) { return {-x.e, -x.g}; }
    friend bool operator==(const Weight& x, const Weight& y) { return x.e == y.e && x.g == y.g; }
    friend bool operator!=(const Weight& x, const Weight& y) { return !(x == y); }
};

struct Parity {
    int v = 0;

    Parity() = default;
    constexpr Parity(int x) : v(((x % 2) + 2) % 2) {}
    friend Parity operator+(Parity x, Parity y) { return Parity(x.v + y.v); }
    friend bool operator==(Parity x, Parity y) { return x.v == y.v; }
    friend bool operator!=(Parity x, Parity y) { return x.v != y.v; }
    int sign() const { return v ? -1 : 1; }
};

enum class ModeKind { Arbitrary, RouOdd, RouEven };
enum class WeightSet { All, Integral };

// Grading degree of a homogeneous object: the pair (E-weight, G-weight) of
// any of its weight vectors, read modulo the mode's grading group.
struct Degree {
    WeightComponent e;
    WeightComponent g;
};

class Mode {
public:
    // hbar = hbar_re + hbar_im * pi * i.
    static Mode arbitrary(Q hbar_re, Q hbar_im, WeightSet w = WeightSet::All);
    static Mode rou_odd(int r, WeightSet w = WeightSet::All);
    static Mode rou_even(int r, WeightSet w = WeightSet::All);

    ModeKind kind() const { return kind_; }
    WeightSet weights() const { return weights_; }
    int r() const { return r_; }
    const Q& hbar_re() const { return hbar_re_; }
    const Q& hbar_im() const { return hbar_im_; }
    bool is_rou() const { return kind_ != ModeKind::Arbitrary; }
    bool integral() const { return weights_ == WeightSet::Integral; }

    std::complex<double> hbar() const;

    // u = pi*i/hbar when it is rational (roots of unity, or purely imaginary hbar).
    const std::optional<Q>& rational_unit() const { return unit_; }

    // Folds b into a whenever u is rational, so that equal numbers compare equal.
    WeightComponent canon(const WeightComponent& z) const;
    Exponent canon(const Exponent& x) const;

    // n such that z = n*u, if any.
    std::optional<Z> lattice_index(const WeightComponent& z) const;
    bool in_lattice(const WeightComponent& z) const { return lattice_index(z).has_value(); }

    bool is_generic(const WeightComponent& lambda_e, const WeightComponent& lambda_g) const;
    bool is_generic(const Degree& d) const { return is_generic(d.e, d.g); }

    // Throws ValidationError if the G-weight is not allowed by the weight set.
    void check_g_weight(const WeightComponent& g) const;

    // Number of Kirby-color terms per generic degree.
    int kirby_size() const;

    std::string describe() const;

    friend bool operator==(const Mode& x, const Mode& y) {
        return x.kind_ == y.kind_ && x.r_ == y.r_ && x.hbar_re_ == y.hbar_re_ && x.hbar_im_ == y.hbar_im_ &&
               x.weights_ == y.weights_;
    }

private:
    ModeKind kind_ = ModeKind::Arbitrary;
    WeightSet weights_ = WeightSet::All;
    int r_ = 0;
    Q hbar_re_{0}, hbar_im_{0};
    std::optional<Q> unit_;
};

std::string to_string(const WeightComponent& z);
WeightComponent parse_weight_component(const std::string& text);

}  // namespace gl11
