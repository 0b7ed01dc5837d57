#pragma once

#include "gl11/mode.hpp"

#include <string>

namespace gl11 {

// The standard indecomposable weight modules.
//   Eps(n, b)_p      one-dimensional, E-weight n*u
//   Kac(alpha, a)_p  basis {v, v'} with v' = Y v and X v' = [alpha] v
//   AntiKac(alpha, a)_p  basis {v', v} with v = X v' and Y v = [alpha] v'
//   Proj(n, b)_p     basis {v', v+, v-, v}, the projective cover of Eps(n, b)_p
struct StdObject {
    enum class Kind { Eps, Kac, AntiKac, Proj };

    Kind kind = Kind::Kac;
    WeightComponent alpha;  // E-weight; n*u for Eps and Proj
    WeightComponent a;      // G-weight of the distinguished vector (v, v', or v)
    Parity p;

    static StdObject eps(long n, WeightComponent b, Parity p);
    static StdObject kac(WeightComponent alpha, WeightComponent a, Parity p);
    static StdObject anti_kac(WeightComponent alpha, WeightComponent a, Parity p);
    static StdObject proj(long n, WeightComponent b, Parity p);

    // Lattice index n for Eps and Proj objects.
    long lattice_n() const;

    std::size_t dim() const;

    // Degree of the highest-weight vector (Kac) or the generating vector.
    Degree degree() const { return {alpha, a}; }

    bool is_projective(const Mode& m) const;
    bool is_simple(const Mode& m) const;

    // Brings weights to the mode's canonical representation.
    StdObject canon(const Mode& m) const;

    friend bool operator==(const StdObject& x, const StdObject& y) {
        return x.kind == y.kind && x.alpha == y.alpha && x.a == y.a && x.p == y.p;
    }
    friend bool operator!=(const StdObject& x, const StdObject& y) { return !(x == y); }
};

// Canonical text: "V(3/2, -1; p=0)", "Vbar(1/2, 0; p=1)", "P(n=2, b=0; p=1)", "eps(n=0, b=5; p=0)".
std::string to_string(const StdObject& obj);
StdObject parse_std_object(const std::string& text);

}  // namespace gl11
