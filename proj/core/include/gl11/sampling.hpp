#pragma once

#include "gl11/mode.hpp"
#include "gl11/std_object.hpp"

#include <random>

namespace gl11 {

// Random parameters compatible with a given field. Exact root-of-unity
// fields get E-weights in (1/4 + Z/2) (odd) or (1/2 + Z) (even) and integer
// G-weights, so that every q-power stays inside Q(zeta_{4r}).
class Sampler {
public:
    Sampler(Mode mode, bool exact, unsigned seed) : mode_(std::move(mode)), exact_(exact), rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Q rational(long max_num, long max_den) {
        long d = integer(1, max_den);
        long n = integer(-max_num, max_num);
        Q x(n, d);
        x.canonicalize();
        return x;
    }

    WeightComponent generic_e() {
        for (;;) {
            WeightComponent z;
            if (exact_) {
                if (mode_.kind() == ModeKind::RouOdd)
                    z = WeightComponent(Q(2 * integer(-6, 6) + 1, 4));
                else
                    z = WeightComponent(Q(2 * integer(-6, 6) + 1, 2));
            } else if (mode_.is_rou()) {
                z = WeightComponent(rational(30, 7));
            } else {
                z = WeightComponent(rational(3, 4), integer(0, 2) == 0 ? rational(1, 3) : Q(0));
            }
            if (mode_.in_lattice(z)) continue;
            if (mode_.is_rou()) {
                // Avoid degrees whose lifts contain non-simple Kac modules.
                Q em = mod_q(mode_.canon(z).a, Q(1));
                if (em == 0) continue;
                if (mode_.kind() == ModeKind::RouOdd && em == Q(1, 2)) continue;
            }
            return z;
        }
    }

    WeightComponent g() {
        if (exact_ || mode_.integral()) return WeightComponent(Q(integer(-4, 4)));
        return WeightComponent(rational(3, 4));
    }

    Parity parity() { return Parity(static_cast<int>(integer(0, 1))); }

    StdObject generic_kac() { return StdObject::kac(generic_e(), g(), parity()); }

    StdObject any_std() {
        switch (integer(0, 4)) {
            case 0: return StdObject::eps(integer(-2, 2), g(), parity());
            case 1: return StdObject::proj(integer(-2, 2), g(), parity());
            case 2: return StdObject::anti_kac(generic_e(), g(), parity());
            case 3: return StdObject::kac(WeightComponent(Q(0), Q(integer(-2, 2))), g(), parity());
            default: return generic_kac();
        }
    }

    std::mt19937_64& rng() { return rng_; }

private:
    Mode mode_;
    bool exact_;
    std::mt19937_64 rng_;
};

}  // namespace gl11
