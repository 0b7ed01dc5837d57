#include "support.hpp"

#include <doctest.h>

using namespace gl11;
using namespace gl11::testing;

TEST_CASE("rationals parse and print") {
    CHECK(parse_q("3/2") == Q(3, 2));
    CHECK(parse_q("-4/6") == Q(-2, 3));
    CHECK(parse_q("0.25") == Q(1, 4));
    CHECK(parse_q("-1.5e-1") == Q(-3, 20));
    CHECK(to_string(Q(-3, 2)) == "-3/2");
    CHECK(mod_q(Q(-1, 4), Q(1)) == Q(3, 4));
    CHECK_THROWS_AS(parse_q("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_q("abc"), ValidationError);
}

TEST_CASE("weight components parse") {
    CHECK(parse_weight_component("2") == WeightComponent(Q(2)));
    CHECK(parse_weight_component("u") == WeightComponent(Q(0), Q(1)));
    CHECK(parse_weight_component("1/2-3u") == WeightComponent(Q(1, 2), Q(-3)));
    CHECK(parse_weight_component("-1/3+2/5*u") == WeightComponent(Q(-1, 3), Q(2, 5)));
    CHECK(parse_weight_component(to_string(WeightComponent(Q(7, 3), Q(-1)))) == WeightComponent(Q(7, 3), Q(-1)));
}

TEST_CASE("mode validation") {
    CHECK_THROWS_AS(Mode::rou_odd(4), ValidationError);
    CHECK_THROWS_AS(Mode::rou_odd(1), ValidationError);
    CHECK_THROWS_AS(Mode::rou_even(3), ValidationError);
    CHECK_THROWS_AS(Mode::arbitrary(Q(0), Q(1)), ValidationError);
    CHECK_THROWS_AS(Mode::arbitrary(Q(0), Q(0)), ValidationError);
    CHECK_NOTHROW(Mode::arbitrary(Q(1), Q(0)));
    CHECK_THROWS_AS(ExactField{arb_mode()}, ValidationError);
}

TEST_CASE("genericity") {
    Mode arb = arb_mode();
    CHECK(arb.is_generic(WeightComponent(1), WeightComponent(0)));
    CHECK_FALSE(arb.is_generic(WeightComponent(Q(0), Q(1)), WeightComponent(0)));
    CHECK_FALSE(arb.is_generic(WeightComponent(0), WeightComponent(Q(1, 3))));
    Mode odd = Mode::rou_odd(3);
    CHECK_FALSE(odd.is_generic(WeightComponent(Q(1, 2)), WeightComponent(0)));
    CHECK_FALSE(odd.is_generic(WeightComponent(Q(5)), WeightComponent(2)));
    CHECK(odd.is_generic(WeightComponent(Q(1, 4)), WeightComponent(0)));
    CHECK(odd.is_generic(WeightComponent(Q(1, 2)), WeightComponent(Q(1, 3))));
    Mode even = Mode::rou_even(2);
    CHECK_FALSE(even.is_generic(WeightComponent(Q(2)), WeightComponent(3)));
    CHECK(even.is_generic(WeightComponent(Q(1)), WeightComponent(0)));
    Mode odd_int = Mode::rou_odd(3, WeightSet::Integral);
    CHECK_FALSE(odd_int.is_generic(WeightComponent(Q(1, 2)), WeightComponent(0)));
    CHECK(odd_int.is_generic(WeightComponent(Q(1, 3)), WeightComponent(0)));
    CHECK_THROWS_AS(odd_int.check_g_weight(WeightComponent(Q(1, 2))), ValidationError);
}

TEST_CASE("cyclotomic field arithmetic") {
    for (int n : {8, 12, 16, 20}) {
        Cyclo z = Cyclo::zeta_power(n, 1);
        Cyclo acc = Cyclo::rational(n, Q(1));
        for (int k = 0; k < n; ++k) acc *= z;
        CHECK(acc == Cyclo(1));
        Cyclo x = Cyclo::zeta_power(n, 3) + Cyclo(Q(2, 3)) - Cyclo::zeta_power(n, 5);
        CHECK(x * x.inverse() == Cyclo(1));
        CHECK(std::abs(x.to_complex() - (std::polar(1.0, 6 * M_PI / n) + 2.0 / 3.0 - std::polar(1.0, 10 * M_PI / n))) <
              1e-12);
        // 1 + zeta^{n/2} = 0
        CHECK((Cyclo(1) + Cyclo::zeta_power(n, n / 2)).is_zero());
    }
    CHECK_THROWS_AS(Cyclo(0).inverse(), BackendError);
}

template <class F>
void check_scalar_laws(const F& f, Sampler& s) {
    for (int k = 0; k < 100; ++k) {
        WeightComponent z1 = s.generic_e(), z2 = s.generic_e();
        CHECK(close(f, f.qpow(z1 + z2), f.qpow(z1) * f.qpow(z2)));
        CHECK(close(f, f.bracket(z1), -f.bracket(-z1)));
    }
    CHECK(close(f, f.qpow(WeightComponent(0)), f.from_int(1)));
    CHECK(close(f, f.qpow(WeightComponent(Q(0), Q(1))), f.from_int(-1)));
    CHECK(close(f, f.bracket(WeightComponent(1)), f.from_int(1)));
    CHECK(close(f, f.bracket(WeightComponent(0)), f.from_int(0)));
    CHECK(close(f, f.bracket(WeightComponent(Q(0), Q(1))), f.from_int(0)));
}

TEST_CASE("q-powers and brackets: arbitrary q") {
    auto f = arb_field();
    Sampler s(f.mode(), false, 11);
    check_scalar_laws(f, s);
}

TEST_CASE("q-powers and brackets: exact roots of unity") {
    for (Mode m : {Mode::rou_odd(3), Mode::rou_odd(5), Mode::rou_even(2), Mode::rou_even(4)}) {
        ExactField f(m);
        Sampler s(m, true, 5);
        check_scalar_laws(f, s);
        const long period = m.kind() == ModeKind::RouOdd ? m.r() : 2 * m.r();
        for (long n = -3; n <= 3; ++n) CHECK(f.qpow(WeightComponent(Q(period * n))) == Cyclo(1));
        NumericField g(m);
        for (int k = 0; k < 20; ++k) {
            WeightComponent z = s.generic_e();
            CHECK(std::abs(f.qpow(z).to_complex() - g.qpow(z)) < 1e-12);
        }
    }
    ExactField f3(Mode::rou_odd(3));
    CHECK(f3.qpow(WeightComponent(3)) == Cyclo(1));
    CHECK_THROWS_AS(f3.qpow(WeightComponent(Q(1, 8))), BackendError);
}

TEST_CASE("bracket vanishes exactly on the lattice") {
    ExactField f(Mode::rou_odd(3));
    // u = 3/2 at r = 3
    CHECK(f.bracket(WeightComponent(Q(3, 2))).is_zero());
    CHECK(f.bracket(WeightComponent(Q(3))).is_zero());
    CHECK_FALSE(f.bracket(WeightComponent(Q(1, 2))).is_zero());
}
