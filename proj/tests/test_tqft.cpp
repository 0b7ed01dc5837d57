#include "support.hpp"

#include <doctest.h>

using namespace gl11;
using namespace gl11::testing;

namespace {

template <class F>
std::vector<MarkedPoint> random_points(Sampler& s, int n) {
    std::vector<MarkedPoint> pts;
    for (int k = 0; k < n; ++k) pts.push_back({s.generic_kac(), s.integer(0, 1) == 0 ? 1 : -1});
    return pts;
}

template <class F>
void verlinde_grid(const F& f, unsigned seed, int max_genus, int max_points) {
    Sampler s(f.mode(), F::exact, seed);
    for (int g = 1; g <= max_genus; ++g)
        for (int n = 0; n <= max_points; ++n) {
            SurfaceData surf;
            surf.genus = g;
            surf.points = random_points<F>(s, n);
            const Degree beta{s.generic_e(), WeightComponent(0)};
            CAPTURE(g);
            CAPTURE(n);
            CHECK(close(f, verlinde_surgery(f, surf, beta).value, verlinde_closed(f, surf, beta)));
        }
}

}  // namespace

TEST_CASE("Verlinde: surgery agrees with the closed form, arbitrary q") {
    verlinde_grid(arb_field(), 31, 2, 2);
}

TEST_CASE("Verlinde: genus one values") {
    const Degree beta{WeightComponent(Q(2, 5)), WeightComponent(0)};
    SurfaceData torus;
    torus.genus = 1;
    CHECK(close(arb_field(), verlinde_closed(arb_field(), torus, beta), std::complex<double>(1.0)));
    const ExactField e3(Mode::rou_odd(3));
    CHECK(verlinde_closed(e3, torus, reference_degree(e3.mode())) == e3.from_int(9));
}

TEST_CASE("Verlinde: surgery agrees with the closed form at roots of unity, genus one") {
    verlinde_grid(NumericField(Mode::rou_odd(3)), 32, 1, 1);
    verlinde_grid(NumericField(Mode::rou_even(2)), 33, 1, 1);
}

TEST_CASE("Verlinde identity against graded dimensions") {
    Sampler s(arb_mode(), false, 41);
    for (int g = 1; g <= 4; ++g) CHECK(verlinde_identity_check(arb_field(), g, {s.generic_e(), WeightComponent(0)}) < 1e-10);
    for (const Mode& m : {Mode::rou_odd(3), Mode::rou_even(2)}) {
        const ExactField e(m);
        for (int g = 1; g <= 3; ++g) CHECK(verlinde_identity_check(e, g, reference_degree(m)) == 0.0);
    }
}

TEST_CASE("graded dimensions match the binomial counts") {
    for (int g = 1; g <= 5; ++g) {
        const auto dims = graded_dims(arb_mode(), g);
        CHECK(dims == graded_dims_formula(arb_mode(), g));
        long total = 0;
        for (const auto& [d, c] : dims) total += c;
        CHECK(total == (1L << (2 * g - 2)));
    }
    for (int g = 1; g <= 4; ++g) CHECK(graded_dims(Mode::rou_odd(3), g) == graded_dims_formula(Mode::rou_odd(3), g));
    for (int g = 1; g <= 3; ++g) CHECK(graded_dims(Mode::rou_even(2), g) == graded_dims_formula(Mode::rou_even(2), g));
    CHECK(graded_dims(Mode::rou_odd(3), 1).at(0) == 9);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(4, -1) == 0);
}

TEST_CASE("torus mapping class group, arbitrary q") {
    const NumericField f = arb_field();
    using S = std::complex<double>;
    const auto rep = torus_pairing_check(f);
    CHECK(rep.max_deviation < 1e-10);
    CHECK(rep.mcg_s_residual < 1e-10);
    CHECK(rep.mcg_t_residual < 1e-10);
    const auto m = torus_mcg(f);
    CHECK(close(f, m.S_ * m.S_, Mat<S>::identity(2)));
    const Mat<S> st = m.S_ * m.T;
    CHECK(close(f, st * st * st, Mat<S>::scalar(-f.imag_unit(), 2)));
}

TEST_CASE("torus mapping class group, r=3") {
    const NumericField f(Mode::rou_odd(3));
    const auto rep = torus_pairing_check(f);
    CHECK(rep.pairings == 130);
    CHECK(rep.max_deviation < 1e-9);
    CHECK(rep.mcg_s_residual < 1e-9);
    CHECK(rep.mcg_t_residual < 1e-9);
    const ExactField e(Mode::rou_odd(3));
    const auto m = torus_mcg(e);
    const Mat<Cyclo> st = m.S_ * m.T;
    CHECK((st * st * st - Mat<Cyclo>::scalar(e.from_int(-1) * e.imag_unit(), m.T.rows())).is_zero(0.0));
}

TEST_CASE("skein relation of the braiding") {
    Sampler s(arb_mode(), false, 51);
    for (int t = 0; t < 5; ++t) CHECK(skein_check(arb_field(), s.generic_e(), s.g()) < 1e-10);
    const ExactField e(Mode::rou_odd(3));
    CHECK(skein_check(e, WeightComponent(Q(1, 4)), WeightComponent(1)) == 0.0);
}

TEST_CASE("Conway polynomials from the skein oracle") {
    const Color V = Color::of(StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(0), Parity(0)));
    CHECK(conway_polynomial(unknot(V)) == std::vector<long>{1});
    CHECK(conway_polynomial(hopf_link(V, V)) == std::vector<long>{0, 1});
    CHECK(conway_polynomial(trefoil(V)) == std::vector<long>{1, 0, 1});
    CHECK(conway_polynomial(figure_eight(V)) == std::vector<long>{1, 0, -1});
    CHECK(conway_polynomial(braid_closure(2, {1, 1, 1, 1}, {V, V})) == std::vector<long>{0, 2, 0, 1});
}

TEST_CASE("renormalized invariant equals d(V) times the Conway polynomial") {
    const NumericField f = arb_field();
    Sampler s(arb_mode(), false, 61);
    for (int t = 0; t < 3; ++t) {
        const StdObject v = StdObject::kac(s.generic_e(), s.g(), Parity(0));
        const Color V = Color::of(v);
        for (const MorseWord& w : {trefoil(V), figure_eight(V), hopf_link(V, V), braid_closure(3, {1, 2, 1, 2}, {V, V, V})}) {
            const auto z = conway_variable(f, v.alpha);
            CHECK(close(f, alexander(f, w), mdim(f, v) * eval_poly(f, conway_polynomial(w), z)));
        }
    }
}

TEST_CASE("4-punctured sphere relation") {
    const NumericField f = arb_field();
    Sampler s(arb_mode(), false, 71);
    for (int t = 0; t < 3; ++t) {
        const auto res = sphere4_pairing(f, s.generic_e(), s.g());
        CHECK(res.relation_residual < 1e-10);
        CHECK(std::abs(res.table(0, 1)) < 1e-9);
        CHECK(std::abs(res.table(1, 0)) < 1e-9);
        CHECK(std::abs(res.table(0, 0)) > 1e-6);
    }
}
