#include "support.hpp"

#include <doctest.h>

using namespace gl11;
using namespace gl11::testing;

namespace {

template <class F>
void basic_links(const F& f, unsigned seed) {
    using S = typename F::Scalar;
    Sampler s(f.mode(), F::exact, seed);
    for (int t = 0; t < 3; ++t) {
        const StdObject v = s.generic_kac();
        const StdObject w = s.generic_kac();
        const S d = mdim(f, v);
        CHECK(close(f, fprime(f, unknot(Color::of(v))), d));
        // A framed unknot picks up the twist scalar per unit of framing.
        const S th = twist_scalar(f, v);
        CHECK(close(f, fprime(f, apply_framings(unknot(Color::of(v), 1))), d * th));
        CHECK(close(f, fprime(f, apply_framings(unknot(Color::of(v), -2))), d * f.inv(th * th)));
        // The Hopf link cut along v leaves the w-loop acting on v.
        CHECK(close(f, fprime(f, hopf_link(Color::of(v), Color::of(w))), d * s_prime(f, w, v)));
    }
}

template <class F>
void kirby_one(const F& f, unsigned seed) {
    Sampler s(f.mode(), F::exact, seed);
    for (long framing : {0L, 1L, -2L}) {
        const StdObject v = s.generic_kac();
        const auto [plain, blown] = kirby_one_pair(v, framing);
        const auto a = cgp(f, plain);
        const auto b = cgp(f, blown);
        CHECK(b.surgery_components == 1);
        CHECK(close(f, a.value, b.value));
    }
}

}  // namespace

TEST_CASE("colors and slice kinds round-trip through text") {
    const Color c = Color::of(StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(2), Parity(1)));
    const Color back = parse_color(to_string(c));
    REQUIRE(back.obj);
    CHECK(*back.obj == *c.obj);
    const Color om = parse_color("Omega(1/4, 0)");
    REQUIRE(om.is_kirby());
    CHECK(om.kirby->e == WeightComponent(Q(1, 4)));
    for (SliceKind k : {SliceKind::CupLeft, SliceKind::CapRight, SliceKind::CrossNeg, SliceKind::Coupon})
        CHECK(parse_slice_kind(to_string(k)) == k);
    CHECK_THROWS_AS(parse_slice_kind("bogus"), ValidationError);
}

TEST_CASE("topology of standard links") {
    const Color V = Color::of(StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(0), Parity(0)));
    const Topology tr = analyze(trefoil(V));
    CHECK(tr.components == 1);
    CHECK(tr.total_writhe == 3);
    const Topology fe = analyze(figure_eight(V));
    CHECK(fe.components == 1);
    CHECK(fe.total_writhe == 0);
    const MorseWord hopf = hopf_link(V, V);
    const Topology ht = analyze(hopf);
    CHECK(ht.components == 2);
    const auto lk = linking_matrix(hopf, ht, {0, 1});
    CHECK(lk[0][1] == 1);
    CHECK(lk[1][0] == 1);
}

TEST_CASE("analyze rejects malformed words") {
    const Color V = Color::of(StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(0), Parity(0)));
    MorseWord w = unknot(V);
    w.slices[1].kind = SliceKind::CapLeft;  // orientation mismatch with the cup
    CHECK_THROWS_AS(analyze(w), ValidationError);
    MorseWord open = unknot(V);
    open.slices.pop_back();
    CHECK_THROWS_AS(fprime(arb_field(), open), ValidationError);
}

TEST_CASE("framings are total and idempotent") {
    const Color V = Color::of(StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(0), Parity(0)));
    MorseWord w = trefoil(V);
    w.framings[0] = 1;
    const MorseWord once = apply_framings(w);
    const MorseWord twice = apply_framings(once);
    CHECK(once.slices.size() == twice.slices.size());
    CHECK(analyze(once).self_writhe[0] == 1);
}

TEST_CASE("signature of integer symmetric matrices") {
    CHECK(signature({{1}}) == 1);
    CHECK(signature({{-1}}) == -1);
    CHECK(signature({{0}}) == 0);
    CHECK(signature({{0, 1}, {1, 0}}) == 0);
    CHECK(signature({{2, 1}, {1, 2}}) == 2);
    CHECK(signature({{0, 1, 0}, {1, 0, 0}, {0, 0, -3}}) == -1);
}

TEST_CASE("unknot, kink and Hopf link values, arbitrary q") { basic_links(arb_field(), 11); }
TEST_CASE("unknot, kink and Hopf link values, exact r=3") { basic_links(ExactField(Mode::rou_odd(3)), 12); }
TEST_CASE("unknot, kink and Hopf link values, exact r=2") { basic_links(ExactField(Mode::rou_even(2)), 13); }

TEST_CASE("Kirby-I invariance, arbitrary q") { kirby_one(arb_field(), 21); }
TEST_CASE("Kirby-I invariance, exact r=3") { kirby_one(ExactField(Mode::rou_odd(3)), 22); }

TEST_CASE("the empty sphere with a V-unknot") {
    const NumericField f = arb_field();
    const StdObject v = StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(0), Parity(0));
    const auto res = cgp(f, unknot(Color::of(v)));
    CHECK(res.surgery_components == 0);
    // D^{-1} d(V) with D = i
    CHECK(close(f, res.value, mdim(f, v) * f.inv(f.imag_unit())));
}

TEST_CASE("closed graph without a generic projective edge is rejected") {
    const NumericField f = arb_field();
    const Color E = Color::of(StdObject::eps(0, WeightComponent(0), Parity(0)));
    CHECK_THROWS_AS(cgp(f, unknot(E)), ValidationError);
}
