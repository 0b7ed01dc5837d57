#include "support.hpp"

#include <doctest.h>

using namespace gl11;
using namespace gl11::testing;

namespace {

template <class S>
Mat<S> id(std::size_t n) {
    return Mat<S>::identity(n);
}

template <class F>
void ribbon_axioms(const F& f, unsigned seed, int triples) {
    using S = typename F::Scalar;
    Sampler s(f.mode(), F::exact, seed);
    for (int k = 0; k < triples; ++k) {
        auto U = make_std(f, s.any_std());
        auto V = make_std(f, s.any_std());
        auto W = make_std(f, s.any_std());
        const std::size_t u = U.dim(), v = V.dim(), w = W.dim();
        // Yang-Baxter on U (x) V (x) W.
        Mat<S> lhs = kron(braiding(f, V, W), id<S>(u)) * kron(id<S>(v), braiding(f, U, W)) *
                     kron(braiding(f, U, V), id<S>(w));
        Mat<S> rhs = kron(id<S>(w), braiding(f, U, V)) * kron(braiding(f, U, W), id<S>(v)) *
                     kron(id<S>(u), braiding(f, V, W));
        CHECK(close(f, lhs, rhs, 10));
        // Hexagons.
        auto VW = tensor(f, V, W);
        CHECK(close(f, braiding(f, U, VW), kron(id<S>(v), braiding(f, U, W)) * kron(braiding(f, U, V), id<S>(w)), 10));
        auto UV = tensor(f, U, V);
        CHECK(close(f, braiding(f, UV, W), kron(braiding(f, U, W), id<S>(v)) * kron(id<S>(u), braiding(f, V, W)), 10));
        // Braiding is an intertwiner.
        CHECK(intertwining_residual(f, UV, tensor(f, V, U), braiding(f, U, V)) <= tol_of(f) * 10);
        // Snakes.
        auto Ud = dual(f, U);
        CHECK(close(f, kron(id<S>(u), ev_left(U)) * kron(coev_left(U), id<S>(u)), id<S>(u)));
        CHECK(close(f, kron(ev_left(U), id<S>(u)) * kron(id<S>(u), coev_left(U)), id<S>(u)));
        CHECK(close(f, kron(ev_right(U), id<S>(u)) * kron(id<S>(u), coev_right(U)), id<S>(u)));
        CHECK(close(f, kron(id<S>(u), ev_right(U)) * kron(coev_right(U), id<S>(u)), id<S>(u)));
        // The four structure maps are intertwiners.
        auto unit = make_std(f, StdObject::eps(0, WeightComponent(0), Parity(0)));
        CHECK(intertwining_residual(f, tensor(f, Ud, U), unit, ev_left(U)) <= tol_of(f) * 10);
        CHECK(intertwining_residual(f, unit, tensor(f, U, Ud), coev_left(U)) <= tol_of(f) * 10);
        CHECK(intertwining_residual(f, tensor(f, U, Ud), unit, ev_right(U)) <= tol_of(f) * 10);
        CHECK(intertwining_residual(f, unit, tensor(f, Ud, U), coev_right(U)) <= tol_of(f) * 10);
        // Ribbon compatibility.
        Mat<S> tU = twist(f, U), tV = twist(f, V);
        Mat<S> tUV = twist(f, UV);
        CHECK(close(f, tUV, braiding(f, V, U) * braiding(f, U, V) * kron(tU, tV), 10));
        CHECK(close(f, twist(f, Ud), dual_morphism(tU), 10));
        // Pivotality: the left and right duals of a morphism agree.
        auto homs = hom_basis(f, U, U);
        for (const auto& g : homs) {
            Mat<S> left = kron(ev_left(U), id<S>(u)) * kron(kron(id<S>(u), g), id<S>(u)) * kron(id<S>(u), coev_left(U));
            Mat<S> right =
                kron(id<S>(u), ev_right(U)) * kron(kron(id<S>(u), g), id<S>(u)) * kron(coev_right(U), id<S>(u));
            CHECK(close(f, left, right, 10));
            CHECK(close(f, left, dual_morphism(g), 10));
        }
        // Naturality against random intertwiners.
        for (const auto& g : hom_basis(f, U, U))
            for (const auto& h : hom_basis(f, V, V))
                CHECK(close(f, kron(h, g) * braiding(f, U, V), braiding(f, U, V) * kron(g, h), 10));
    }
}

}  // namespace

TEST_CASE("ribbon axioms: arbitrary q") { ribbon_axioms(arb_field(), 41, 20); }
TEST_CASE("ribbon axioms: exact odd root of unity") { ribbon_axioms(ExactField(Mode::rou_odd(3)), 43, 12); }
TEST_CASE("ribbon axioms: exact even root of unity") { ribbon_axioms(ExactField(Mode::rou_even(2)), 47, 12); }

TEST_CASE("braiding on V (x) V against the closed-form matrix") {
    auto f = arb_field();
    using S = std::complex<double>;
    Sampler s(f.mode(), false, 3);
    for (int k = 0; k < 10; ++k) {
        WeightComponent al = s.generic_e(), a = s.g();
        auto V = make_std(f, StdObject::kac(al, a, Parity(0)));
        Mat<S> c = braiding(f, V, V);
        S base = f.qpow(-Q(2) * (al * a));
        S qa = f.qpow(al);
        Mat<S> expect(4, 4);
        expect(0, 0) = base;
        expect(1, 2) = base * qa;
        expect(2, 1) = base * qa;
        // The correction term carries the Koszul sign of the odd vector v'.
        expect(2, 2) = -base * qa * (qa - 1.0 / qa);
        expect(3, 3) = -base * qa * qa;
        CHECK(close(f, c, expect, 10));
        Mat<S> ci = braiding_inv(f, V, V);
        CHECK(close(f, c * ci, Mat<S>::identity(4), 10));
    }
}

template <class F>
void scalar_structure(const F& f, Sampler& s) {
    using S = typename F::Scalar;
    for (int k = 0; k < 10; ++k) {
        long n = s.integer(-3, 3);
        WeightComponent b = s.g(), al = s.generic_e(), a = s.g();
        Parity p = s.parity();
        auto E = make_std(f, StdObject::eps(n, b, p));
        CHECK(close(f, qdim(E), f.from_int(((p.v + n) % 2 == 0) ? 1 : -1)));
        auto V = make_std(f, StdObject::kac(al, a, p));
        CHECK(close(f, qdim(V), f.from_int(0)));
        CHECK(close(f, twist(f, V), Mat<S>::scalar(f.qpow(-Q(2) * (al * a)) * f.qpow(al), 2)));
        auto E0 = make_std(f, StdObject::eps(0, b, p));
        CHECK(close(f, twist(f, E0), Mat<S>::identity(1)));
        // Double braiding with eps(0, b) is q^{-2 alpha b}.
        Mat<S> dbl = braiding(f, V, E0) * braiding(f, E0, V);
        CHECK(close(f, dbl, Mat<S>::scalar(f.qpow(-Q(2) * (al * b)), 2)));
        auto W = make_std(f, s.any_std());
        CHECK(close(f, qdim(tensor(f, V, W)), qdim(V) * qdim(W)));
        CHECK(close(f, qdim(tensor(f, E, W)), qdim(E) * qdim(W)));
        CHECK(close(f, ptrace_right(Mat<S>::identity(V.dim() * W.dim()), V, W), Mat<S>::scalar(qdim(W), V.dim())));
        // Braiding with the unit is the identity.
        auto unit = make_std(f, StdObject::eps(0, WeightComponent(0), Parity(0)));
        CHECK(close(f, braiding(f, unit, W), Mat<S>::identity(W.dim())));
    }
    auto P = make_std(f, StdObject::proj(0, WeightComponent(0), Parity(0)));
    CHECK(close(f, twist(f, P), Mat<S>::identity(4) + f.qdiff() * proj_nilpotent<S>()));
}

TEST_CASE("qdim, twist and partial traces") {
    {
        auto f = arb_field();
        Sampler s(f.mode(), false, 7);
        scalar_structure(f, s);
    }
    {
        ExactField f(Mode::rou_odd(5));
        Sampler s(f.mode(), true, 9);
        scalar_structure(f, s);
    }
}
