#include "support.hpp"

#include <doctest.h>

using namespace gl11;
using namespace gl11::testing;

namespace {

template <class F>
bool isomorphic(const F& f, const WeightModule<typename F::Scalar>& M, const WeightModule<typename F::Scalar>& N) {
    if (M.dim() != N.dim()) return false;
    auto homs = hom_basis(f, M, N);
    // A generic combination of the Hom basis is invertible iff an isomorphism exists.
    Mat<typename F::Scalar> T(N.dim(), M.dim());
    long c = 1;
    for (const auto& h : homs) T += f.from_int(c++) * h;
    return rank(T, tol_of(f) * 1e-2) == M.dim();
}

template <class F>
std::vector<std::string> summand_names(const std::vector<Summand<typename F::Scalar>>& parts) {
    std::vector<std::string> names;
    for (const auto& p : parts) names.push_back(to_string(p.obj));
    std::sort(names.begin(), names.end());
    return names;
}

template <class F>
void check_reassembly(const F& f, const WeightModule<typename F::Scalar>& M,
                      const std::vector<Summand<typename F::Scalar>>& parts) {
    using S = typename F::Scalar;
    Mat<S> sum(M.dim(), M.dim());
    for (const auto& p : parts) {
        auto sm = make_std(f, p.obj);
        CHECK(close(f, p.proj * p.incl, Mat<S>::identity(sm.dim())));
        CHECK(intertwining_residual(f, sm, M, p.incl) <= tol_of(f) * 10);
        CHECK(intertwining_residual(f, M, sm, p.proj) <= tol_of(f) * 10);
        sum += p.incl * p.proj;
    }
    CHECK(close(f, sum, Mat<S>::identity(M.dim()), 10));
}

}  // namespace

TEST_CASE("standard modules") {
    auto f = arb_field();
    auto e = make_std(f, StdObject::eps(0, WeightComponent(0), Parity(0)));
    CHECK(e.dim() == 1);
    CHECK(e.X.max_abs() == 0.0);
    auto v = make_std(f, StdObject::kac(WeightComponent(Q(2)), WeightComponent(Q(3)), Parity(1)));
    CHECK(check_module(f, v).ok);
    CHECK(close(f, v.X(0, 1), f.bracket(WeightComponent(Q(2)))));
    auto p = make_std(f, StdObject::proj(0, WeightComponent(0), Parity(0)));
    CHECK(p.Y(3, 1) == std::complex<double>(-1.0));
    CHECK(p.X(3, 2) == std::complex<double>(1.0));
    CHECK(check_module(f, p).ok);

    // Negative control: perturb the Kac action.
    auto bad = v;
    bad.X(0, 1) += 1e-3;
    auto rep = check_module(f, bad);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("object text form round-trips") {
    for (const char* s : {"V(3/2, -1; p=0)", "P(n=2, b=0; p=1)", "eps(n=0, b=5; p=0)", "Vbar(1/2, 1/2+u; p=1)"}) {
        auto o = parse_std_object(s);
        CHECK(to_string(o) == s);
    }
    CHECK(parse_std_object("eps(n=0,b=5;p=0)") == StdObject::eps(0, WeightComponent(5), Parity(0)));
    CHECK_THROWS_AS(parse_std_object("W(1,2)"), ValidationError);
    CHECK_THROWS_AS(parse_std_object("P(n=1/2, b=0; p=0)"), ValidationError);
}

template <class F>
void module_axioms_sweep(const F& f, unsigned seed) {
    Sampler s(f.mode(), F::exact, seed);
    for (int k = 0; k < 20; ++k) {
        auto M = make_std(f, s.any_std());
        CHECK(check_module(f, M).ok);
        CHECK(check_module(f, dual(f, M)).ok);
    }
    for (int k = 0; k < 25; ++k) {
        auto A = make_std(f, s.any_std());
        auto B = make_std(f, s.any_std());
        auto T = tensor(f, A, B);
        CHECK(check_module(f, T).ok);
        auto C = make_std(f, s.any_std());
        auto T3 = tensor(f, T, C);
        CHECK(check_module(f, T3).ok);
        // Strict associativity of the chosen basis order.
        auto T3b = tensor(f, A, tensor(f, B, C));
        CHECK(close(f, T3.X, T3b.X));
        CHECK(close(f, T3.Y, T3b.Y));
    }
}

TEST_CASE("module axioms on products and duals") {
    module_axioms_sweep(arb_field(), 1);
    module_axioms_sweep(ExactField(Mode::rou_odd(3)), 2);
    module_axioms_sweep(ExactField(Mode::rou_even(2)), 3);
}

TEST_CASE("tensor products of one-dimensional modules and the unit") {
    auto f = arb_field();
    auto e1 = make_std(f, StdObject::eps(1, WeightComponent(Q(2)), Parity(1)));
    auto e2 = make_std(f, StdObject::eps(-3, WeightComponent(Q(1, 2)), Parity(1)));
    auto e12 = make_std(f, StdObject::eps(-2, WeightComponent(Q(5, 2)), Parity(0)));
    CHECK(isomorphic(f, tensor(f, e1, e2), e12));
    auto unit = make_std(f, StdObject::eps(0, WeightComponent(0), Parity(0)));
    auto V = make_std(f, StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(Q(2)), Parity(1)));
    CHECK(isomorphic(f, tensor(f, unit, V), V));
    CHECK(isomorphic(f, tensor(f, V, unit), V));
}

TEST_CASE("duals") {
    auto f = arb_field();
    auto unit = make_std(f, StdObject::eps(0, WeightComponent(0), Parity(0)));
    CHECK(isomorphic(f, dual(f, unit), unit));
    Sampler s(f.mode(), false, 17);
    for (int k = 0; k < 10; ++k) {
        WeightComponent al = s.generic_e(), a = s.g();
        Parity p = s.parity();
        auto V = make_std(f, StdObject::kac(al, a, p));
        auto Vd = make_std(f, StdObject::kac(-al, -(a - WeightComponent(1)), p + Parity(1)));
        CHECK(isomorphic(f, dual(f, V), Vd));
        // Pivotal identification M -> M** is the diagonal (-1)^{|v|} K.
        auto M = make_std(f, s.any_std());
        auto Mdd = dual(f, dual(f, M));
        Mat<std::complex<double>> phi(M.dim(), M.dim());
        for (std::size_t i = 0; i < M.dim(); ++i) phi(i, i) = double(M.basis[i].p.sign()) * M.K[i];
        CHECK(intertwining_residual(f, M, Mdd, phi) < 1e-9);
    }
}

TEST_CASE("hom spaces") {
    auto f = arb_field();
    auto P = make_std(f, StdObject::proj(0, WeightComponent(Q(1, 2)), Parity(0)));
    auto end = hom_basis(f, P, P);
    CHECK(end.size() == 2);
    auto P1 = make_std(f, StdObject::proj(1, WeightComponent(Q(1, 2)), Parity(0)));
    CHECK(hom_basis(f, P, P1).empty());
    auto V = make_std(f, StdObject::kac(WeightComponent(Q(2, 3)), WeightComponent(Q(1)), Parity(0)));
    CHECK(hom_basis(f, V, V).size() == 1);

    // a^- : P(b)_p -> P(b-1)_{p+1} and a^+ : P(b)_p -> P(b+1)_{p+1}.
    using S = std::complex<double>;
    auto Pb = make_std(f, StdObject::proj(0, WeightComponent(0), Parity(0)));
    auto Pm = make_std(f, StdObject::proj(0, WeightComponent(-1), Parity(1)));
    auto Pp = make_std(f, StdObject::proj(0, WeightComponent(1), Parity(1)));
    CHECK(hom_basis(f, Pb, Pm).size() == 1);
    CHECK(hom_basis(f, Pb, Pp).size() == 1);
    Mat<S> am(4, 4), ap_back(4, 4), ap(4, 4), am_back(4, 4);
    am(1, 0) = -1.0;   // v' -> -v+
    am(3, 2) = 1.0;    // v- -> v
    ap_back(2, 0) = 1.0;  // v' -> v-
    ap_back(3, 1) = 1.0;  // v+ -> v
    CHECK(intertwining_residual(f, Pb, Pm, am) < 1e-12);
    CHECK(intertwining_residual(f, Pm, Pb, ap_back) < 1e-12);
    CHECK(close(f, ap_back * am, -1.0 * proj_nilpotent<S>()));
    ap(2, 0) = 1.0;
    ap(3, 1) = 1.0;
    am_back(1, 0) = -1.0;
    am_back(3, 2) = 1.0;
    CHECK(intertwining_residual(f, Pb, Pp, ap) < 1e-12);
    CHECK(intertwining_residual(f, Pp, Pb, am_back) < 1e-12);
    CHECK(close(f, am_back * ap, proj_nilpotent<S>()));
}

template <class F>
void decomposition_examples(const F& f, Sampler& s) {
    // Generic pair: two Kac summands.
    WeightComponent a1 = s.generic_e(), a2 = s.generic_e();
    while (f.mode().in_lattice(a1 + a2)) a2 = s.generic_e();
    WeightComponent g1 = s.g(), g2 = s.g();
    auto T = tensor(f, make_std(f, StdObject::kac(a1, g1, Parity(0))), make_std(f, StdObject::kac(a2, g2, Parity(1))));
    auto parts = decompose(f, T);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].obj == StdObject::kac(a1 + a2, g1 + g2, Parity(1)).canon(f.mode()));
    CHECK(parts[1].obj == StdObject::kac(a1 + a2, g1 + g2 - WeightComponent(1), Parity(0)).canon(f.mode()));
    check_reassembly(f, T, parts);

    // Lattice sum: a single projective summand.
    auto T2 = tensor(f, make_std(f, StdObject::kac(a1, g1, Parity(1))), make_std(f, StdObject::kac(-a1, g2, Parity(0))));
    auto parts2 = decompose(f, T2);
    REQUIRE(parts2.size() == 1);
    CHECK(parts2[0].obj == StdObject::proj(0, g1 + g2 - WeightComponent(1), Parity(0)).canon(f.mode()));
    check_reassembly(f, T2, parts2);

    // Kac times one-dimensional.
    auto T3 = tensor(f, make_std(f, StdObject::kac(a1, g1, Parity(0))), make_std(f, StdObject::eps(2, g2, Parity(1))));
    auto parts3 = decompose(f, T3);
    REQUIRE(parts3.size() == 1);
    CHECK(parts3[0].obj == StdObject::kac(a1 + WeightComponent(Q(0), Q(2)), g1 + g2, Parity(1)).canon(f.mode()));

    // V(i, j) (x) P(0, k): four Kac summands.
    auto T4 = tensor(f, make_std(f, StdObject::kac(a1, g1, Parity(0))), make_std(f, StdObject::proj(0, g2, Parity(0))));
    auto parts4 = decompose(f, T4);
    CHECK(summand_names<F>(parts4) ==
          summand_names<F>(std::vector<Summand<typename F::Scalar>>{
              {StdObject::kac(a1, g1 + g2 - WeightComponent(1), Parity(1)).canon(f.mode()), {}, {}},
              {StdObject::kac(a1, g1 + g2, Parity(0)).canon(f.mode()), {}, {}},
              {StdObject::kac(a1, g1 + g2, Parity(0)).canon(f.mode()), {}, {}},
              {StdObject::kac(a1, g1 + g2 + WeightComponent(1), Parity(1)).canon(f.mode()), {}, {}}}));
    check_reassembly(f, T4, parts4);

    // Non-generic mixtures: everything decomposes and reassembles.
    for (int k = 0; k < 8; ++k) {
        auto A = make_std(f, s.any_std());
        auto B = make_std(f, s.any_std());
        auto M = tensor(f, A, B);
        check_reassembly(f, M, decompose(f, M));
    }
}

TEST_CASE("decompositions") {
    {
        auto f = arb_field();
        Sampler s(f.mode(), false, 23);
        for (int k = 0; k < 3; ++k) decomposition_examples(f, s);
    }
    {
        ExactField f(Mode::rou_odd(3));
        Sampler s(f.mode(), true, 29);
        decomposition_examples(f, s);
    }
    {
        ExactField f(Mode::rou_even(4));
        Sampler s(f.mode(), true, 31);
        decomposition_examples(f, s);
    }
}
