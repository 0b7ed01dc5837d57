#pragma once

// Self-checks of every module, shared by the acceptance binary and the
// `check` command. Each check runs on one field and returns the worst
// relative residual against its pinned tolerance; exact fields compare with
// tolerance zero.

#include "gl11/gl11.hpp"
#include "gl11/sampling.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace gl11 {

namespace tolerance {
inline constexpr double modules = 1e-9;
inline constexpr double ribbon = 1e-9;
inline constexpr double scalars = 1e-10;
inline constexpr double phi = 1e-9;
inline constexpr double modularity = 1e-8;
inline constexpr double cgp = 1e-9;
inline constexpr double verlinde = 1e-8;
inline constexpr double mcg_arbitrary = 1e-12;
inline constexpr double mcg_pairing = 1e-8;
inline constexpr double skein = 1e-10;
}  // namespace tolerance

struct CheckItem {
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool passed = true;
    std::vector<std::string> notes;
};

// Collects sub-checks of one item.
class CheckAccumulator {
public:
    CheckAccumulator(std::string name, double tol, bool exact, double tol_override = 0)
        : tol_(exact ? 0.0 : (tol_override > 0 ? tol_override : tol)) {
        item_.name = std::move(name);
        item_.tolerance = tol_;
    }

    double tol() const { return tol_; }

    void residual(const std::string& what, double r) {
        item_.residual = std::max(item_.residual, r);
        if (!(r <= tol_)) fail(what + ": residual " + format(r));
    }
    void expect(const std::string& what, bool ok) {
        if (!ok) fail(what);
    }
    void note(const std::string& text) { item_.notes.push_back(text); }
    void fail(const std::string& text) {
        item_.passed = false;
        item_.notes.push_back("FAILED " + text);
    }

    CheckItem done() const { return item_; }

    static std::string format(double x) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3g", x);
        return buf;
    }

private:
    double tol_;
    CheckItem item_;
};

namespace detail {

template <class S>
double rel(const S& a, const S& b) {
    const double x = std::abs(to_complex(a)), y = std::abs(to_complex(b));
    return std::abs(to_complex(a - b)) / std::max({1.0, x, y});
}

template <class S>
double rel(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return 1e300;
    return residual(a, b) / std::max({1.0, a.max_abs(), b.max_abs()});
}

template <class F>
std::string field_label(const F& f) {
    return f.mode().describe() + (F::exact ? " (exact)" : " (numeric)");
}

}  // namespace detail

// Module axioms on every kind of standard object and on random binary and
// ternary tensor products.
template <class F>
CheckItem check_modules(const F& f, unsigned seed = 1, int products = 50, double tol_override = 0) {
    CheckAccumulator acc("module axioms, " + detail::field_label(f), tolerance::modules, F::exact, tol_override);
    Sampler s(f.mode(), F::exact, seed);
    auto run = [&](const std::string& label, const WeightModule<typename F::Scalar>& M) {
        const ModuleReport rep = check_module(f, M);
        double worst = 0;
        for (const auto& [name, r] : rep.residuals) worst = std::max(worst, r);
        acc.residual(label, worst);
        acc.expect(label + " satisfies the relations", rep.ok);
    };
    std::vector<StdObject> objects;
    for (int k = 0; k < 3; ++k) {
        objects.push_back(StdObject::eps(s.integer(-2, 2), s.g(), s.parity()));
        objects.push_back(s.generic_kac());
        objects.push_back(StdObject::anti_kac(s.generic_e(), s.g(), s.parity()));
        objects.push_back(StdObject::kac(WeightComponent(Q(0), Q(s.integer(-2, 2))), s.g(), s.parity()));
        objects.push_back(StdObject::proj(s.integer(-2, 2), s.g(), s.parity()));
    }
    for (const auto& o : objects) {
        run(to_string(o), make_std(f, o));
        run("dual of " + to_string(o), dual(f, make_std(f, o)));
    }
    for (int k = 0; k < products; ++k) {
        auto M = tensor(f, make_std(f, s.any_std()), make_std(f, s.any_std()));
        if (k % 2 == 1) M = tensor(f, M, make_std(f, s.any_std()));
        run("tensor product " + std::to_string(k), M);
    }
    acc.note(std::to_string(2 * objects.size()) + " standard objects and duals, " + std::to_string(products) +
             " tensor products");
    return acc.done();
}

// Yang-Baxter, hexagons, snakes, pivotality and twist compatibility.
template <class F>
CheckItem check_ribbon(const F& f, unsigned seed = 2, int triples = 20, double tol_override = 0) {
    using S = typename F::Scalar;
    CheckAccumulator acc("ribbon axioms, " + detail::field_label(f), tolerance::ribbon, F::exact, tol_override);
    Sampler s(f.mode(), F::exact, seed);
    auto id = [](std::size_t n) { return Mat<S>::identity(n); };
    for (int k = 0; k < triples; ++k) {
        const auto U = make_std(f, s.any_std());
        const auto V = make_std(f, s.any_std());
        const auto W = make_std(f, s.any_std());
        const std::size_t u = U.dim(), v = V.dim(), w = W.dim();
        acc.residual("Yang-Baxter",
                     detail::rel(kron(braiding(f, V, W), id(u)) * kron(id(v), braiding(f, U, W)) * kron(braiding(f, U, V), id(w)),
                                 kron(id(w), braiding(f, U, V)) * kron(braiding(f, U, W), id(v)) * kron(id(u), braiding(f, V, W))));
        const auto VW = tensor(f, V, W);
        const auto UV = tensor(f, U, V);
        acc.residual("hexagon 1", detail::rel(braiding(f, U, VW), kron(id(v), braiding(f, U, W)) * kron(braiding(f, U, V), id(w))));
        acc.residual("hexagon 2", detail::rel(braiding(f, UV, W), kron(braiding(f, U, W), id(v)) * kron(id(u), braiding(f, V, W))));
        acc.residual("snake left 1", detail::rel(kron(id(u), ev_left(U)) * kron(coev_left(U), id(u)), id(u)));
        acc.residual("snake left 2", detail::rel(kron(ev_left(U), id(u)) * kron(id(u), coev_left(U)), id(u)));
        acc.residual("snake right 1", detail::rel(kron(ev_right(U), id(u)) * kron(id(u), coev_right(U)), id(u)));
        acc.residual("snake right 2", detail::rel(kron(id(u), ev_right(U)) * kron(coev_right(U), id(u)), id(u)));
        acc.residual("twist on a product",
                     detail::rel(twist(f, UV), braiding(f, V, U) * braiding(f, U, V) * kron(twist(f, U), twist(f, V))));
        acc.residual("twist on a dual", detail::rel(twist(f, dual(f, U)), dual_morphism(twist(f, U))));
        for (const auto& g : hom_basis(f, U, U)) {
            const Mat<S> left = kron(ev_left(U), id(u)) * kron(kron(id(u), g), id(u)) * kron(id(u), coev_left(U));
            const Mat<S> right = kron(id(u), ev_right(U)) * kron(kron(id(u), g), id(u)) * kron(coev_right(U), id(u));
            acc.residual("pivotality", detail::rel(left, right));
        }
    }
    acc.note(std::to_string(triples) + " random triples");
    return acc.done();
}

// Quantum dimensions, modified dimensions, the trace of the nilpotent
// endomorphism of P and the twist of Kac modules.
template <class F>
CheckItem check_scalars(const F& f, unsigned seed = 3, int draws = 10, double tol_override = 0) {
    using S = typename F::Scalar;
    CheckAccumulator acc("scalar table, " + detail::field_label(f), tolerance::scalars, F::exact, tol_override);
    Sampler s(f.mode(), F::exact, seed);
    for (int k = 0; k < draws; ++k) {
        const long n = s.integer(-3, 3);
        const Parity p = s.parity();
        const auto E = make_std(f, StdObject::eps(n, s.g(), p));
        acc.residual("qdim eps", detail::rel(qdim(E), f.from_int((p.v + n) % 2 == 0 ? 1 : -1)));
        const StdObject v = StdObject::kac(s.generic_e(), s.g(), s.parity());
        const auto V = make_std(f, v);
        acc.residual("qdim V", detail::rel(qdim(V), S(0)));
        const S br = f.qpow(v.alpha) - f.qpow(-v.alpha);
        const S d_expected = S(v.p.sign()) * f.inv(br);
        acc.residual("d(V)", detail::rel(mtrace(f, Mat<S>::identity(2), V), d_expected));
        // The same value through the projective cover: coev ev on V (x) V* is
        // (q - q^{-1}) d(V) times the nilpotent x of P.
        acc.residual("d(V) through P", detail::rel(mtrace(f, coev_left(V) * ev_right(V), tensor(f, V, dual(f, V))),
                                                    d_expected));
        const StdObject pobj = StdObject::proj(s.integer(-2, 2), s.g(), s.parity());
        const auto P = make_std(f, pobj);
        acc.residual("d(P)", detail::rel(mtrace(f, Mat<S>::identity(4), P), S(0)));
        acc.residual("t_P(x)", detail::rel(mtrace(f, proj_nilpotent<S>(), P), S(pobj.p.sign()) * f.inv(f.qdiff())));
        const S theta = f.qpow(Exponent(v.alpha) - Q(2) * (v.alpha * v.a));
        acc.residual("twist of V", detail::rel(twist(f, V), Mat<S>::scalar(theta, 2)));
    }
    acc.note(std::to_string(draws) + " random weights");
    return acc.done();
}

// The double braidings of Kac and projective modules.
template <class F>
CheckItem check_phi(const F& f, unsigned seed = 4, int draws = 10, double tol_override = 0) {
    using S = typename F::Scalar;
    CheckAccumulator acc("double braiding formulas, " + detail::field_label(f), tolerance::phi, F::exact, tol_override);
    Sampler s(f.mode(), F::exact, seed);
    const Mode& mode = f.mode();
    auto br = [&](const WeightComponent& z) { return f.qpow(z) - f.qpow(-z); };
    for (int t = 0; t < draws; ++t) {
        const StdObject va = s.generic_kac(), vb = s.generic_kac();
        const auto& al = va.alpha;
        const auto& a = va.a;
        const auto& be = vb.alpha;
        const auto& b = vb.a;
        const auto Va = make_std(f, va);
        const S c1 = S(-vb.p.sign()) * f.qpow(-Q(2) * (al * b + a * be)) * f.qpow(al + be) * br(al);
        acc.residual("Kac loop on Kac", detail::rel(phi_op(f, vb, Va), Mat<S>::scalar(c1, 2)));
        const long n = s.integer(-2, 2);
        const WeightComponent nu = mode.canon(WeightComponent(Q(0), Q(n)));
        const S c2 = S(-vb.p.sign()) * f.qpow(nu) * f.qpow(-Q(2) * (al * b + a * nu)) * br(al) * br(al);
        acc.residual("projective loop on Kac", detail::rel(phi_op(f, StdObject::proj(n, b, vb.p), Va), Mat<S>::scalar(c2, 2)));
        const auto Pa = make_std(f, StdObject::proj(n, a, va.p));
        const S c3 = S(-vb.p.sign()) * f.qpow(nu) * f.qpow(-Q(2) * (a * be + b * nu)) * f.qdiff() * br(be);
        acc.residual("Kac loop on projective", detail::rel(phi_op(f, vb, Pa), c3 * proj_nilpotent<S>()));
    }
    acc.note(std::to_string(draws) + " parameter draws");
    return acc.done();
}

// Stabilization coefficients, zeta and the handle-slide identity on all
// pairs of Kirby-color terms.
template <class F>
CheckItem check_modularity(const F& f, double tol_override = 0) {
    CheckAccumulator acc("relative modularity, " + detail::field_label(f), tolerance::modularity, F::exact, tol_override);
    const long r = f.mode().is_rou() ? f.mode().r() : 1;
    const auto st = stabilization_coeffs(f);
    const auto nz = normalization(f);
    acc.residual("Delta_+ = r", detail::rel(st.plus, f.from_int(r)));
    acc.residual("Delta_- = -r", detail::rel(st.minus, f.from_int(-r)));
    acc.residual("Delta_+ Delta_- = zeta", detail::rel(st.plus * st.minus, nz.zeta));
    acc.residual("zeta = -r^2", detail::rel(nz.zeta, f.from_int(-r * r)));
    const Degree g = reference_degree(f.mode());
    WeightComponent he(Q(2, 5));
    if (f.mode().kind() == ModeKind::RouOdd) he = WeightComponent(Q(3, 4));
    if (f.mode().kind() == ModeKind::RouEven) he = WeightComponent(Q(3, 2));
    const Degree h{he, WeightComponent(0)};
    const std::size_t n = kirby_color(f, g).terms.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto res = relative_modularity_check(f, g, h, i, j);
            acc.residual("handle slide", res.residual);
        }
    acc.note("Delta_+ = " + f.format(st.plus) + ", Delta_- = " + f.format(st.minus) + ", zeta = " + f.format(nz.zeta));
    return acc.done();
}

// Kirby-I invariance of the closed invariant.
template <class F>
CheckItem check_kirby(const F& f, unsigned seed = 6, double tol_override = 0) {
    CheckAccumulator acc("Kirby-I invariance, " + detail::field_label(f), tolerance::cgp, F::exact, tol_override);
    Sampler s(f.mode(), F::exact, seed);
    for (long framing : {0L, 1L, -1L, 2L}) {
        const StdObject v = s.generic_kac();
        const auto [plain, blown] = kirby_one_pair(v, framing);
        acc.residual("framing " + std::to_string(framing), detail::rel(cgp(f, plain).value, cgp(f, blown).value));
    }
    return acc.done();
}

// Torus pairing table against the duality pattern and the closed-form
// mapping class group against the pairing-derived one.
template <class F>
CheckItem check_torus_pairings(const F& f, double tol_override = 0) {
    CheckAccumulator acc("torus pairings, " + detail::field_label(f), tolerance::cgp, F::exact, tol_override);
    const auto rep = torus_pairing_check(f);
    acc.residual("pairing table", rep.max_deviation);
    acc.note(std::to_string(rep.pairings) + " pairings");
    return acc.done();
}

// Verlinde: surgery against the closed form, and the closed form against the
// graded dimensions.
template <class F>
CheckItem check_verlinde(const F& f, int max_genus, int max_points, int betas, unsigned seed = 7, double tol_override = 0) {
    CheckAccumulator acc("Verlinde formula, " + detail::field_label(f), tolerance::verlinde, F::exact, tol_override);
    Sampler s(f.mode(), F::exact, seed);
    int count = 0;
    for (int g = 1; g <= max_genus; ++g)
        for (int n = 0; n <= max_points; ++n)
            for (int k = 0; k < betas; ++k) {
                SurfaceData surf;
                surf.genus = g;
                for (int j = 0; j < n; ++j) surf.points.push_back({s.generic_kac(), s.integer(0, 1) == 0 ? 1 : -1});
                const Degree beta{s.generic_e(), WeightComponent(0)};
                acc.residual("surgery g=" + std::to_string(g) + " n=" + std::to_string(n),
                             detail::rel(verlinde_surgery(f, surf, beta).value, verlinde_closed(f, surf, beta)));
                ++count;
            }
    for (int g = 1; g <= std::max(max_genus, 3); ++g) {
        const Degree beta = F::exact ? reference_degree(f.mode()) : Degree{s.generic_e(), WeightComponent(0)};
        acc.residual("identity g=" + std::to_string(g), verlinde_identity_check(f, g, beta));
    }
    acc.note(std::to_string(count) + " surgery comparisons");
    return acc.done();
}

// Graded dimensions against the binomial closed forms, exact integers.
inline CheckItem check_dims(const Mode& mode, int max_genus) {
    CheckAccumulator acc("graded dimensions, " + mode.describe(), 0.0, true);
    for (int g = 1; g <= max_genus; ++g) {
        const auto dims = graded_dims(mode, g);
        const auto formula = graded_dims_formula(mode, g);
        long total = 0, expected = 0;
        for (const auto& [d, c] : dims) total += c;
        for (const auto& [d, c] : formula) expected += c;
        acc.expect("degrees g=" + std::to_string(g), dims == formula);
        acc.expect("total g=" + std::to_string(g), total == expected);
        if (!mode.is_rou()) acc.expect("total 2^(2g-2) g=" + std::to_string(g), total == (1L << (2 * g - 2)));
        acc.note("g=" + std::to_string(g) + ": " + std::to_string(total));
    }
    return acc.done();
}

// Torus mapping class group: relations, the fundamental representation at
// arbitrary q, agreement with the pairings and linear growth of N_T^k.
template <class F>
CheckItem check_mcg(const F& f, double tol_override = 0) {
    using S = typename F::Scalar;
    const bool rou = f.mode().is_rou();
    CheckAccumulator acc("torus mapping class group, " + detail::field_label(f),
                         rou ? tolerance::mcg_pairing : tolerance::mcg_arbitrary, F::exact, tol_override);
    const auto m = torus_mcg(f);
    const std::size_t N = m.T.rows();
    const S i = f.imag_unit();
    const Mat<S> st = m.S_ * m.T;
    acc.residual("(ST)^3 = -i", detail::rel(st * st * st, Mat<S>::scalar(S(-1) * i, N)));
    const auto rep = torus_pairing_check(f);
    acc.residual("S from pairings", rep.mcg_s_residual);
    acc.residual("T from pairings", rep.mcg_t_residual);
    if (!rou) {
        acc.residual("S^2 = Id", detail::rel(m.S_ * m.S_, Mat<S>::identity(2)));
        Mat<S> A = Mat<S>::identity(2), Ainv = Mat<S>::identity(2);
        A(1, 1) = f.qdiff();
        Ainv(1, 1) = f.inv(f.qdiff());
        Mat<S> s_fund(2, 2), t_fund = Mat<S>::identity(2);
        s_fund(0, 1) = S(-1);
        s_fund(1, 0) = S(1);
        t_fund(0, 1) = S(1);
        acc.residual("A (iS) A^-1", detail::rel(A * (i * m.S_) * Ainv, s_fund));
        acc.residual("A T A^-1", detail::rel(A * m.T * Ainv, t_fund));
    } else {
        // S^2 is a signed permutation (charge conjugation).
        const Mat<S> s2 = m.S_ * m.S_;
        const Mat<S> s4 = s2 * s2;
        acc.residual("S^4 = Id", detail::rel(s4, Mat<S>::identity(N)));
        const int r = f.mode().r();
        const std::size_t PX = N - 1;
        Mat<S> tk = Mat<S>::identity(N);
        for (int k = 1; k <= 5; ++k) {
            tk = m.T * tk;
            for (int j = 0; j < r; ++j) {
                const std::size_t Pj = static_cast<std::size_t>(r * (r - 1) + j);
                Mat<S> col(N, 1), expected(N, 1);
                for (std::size_t row = 0; row < N; ++row) col(row, 0) = tk(row, Pj);
                expected(Pj, 0) = S(1);
                expected(PX, 0) = f.from_int(k) * f.qdiff() * f.inv(f.from_int(r));
                acc.residual("N_T^" + std::to_string(k) + " P_" + std::to_string(j), detail::rel(col, expected));
            }
        }
    }
    return acc.done();
}

// Skein relation of the braiding and the renormalized invariant of knots
// against the Conway-polynomial oracle.
template <class F>
CheckItem check_alexander(const F& f, unsigned seed = 10, int draws = 10, double tol_override = 0) {
    CheckAccumulator acc("skein relation and Alexander invariant, " + detail::field_label(f), tolerance::skein, F::exact,
                         tol_override);
    Sampler s(f.mode(), F::exact, seed);
    for (int k = 0; k < draws; ++k) acc.residual("skein", skein_check(f, s.generic_e(), s.g()));
    const StdObject v = StdObject::kac(s.generic_e(), s.g(), Parity(0));
    const Color V = Color::of(v);
    const auto z = conway_variable(f, v.alpha);
    const std::pair<const char*, MorseWord> knots[] = {{"trefoil", trefoil(V)}, {"figure-eight", figure_eight(V)}};
    for (const auto& [name, w] : knots) {
        const auto conway = conway_polynomial(w);
        acc.residual(name, detail::rel(alexander(f, w), mdim(f, v) * eval_poly(f, conway, z)));
        acc.note(std::string(name) + ": Conway " + format_conway(conway) + ", Alexander " +
                 format_alexander(alexander_polynomial(conway)));
    }
    return acc.done();
}

}  // namespace gl11
