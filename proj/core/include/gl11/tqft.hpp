#pragma once

#include "gl11/diagrams.hpp"

#include <map>
#include <string>
#include <vector>

namespace gl11 {

// ---------------------------------------------------------------------------
// Surfaces and Verlinde formulas

// A closed connected surface of genus g with marked points; alphas and betas
// are the values of the cohomology class on a symplectic basis a_i, b_i.
struct SurfaceData {
    int genus = 0;
    std::vector<MarkedPoint> points;
    std::vector<Degree> alphas;
    std::vector<Degree> betas;
};

// Fills missing alphas/betas with the reference degree of the mode and
// checks that marked points are Kac modules.
SurfaceData normalize_surface(const Mode& mode, const SurfaceData& s);

// Color of a marked point as a positively oriented Kac module: a point of
// sign -1 colored V(mu, m)_p is equivalent to one of sign +1 colored by the
// dual, V(-mu, 1 - m)_{p + 1}.
StdObject positive_color(const MarkedPoint& p);

namespace detail {

template <class F>
typename F::Scalar ipow(const F& f, typename F::Scalar x, long e) {
    using S = typename F::Scalar;
    if (e < 0) {
        x = f.inv(x);
        e = -e;
    }
    S out(1);
    for (long k = 0; k < e; ++k) out = out * x;
    return out;
}

template <class F>
double abs_diff(const typename F::Scalar& a, const typename F::Scalar& b) {
    return std::abs(to_complex(a - b));
}

}  // namespace detail

// Closed form of the invariant of (surface) x S^1 with the fiber class beta:
//   (-1)^{g-1+n+p} sum over the lift terms of
//   q^{beta'(n - 2m) - 2 b' mu + mu} (q^{beta'} - q^{-beta'})^{2g-2+n},
// where mu, m, p are the summed weights and parities of the marked points.
// Arbitrary q has the single term (beta', b') = (beta, 0); roots of unity sum
// over (beta_0 + i, b_0 + j), i, j < r, with an extra factor r^{2g-2}.
template <class F>
typename F::Scalar verlinde_closed(const F& f, const SurfaceData& s0, const Degree& beta) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    const SurfaceData s = normalize_surface(mode, s0);
    if (!mode.is_generic(beta)) throw ValidationError("verlinde_closed: fiber degree lies in the small set X");
    const long n = static_cast<long>(s.points.size());
    WeightComponent mu(0), m(0);
    int parity = 0;
    for (const auto& p : s.points) {
        const StdObject c = positive_color(p);
        mu = mu + c.alpha;
        m = m + c.a;
        parity += c.p.sign() < 0 ? 1 : 0;
    }
    const KirbyLift lift = default_lift(mode, beta);
    const int R = mode.is_rou() ? mode.r() : 1;
    S total(0);
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < R; ++j) {
            const WeightComponent bp = lift.alpha0 + WeightComponent(i);
            const WeightComponent bb = mode.is_rou() ? lift.a0 + WeightComponent(j) : WeightComponent(0);
            const S br = f.qpow(bp) - f.qpow(-bp);
            const Exponent ex = Exponent(Q(n) * bp) - Exponent(Q(2) * (bp * m)) - Exponent(Q(2) * (bb * mu)) + Exponent(mu);
            total += f.qpow(ex) * detail::ipow(f, br, 2L * s.genus - 2 + n);
        }
    const long sign_exp = s.genus - 1 + n + parity;
    S out = (sign_exp % 2 == 0 ? S(1) : S(-1)) * total;
    if (mode.is_rou()) out = out * detail::ipow(f, f.from_int(R), 2L * s.genus - 2);
    return out;
}

// The same invariant computed from the surgery presentation.
template <class F>
CgpResult<typename F::Scalar> verlinde_surgery(const F& f, const SurfaceData& s0, const Degree& beta) {
    const SurfaceData s = normalize_surface(f.mode(), s0);
    return cgp(f, verlinde_link(s.genus, s.alphas, s.betas, beta, s.points));
}

// Graded dimensions of the state space of a genus g surface with generic
// cohomology class and no marked points: degree d -> number of basis
// colorings. Arbitrary q: d in [-(g-1), g-1]. Roots of unity: d in rZ, each
// coloring carrying r^{2g} lift offsets.
std::map<long, long> graded_dims(const Mode& mode, int g);

// Binomial closed forms of the same counts.
std::map<long, long> graded_dims_formula(const Mode& mode, int g);

long binomial(long n, long k);

// Residual of the Verlinde identity: the closed invariant against
// sum_d (-1)^d dim_d q^{-2 beta d}. At roots of unity d = n' r and the
// character is q^{-2 r beta n'}.
template <class F>
double verlinde_identity_check(const F& f, int g, const Degree& beta) {
    using S = typename F::Scalar;
    SurfaceData s;
    s.genus = g;
    const S closed = verlinde_closed(f, s, beta);
    S sum(0);
    const WeightComponent b0 = default_lift(f.mode(), beta).alpha0;
    for (const auto& [d, count] : graded_dims(f.mode(), g)) {
        const S sign = (d % 2 == 0) ? S(1) : S(-1);
        sum += sign * f.from_int(count) * f.qpow(Q(-2 * d) * b0);
    }
    const double scale = std::max(1.0, std::abs(to_complex(closed)));
    return detail::abs_diff<F>(closed, sum) / scale;
}

// ---------------------------------------------------------------------------
// Torus with non-generic cohomology class

// A vector of the torus state space: the solid torus whose core is colored
// by a sum of standard objects, optionally with the nilpotent coupon x.
template <class S>
struct CoreVector {
    struct Term {
        S coef;
        StdObject obj;
        bool x = false;
    };
    std::vector<Term> terms;
    std::string label;
};

// A functional on the state space: a copy of the solid torus, glued with or
// without the S-twist, whose core is colored by an optional object.
template <class S>
struct CoreFunctional {
    struct Term {
        S coef;
        std::optional<StdObject> obj;
        bool twisted = false;  // glued through S
    };
    std::vector<Term> terms;
    std::string label;
};

// Basis and dual basis of the torus state space: {P_x, P} for arbitrary q,
// {M_{i,j}, P_j, P_x} for roots of unity.
template <class F>
std::vector<CoreVector<typename F::Scalar>> torus_basis(const F& f) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    std::vector<CoreVector<S>> out;
    auto proj = [&](long j) { return StdObject::proj(0, WeightComponent(Q(j)), Parity(0)); };
    if (!mode.is_rou()) {
        out.push_back({{{S(1), proj(0), true}}, "P_x"});
        out.push_back({{{S(1), proj(0), false}}, "P"});
        return out;
    }
    const int r = mode.r();
    for (int i = 1; i < r; ++i)
        for (int j = 0; j < r; ++j)
            out.push_back({{{S(1), StdObject::kac(WeightComponent(Q(i)), WeightComponent(Q(j)), Parity(0)), false}},
                           "M_" + std::to_string(i) + "," + std::to_string(j)});
    for (int j = 0; j < r; ++j) out.push_back({{{S(1), proj(j), false}}, "P_" + std::to_string(j)});
    CoreVector<S> px;
    px.label = "P_x";
    for (int j = 0; j < r; ++j) px.terms.push_back({S(1), proj(j), true});
    out.push_back(px);
    return out;
}

template <class F>
std::vector<CoreFunctional<typename F::Scalar>> torus_dual_basis(const F& f) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    std::vector<CoreFunctional<S>> out;
    const S iq = f.imag_unit() * f.qdiff();
    if (!mode.is_rou()) {
        out.push_back({{{iq, std::nullopt, true}}, "i(q-q^-1) S eta"});
        out.push_back({{{S(1), std::nullopt, false}}, "eta"});
        return out;
    }
    const int r = mode.r();
    auto eps = [&](long j) { return StdObject::eps(0, WeightComponent(Q(j)), Parity(0)); };
    for (int i = 1; i < r; ++i)
        for (int j = 0; j < r; ++j)
            out.push_back({{{S(1), StdObject::kac(WeightComponent(Q(i)), WeightComponent(Q(j)), Parity(0)), false}},
                           "eta_-V(" + std::to_string(i) + "," + std::to_string(j) + ")"});
    for (int j = 0; j < r; ++j) out.push_back({{{S(1), eps(j), false}}, "eta_-" + std::to_string(j)});
    CoreFunctional<S> s;
    s.label = "s";
    const S c = iq * f.inv(f.from_int(r));
    for (int j = 0; j < r; ++j) s.terms.push_back({c, eps(j), true});
    out.push_back(s);
    return out;
}

// Closed manifolds obtained by pairing a functional with a vector.
//  Untwisted: S^2 x S^1 as a 0-framed Kirby-colored unknot; the vector core
//  and the functional core are meridians of it with opposite orientations.
//  Twisted: S^3 with the vector core as an unknot and the functional core as
//  its meridian. `twists` adds kinks to the vector core and `reversed_pair`
//  makes both cores parallel in S^2 x S^1 (the square of the S-twist).
struct TorusPairingSpec {
    StdObject core;
    bool x = false;
    long twists = 0;
    std::optional<StdObject> other;
    bool twisted = false;
    bool parallel = false;
};

MorseWord torus_pairing_word(const Mode& mode, const TorusPairingSpec& spec);

template <class F>
typename F::Scalar torus_pairing_value(const F& f, const TorusPairingSpec& spec) {
    return cgp(f, torus_pairing_word(f.mode(), spec)).value;
}

// <functional, N v> where N is the identity, S, or T^twists. Pairing with
// N_S v swaps the roles: the untwisted functional becomes twisted, and the
// twisted one becomes the untwisted pairing with parallel cores.
enum class TorusAction { Identity, S, T };

template <class F>
typename F::Scalar torus_pair(const F& f, const CoreFunctional<typename F::Scalar>& phi,
                              const CoreVector<typename F::Scalar>& v, TorusAction act = TorusAction::Identity,
                              long power = 1) {
    using S = typename F::Scalar;
    S total(0);
    for (const auto& a : phi.terms)
        for (const auto& b : v.terms) {
            TorusPairingSpec spec;
            spec.core = b.obj;
            spec.x = b.x;
            spec.other = a.obj;
            spec.twisted = a.twisted;
            if (act == TorusAction::T) spec.twists = power;
            if (act == TorusAction::S) {
                if (a.twisted) {
                    // The conjugate core carries the exactly negated degree so
                    // that the total degree on the sphere vanishes on the nose.
                    spec.twisted = false;
                    spec.parallel = true;
                    if (a.obj) spec.other = StdObject::eps(-a.obj->lattice_n(), -a.obj->a, a.obj->p);
                } else {
                    spec.twisted = true;
                }
            }
            total += a.coef * b.coef * torus_pairing_value(f, spec);
        }
    return total;
}

template <class S>
struct TorusMcg {
    Mat<S> S_;
    Mat<S> T;
    std::vector<std::string> labels;
};

// Matrices of the mapping class group action as stated in closed form.
// Column k holds the coordinates of the image of basis vector k.
template <class F>
TorusMcg<typename F::Scalar> torus_mcg(const F& f) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    const S i = f.imag_unit();
    const S qd = f.qdiff();
    TorusMcg<S> out;
    for (const auto& b : torus_basis(f)) out.labels.push_back(b.label);
    const std::size_t N = out.labels.size();
    out.S_ = Mat<S>(N, N);
    out.T = Mat<S>::identity(N);
    if (!mode.is_rou()) {
        out.S_(0, 1) = i * qd;
        out.S_(1, 0) = S(-1) * i * f.inv(qd);
        out.T(0, 1) = qd;
        return out;
    }
    const int r = mode.r();
    const S inv_r = f.inv(f.from_int(r));
    auto M = [&](int a, int b) { return static_cast<std::size_t>((a - 1) * r + b); };
    auto P = [&](int j) { return static_cast<std::size_t>(r * (r - 1) + j); };
    const std::size_t PX = N - 1;
    auto qp = [&](long e) { return f.qpow(WeightComponent(Q(e))); };
    auto br = [&](long k) { return qp(k) - qp(-k); };
    for (int a = 1; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            // N_S M_{a,b}
            for (int k = 1; k < r; ++k)
                for (int l = 0; l < r; ++l)
                    out.S_(M(k, l), M(a, b)) = i * inv_r * qp(-2L * (k * b + a * l) + k + a);
            for (int l = 0; l < r; ++l)
                out.S_(P(l), M(a, b)) = S(-1) * i * inv_r * qp(-2L * a * l) * f.inv(br(a));
            // N_T M_{a,b} = theta M_{a,b}
            out.T(M(a, b), M(a, b)) = qp(-2L * a * b + a);
        }
    for (int j = 0; j < r; ++j) {
        out.S_(PX, P(j)) = i * qd * inv_r;
        for (int k = 1; k < r; ++k)
            for (int l = 0; l < r; ++l) out.S_(M(k, l), P(j)) = i * inv_r * qp(-2L * j * k) * br(k);
        out.S_(P(j), PX) = S(-1) * i * f.inv(qd);
        out.T(PX, P(j)) = qd * inv_r;
    }
    return out;
}

// The same matrices computed entrywise from invariants of closed manifolds:
// entry (k, l) is <dual_k, N v_l>.
template <class F>
TorusMcg<typename F::Scalar> torus_mcg_from_pairings(const F& f) {
    using S = typename F::Scalar;
    const auto basis = torus_basis(f);
    const auto dual = torus_dual_basis(f);
    TorusMcg<S> out;
    for (const auto& b : basis) out.labels.push_back(b.label);
    const std::size_t N = basis.size();
    out.S_ = Mat<S>(N, N);
    out.T = Mat<S>(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l) {
            out.S_(k, l) = torus_pair(f, dual[k], basis[l], TorusAction::S);
            out.T(k, l) = torus_pair(f, dual[k], basis[l], TorusAction::T);
        }
    return out;
}

// Pairing table of the dual basis against the basis (expected: identity).
template <class F>
Mat<typename F::Scalar> torus_pairing_matrix(const F& f) {
    using S = typename F::Scalar;
    const auto basis = torus_basis(f);
    const auto dual = torus_dual_basis(f);
    Mat<S> out(dual.size(), basis.size());
    for (std::size_t k = 0; k < dual.size(); ++k)
        for (std::size_t l = 0; l < basis.size(); ++l) out(k, l) = torus_pair(f, dual[k], basis[l]);
    return out;
}

struct TorusPairingReport {
    std::size_t pairings = 0;
    double max_deviation = 0;  // from the identity pattern (and 1/r on P_{j,x})
    double mcg_s_residual = 0;
    double mcg_t_residual = 0;
};

// Compares the pairing table with the duality pattern, and the closed-form
// MCG matrices with the pairing-derived ones. At roots of unity the single
// summands P_{j,x} of P_x are also paired: only s pairs with them, to 1/r.
template <class F>
TorusPairingReport torus_pairing_check(const F& f) {
    using S = typename F::Scalar;
    TorusPairingReport rep;
    const Mat<S> table = torus_pairing_matrix(f);
    rep.pairings = table.rows() * table.cols();
    rep.max_deviation = residual(table, Mat<S>::identity(table.rows()));
    if (f.mode().is_rou()) {
        const auto dual = torus_dual_basis(f);
        const int r = f.mode().r();
        for (int j = 0; j < r; ++j) {
            CoreVector<S> v{{{S(1), StdObject::proj(0, WeightComponent(Q(j)), Parity(0)), true}}, ""};
            for (std::size_t k = 0; k < dual.size(); ++k) {
                const S expected = (k + 1 == dual.size()) ? f.inv(f.from_int(r)) : S(0);
                rep.max_deviation = std::max(rep.max_deviation, detail::abs_diff<F>(torus_pair(f, dual[k], v), expected));
                ++rep.pairings;
            }
        }
    }
    const auto stated = torus_mcg(f);
    const auto derived = torus_mcg_from_pairings(f);
    rep.mcg_s_residual = residual(stated.S_, derived.S_);
    rep.mcg_t_residual = residual(stated.T, derived.T);
    return rep;
}

// ---------------------------------------------------------------------------
// Skein relation, Alexander polynomial, 4-punctured sphere

// Residual of q^{2 alpha a - alpha} c - q^{-(2 alpha a - alpha)} c^{-1} + (q^alpha - q^{-alpha}) Id
// on V(alpha, a)_0 (x) V(alpha, a)_0, relative to the size of the terms.
template <class F>
double skein_check(const F& f, const WeightComponent& alpha, const WeightComponent& a) {
    using S = typename F::Scalar;
    if (f.mode().in_lattice(alpha)) throw ValidationError("skein_check: alpha is not generic");
    const auto V = make_std(f, StdObject::kac(alpha, a, Parity(0)));
    const Mat<S> c = braiding(f, V, V);
    const Mat<S> ci = braiding_inv(f, V, V);
    const Exponent k = Exponent(Q(2) * (alpha * a)) - Exponent(alpha);
    const Mat<S> lhs = f.qpow(k) * c - f.qpow(-k) * ci;
    const Mat<S> rhs = S(-1) * (f.qpow(alpha) - f.qpow(-alpha)) * Mat<S>::identity(4);
    return residual(lhs, rhs) / std::max({1.0, lhs.max_abs(), rhs.max_abs()});
}

// Writhe-renormalized invariant of a link colored by V(alpha, a)_0.
template <class F>
typename F::Scalar alexander(const F& f, const MorseWord& w) {
    return renormalized(f, w);
}

// Conway polynomial of an oriented link diagram given as a closed word
// without coupons, computed by skein recursion over descending diagrams.
// Coefficients of z^0, z^1, ...
std::vector<long> conway_polynomial(const MorseWord& w);

// Alexander polynomial Delta(t) = nabla(t^{1/2} - t^{-1/2}), keyed by the
// exponent of t^{1/2}.
std::map<long, long> alexander_polynomial(const std::vector<long>& conway);

std::string format_conway(const std::vector<long>& conway);
std::string format_alexander(const std::map<long, long>& alex);

template <class F>
typename F::Scalar eval_poly(const F& f, const std::vector<long>& coeffs, const typename F::Scalar& z) {
    using S = typename F::Scalar;
    S out(0), p(1);
    for (long c : coeffs) {
        out += f.from_int(c) * p;
        p = p * z;
    }
    return out;
}

// The Conway variable matching the renormalized invariant of V(alpha, a)_0:
// z = q^{-alpha} - q^{alpha}.
template <class F>
typename F::Scalar conway_variable(const F& f, const WeightComponent& alpha) {
    return f.qpow(-alpha) - f.qpow(alpha);
}

template <class S>
struct Sphere4Pairing {
    Mat<S> table;  // rows M'_+, M'_-; columns M_+, M_-, M_Id
    double relation_residual = 0;
};

// Pairings of the 4-punctured sphere vectors M_+, M_-, M_Id with M'_+, M'_-,
// and the residual of q^k M_+ - q^{-k} M_- + (q^alpha - q^{-alpha}) M_Id = 0,
// k = 2 alpha a - alpha, evaluated on both functionals.
template <class F>
Sphere4Pairing<typename F::Scalar> sphere4_pairing(const F& f, const WeightComponent& alpha, const WeightComponent& a) {
    using S = typename F::Scalar;
    if (f.mode().in_lattice(alpha)) throw ValidationError("sphere4_pairing: alpha is not generic");
    const Color V = Color::of(StdObject::kac(alpha, a, Parity(0)));
    Sphere4Pairing<S> out;
    out.table = Mat<S>(2, 3);
    const int eps[2] = {1, -1};
    for (int row = 0; row < 2; ++row)
        for (int col = 0; col < 3; ++col) {
            std::vector<int> gens = {eps[row]};
            if (col < 2) gens.push_back(eps[col]);
            out.table(row, col) = cgp(f, braid_closure(2, gens, {V, V})).value;
        }
    const Exponent k = Exponent(Q(2) * (alpha * a)) - Exponent(alpha);
    const S br = f.qpow(alpha) - f.qpow(-alpha);
    double res = 0, scale = 1;
    for (int row = 0; row < 2; ++row) {
        const S v = f.qpow(k) * out.table(row, 0) - f.qpow(-k) * out.table(row, 1) + br * out.table(row, 2);
        res = std::max(res, std::abs(to_complex(v)));
        for (int col = 0; col < 3; ++col) scale = std::max(scale, std::abs(to_complex(out.table(row, col))));
    }
    out.relation_residual = res / scale;
    return out;
}

}  // namespace gl11
