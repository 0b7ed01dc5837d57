#pragma once

#include "gl11/ribbon.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace gl11 {

// A formal linear combination of simple objects of one grading degree.
template <class S>
struct FormalColor {
    std::vector<std::pair<StdObject, S>> terms;
};

// Modified dimension of a projective standard object, normalized so that
// d(V(1,0)_0) = (q - q^{-1})^{-1}.
template <class F>
typename F::Scalar mdim(const F& f, const StdObject& obj0) {
    using S = typename F::Scalar;
    const StdObject obj = obj0.canon(f.mode());
    switch (obj.kind) {
        case StdObject::Kind::Proj: return S(0);
        case StdObject::Kind::Kac:
        case StdObject::Kind::AntiKac: {
            if (f.mode().in_lattice(obj.alpha))
                throw ValidationError("mdim: " + to_string(obj) + " is not projective");
            S denom = f.qpow(obj.alpha) - f.qpow(-obj.alpha);
            if (f.is_zero(denom)) throw ValidationError("mdim: " + to_string(obj) + " is not simple");
            // Vbar(alpha, a)_p is isomorphic to V(alpha, a + 1)_{p + 1}.
            int sign = obj.p.sign();
            if (obj.kind == StdObject::Kind::AntiKac) sign = -sign;
            return S(sign) * f.inv(denom);
        }
        case StdObject::Kind::Eps: break;
    }
    throw ValidationError("mdim: " + to_string(obj) + " is not projective");
}

// Modified trace of an endomorphism of a projective module, summed over the
// indecomposable summands found by decompose.
template <class F>
typename F::Scalar mtrace(const F& f, const Mat<typename F::Scalar>& T, const WeightModule<typename F::Scalar>& M) {
    using S = typename F::Scalar;
    if (T.rows() != M.dim() || T.cols() != M.dim()) throw ValidationError("mtrace: shape mismatch");
    S total(0);
    if (M.dim() == 0) return total;
    for (const auto& sm : decompose(f, M)) {
        if (!sm.obj.is_projective(f.mode()))
            throw ValidationError("mtrace: module is not projective (summand " + to_string(sm.obj) + ")");
        Mat<S> block = sm.proj * T * sm.incl;
        if (sm.obj.kind == StdObject::Kind::Proj) {
            // block = c1 Id + c2 x with x: v' -> v
            S sign = S(sm.obj.p.sign());
            total += block(3, 0) * sign * f.inv(f.qdiff());
        } else {
            total += block(0, 0) * mdim(f, sm.obj);
        }
    }
    return total;
}

// Twist eigenvalue of a Kac-type simple, computed from the twist morphism.
template <class F>
typename F::Scalar twist_scalar(const F& f, const StdObject& obj) {
    return twist(f, make_std(f, obj))(0, 0);
}

// Double braiding of W with a closed loop colored by V:
//   (Id_W (x) ev_right_V)(c_{V,W} (x) Id)(c_{W,V} (x) Id)(Id_W (x) coev_left_V).
// With mirror = true both crossings are replaced by their inverses.
// `loop` is an optional endomorphism of V inserted on the loop strand.
template <class F>
Mat<typename F::Scalar> phi_op(const F& f, const WeightModule<typename F::Scalar>& V,
                               const WeightModule<typename F::Scalar>& W, bool mirror = false,
                               const std::optional<Mat<typename F::Scalar>>& loop = std::nullopt) {
    using S = typename F::Scalar;
    const WeightModule<S> Vd = dual(f, V);
    const Mat<S> idW = Mat<S>::identity(W.dim());
    const Mat<S> idVd = Mat<S>::identity(Vd.dim());
    Mat<S> cup = coev_left(V);
    if (loop) cup = kron(*loop, idVd) * cup;
    const Mat<S> first = mirror ? braiding_inv(f, V, W) : braiding(f, W, V);    // W V -> V W
    const Mat<S> second = mirror ? braiding_inv(f, W, V) : braiding(f, V, W);   // V W -> W V
    Mat<S> m = kron(idW, cup);
    m = kron(first, idVd) * m;
    m = kron(second, idVd) * m;
    return kron(idW, ev_right(V)) * m;
}

template <class F>
Mat<typename F::Scalar> phi_op(const F& f, const StdObject& V, const WeightModule<typename F::Scalar>& W,
                               bool mirror = false) {
    return phi_op(f, make_std(f, V), W, mirror);
}

template <class F>
Mat<typename F::Scalar> phi_op(const F& f, const FormalColor<typename F::Scalar>& color,
                               const WeightModule<typename F::Scalar>& W, bool mirror = false) {
    using S = typename F::Scalar;
    Mat<S> out(W.dim(), W.dim());
    for (const auto& [obj, coef] : color.terms) out += coef * phi_op(f, make_std(f, obj), W, mirror);
    return out;
}

// S'(V, W): the scalar by which the V-loop acts on the simple W.
template <class F>
typename F::Scalar s_prime(const F& f, const StdObject& V, const StdObject& W) {
    using S = typename F::Scalar;
    const WeightModule<S> Wm = make_std(f, W);
    const Mat<S> phi = phi_op(f, make_std(f, V), Wm);
    const S s = phi(0, 0);
    const double tol = F::exact ? 0.0 : f.tol() * std::max(1.0, phi.max_abs()) * 1e3;
    if (!(phi - Mat<S>::scalar(s, Wm.dim())).is_zero(tol))
        throw ValidationError("s_prime: double braiding on " + to_string(W) + " is not a scalar");
    return s;
}

// Default lift of a degree: components reduced to [0, 1) in root-of-unity modes.
struct KirbyLift {
    WeightComponent alpha0;
    WeightComponent a0;
};

inline KirbyLift default_lift(const Mode& mode, const Degree& g) {
    if (!mode.is_rou()) return {mode.canon(g.e), WeightComponent(0)};
    WeightComponent e = mode.canon(g.e), a = mode.canon(g.g);
    return {WeightComponent(mod_q(e.a, Q(1))), mode.integral() ? WeightComponent(0) : WeightComponent(mod_q(a.a, Q(1)))};
}

// Kirby color of a generic degree: the sum of d(V_i) V_i over the chosen
// dominating simples. One term for arbitrary q, r^2 terms at roots of unity.
template <class F>
FormalColor<typename F::Scalar> kirby_color(const F& f, const Degree& g,
                                            const std::optional<KirbyLift>& lift = std::nullopt) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    if (!mode.is_generic(g)) throw ValidationError("kirby_color: degree lies in the small set X");
    const KirbyLift L = lift ? *lift : default_lift(mode, g);
    FormalColor<S> out;
    if (!mode.is_rou()) {
        StdObject v = StdObject::kac(L.alpha0, WeightComponent(0), Parity(0));
        out.terms.emplace_back(v, mdim(f, v));
        return out;
    }
    const int r = mode.r();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            StdObject v = StdObject::kac(L.alpha0 + WeightComponent(i), L.a0 + WeightComponent(j), Parity(0));
            out.terms.emplace_back(v.canon(mode), mdim(f, v));
        }
    return out;
}

// A generic test degree per mode whose q-powers stay inside the exact field.
inline Degree reference_degree(const Mode& mode) {
    switch (mode.kind()) {
        case ModeKind::RouOdd: return {WeightComponent(Q(1, 4)), WeightComponent(0)};
        case ModeKind::RouEven: return {WeightComponent(Q(1, 2)), WeightComponent(0)};
        case ModeKind::Arbitrary: break;
    }
    return {WeightComponent(Q(1, 3)), WeightComponent(0)};
}

template <class S>
struct Stabilization {
    S plus;
    S minus;
};

// Stabilization coefficients: a (-1)-framed (resp. +1-framed) Kirby-colored
// meridian around a strand V equals Delta_- (resp. Delta_+) times a -1
// (resp. +1) kink on V. Evaluated as matrices on V = V(alpha, 0)_0.
template <class F>
Stabilization<typename F::Scalar> stabilization_coeffs(const F& f, const std::optional<Degree>& g = std::nullopt) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    const Degree deg = g ? *g : reference_degree(mode);
    const WeightModule<S> V = make_std(f, StdObject::kac(deg.e, WeightComponent(0), Parity(0)));
    const double tol = F::exact ? 0.0 : f.tol();
    const Mat<S> thV = twist(f, V);
    const auto thV_inv = inverse(thV, tol);
    if (!thV_inv) throw BackendError("stabilization_coeffs: twist is not invertible");
    Mat<S> minus(V.dim(), V.dim()), plus(V.dim(), V.dim());
    for (const auto& [obj, coef] : kirby_color(f, deg).terms) {
        const WeightModule<S> Vk = make_std(f, obj);
        const Mat<S> th = twist(f, Vk);
        const auto th_inv = inverse(th, tol);
        if (!th_inv) throw BackendError("stabilization_coeffs: twist is not invertible");
        minus += coef * phi_op(f, Vk, V, false, *th_inv);
        plus += coef * phi_op(f, Vk, V, true, th);
    }
    minus = minus * *thV_inv;
    plus = plus * thV;
    const double stol = F::exact ? 0.0 : tol * 1e3 * std::max(1.0, std::max(minus.max_abs(), plus.max_abs()));
    if (!(minus - Mat<S>::scalar(minus(0, 0), V.dim())).is_zero(stol) ||
        !(plus - Mat<S>::scalar(plus(0, 0), V.dim())).is_zero(stol))
        throw BackendError("stabilization_coeffs: stabilized strand is not a multiple of the identity");
    return {plus(0, 0), minus(0, 0)};
}

// Global normalization constants: the square root D of zeta = Delta_+ Delta_-
// and delta = D / Delta_-.
template <class S>
struct Normalization {
    S zeta;
    S D;
    S delta;
};

template <class F>
Normalization<typename F::Scalar> normalization(const F& f) {
    using S = typename F::Scalar;
    const S i = f.imag_unit();
    const S r = f.mode().is_rou() ? f.from_int(f.mode().r()) : S(1);
    return {S(-1) * r * r, r * i, S(-1) * i};
}

struct ModularityResidual {
    double residual = 0;   // relative matrix residual of the handle-slide identity
    double lhs_norm = 0;   // size of the left-hand side
};

// Relative modularity: on M = V_i (x) V_j^* the Omega_h-colored loop times
// d(V_i) equals zeta delta_{ij} coev_left_{V_i} ev_right_{V_i}.
template <class F>
ModularityResidual relative_modularity_check(const F& f, const Degree& g, const Degree& h, std::size_t i,
                                             std::size_t j) {
    using S = typename F::Scalar;
    const auto theta = kirby_color(f, g);
    if (i >= theta.terms.size() || j >= theta.terms.size())
        throw ValidationError("relative_modularity_check: index out of range");
    const StdObject& Vi = theta.terms[i].first;
    const StdObject& Vj = theta.terms[j].first;
    const WeightModule<S> Mi = make_std(f, Vi);
    const WeightModule<S> M = tensor(f, Mi, dual(f, make_std(f, Vj)));
    const Mat<S> lhs = mdim(f, Vi) * phi_op(f, kirby_color(f, h), M);
    Mat<S> rhs(M.dim(), M.dim());
    if (i == j) rhs = normalization(f).zeta * (coev_left(Mi) * ev_right(Mi));
    const double scale = std::max({1.0, lhs.max_abs(), rhs.max_abs()});
    return {residual(lhs, rhs) / scale, lhs.max_abs()};
}

}  // namespace gl11
