#pragma once

#include "gl11/homspace.hpp"

namespace gl11 {

// Braiding c_{M,N}: M (x) N -> N (x) M, the super flip composed with the
// R-matrix 1 + (q - q^{-1}) (X (x) Y)(K (x) K^{-1}) and the diagonal factor
// q^{-lambda_E mu_G - lambda_G mu_E}.
template <class F>
Mat<typename F::Scalar> braiding(const F& f, const WeightModule<typename F::Scalar>& M,
                                 const WeightModule<typename F::Scalar>& N) {
    using S = typename F::Scalar;
    const std::size_t m = M.dim(), n = N.dim();
    Mat<S> c(n * m, m * n);
    const S qd = f.qdiff();
    auto flip_sign = [&](std::size_t k, std::size_t l) { return (M.basis[k].p.v & N.basis[l].p.v) ? S(-1) : S(1); };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = M.basis[i];
            const auto& w = N.basis[j];
            S ups = f.qpow(-(v.w.e * w.w.g) - (v.w.g * w.w.e));
            std::size_t col = i * n + j;
            // identity term, then the flip
            c(j * m + i, col) += flip_sign(i, j) * ups;
            // correction term
            S pref = qd * ups * M.K[i] * N.Kinv[j];
            if (v.p.v) pref = -pref;
            for (std::size_t k = 0; k < m; ++k) {
                if (M.X(k, i) == S(0)) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    if (N.Y(l, j) == S(0)) continue;
                    c(l * m + k, col) += flip_sign(k, l) * pref * M.X(k, i) * N.Y(l, j);
                }
            }
        }
    return c;
}

// c_{M,N}^{-1}: N (x) M -> M (x) N, assembled from the inverse factors:
// the inverse flip, then 1 - (q - q^{-1}) (X (x) Y)(K (x) K^{-1}), then the
// inverse diagonal factor.
template <class F>
Mat<typename F::Scalar> braiding_inv(const F& f, const WeightModule<typename F::Scalar>& M,
                                     const WeightModule<typename F::Scalar>& N) {
    using S = typename F::Scalar;
    const std::size_t m = M.dim(), n = N.dim();
    Mat<S> c(m * n, n * m);
    const S qd = f.qdiff();
    auto ups_inv = [&](std::size_t k, std::size_t l) {
        return f.qpow((M.basis[k].w.e * N.basis[l].w.g) + (M.basis[k].w.g * N.basis[l].w.e));
    };
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) {
            // input w_j (x) v_i  ->  (-1)^{|v||w|} v_i (x) w_j
            S sign = (M.basis[i].p.v & N.basis[j].p.v) ? S(-1) : S(1);
            std::size_t col = j * m + i;
            c(i * n + j, col) += sign * ups_inv(i, j);
            S pref = S(-1) * sign * qd * M.K[i] * N.Kinv[j];
            if (M.basis[i].p.v) pref = -pref;
            for (std::size_t k = 0; k < m; ++k) {
                if (M.X(k, i) == S(0)) continue;
                for (std::size_t l = 0; l < n; ++l) {
                    if (N.Y(l, j) == S(0)) continue;
                    c(k * n + l, col) += pref * M.X(k, i) * N.Y(l, j) * ups_inv(k, l);
                }
            }
        }
    return c;
}

// ev_left: M* (x) M -> 1, f (x) v -> f(v)
template <class S>
Mat<S> ev_left(const WeightModule<S>& M) {
    const std::size_t n = M.dim();
    Mat<S> e(1, n * n);
    for (std::size_t i = 0; i < n; ++i) e(0, i * n + i) = S(1);
    return e;
}

// coev_left: 1 -> M (x) M*, 1 -> sum v_i (x) v_i^*
template <class S>
Mat<S> coev_left(const WeightModule<S>& M) {
    const std::size_t n = M.dim();
    Mat<S> e(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) e(i * n + i, 0) = S(1);
    return e;
}

// ev_right: M (x) M* -> 1, v (x) f -> (-1)^{|f||v|} f(K v)
template <class S>
Mat<S> ev_right(const WeightModule<S>& M) {
    const std::size_t n = M.dim();
    Mat<S> e(1, n * n);
    for (std::size_t i = 0; i < n; ++i) e(0, i * n + i) = M.basis[i].p.v ? S(-1) * M.K[i] : M.K[i];
    return e;
}

// coev_right: 1 -> M* (x) M, 1 -> sum (-1)^{|v_i|} v_i^* (x) K^{-1} v_i
template <class S>
Mat<S> coev_right(const WeightModule<S>& M) {
    const std::size_t n = M.dim();
    Mat<S> e(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) e(i * n + i, 0) = M.basis[i].p.v ? S(-1) * M.Kinv[i] : M.Kinv[i];
    return e;
}

template <class S>
S qdim(const WeightModule<S>& M) {
    return (ev_right(M) * coev_left(M))(0, 0);
}

// Right partial trace of an endomorphism f of M (x) N, as an endomorphism of M.
template <class S>
Mat<S> ptrace_right(const Mat<S>& fm, const WeightModule<S>& M, const WeightModule<S>& N) {
    const std::size_t m = M.dim(), n = N.dim();
    if (fm.rows() != m * n || fm.cols() != m * n) throw ValidationError("ptrace_right: shape mismatch");
    Mat<S> out(m, m);
    for (std::size_t j = 0; j < n; ++j) {
        S w = N.basis[j].p.v ? S(-1) * N.K[j] : N.K[j];
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) out(a, b) += w * fm(a * n + j, b * n + j);
    }
    return out;
}

template <class F>
Mat<typename F::Scalar> twist(const F& f, const WeightModule<typename F::Scalar>& M) {
    return ptrace_right(braiding(f, M, M), M, M);
}

}  // namespace gl11
