#pragma once

#include "gl11/field.hpp"
#include "gl11/matrix.hpp"
#include "gl11/std_object.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gl11 {

struct BasisVector {
    Weight w;
    Parity p;
    std::string label;
};

// A finite-dimensional weight module: E and G act diagonally by the basis
// weights, K by q^{lambda_E}, and X, Y by explicit odd matrices.
template <class S>
struct WeightModule {
    std::vector<BasisVector> basis;
    Mat<S> X, Y;
    std::vector<S> K, Kinv;

    std::size_t dim() const { return basis.size(); }
};

// Degree-zero intertwiners are plain matrices (target dim x source dim).
template <class S>
using Morphism = Mat<S>;

// Fills in the K-actions from the weights.
template <class F>
WeightModule<typename F::Scalar> assemble(const F& f, std::vector<BasisVector> basis, Mat<typename F::Scalar> X,
                                          Mat<typename F::Scalar> Y) {
    WeightModule<typename F::Scalar> m;
    for (auto& b : basis) {
        b.w.e = f.mode().canon(b.w.e);
        b.w.g = f.mode().canon(b.w.g);
    }
    m.basis = std::move(basis);
    m.X = std::move(X);
    m.Y = std::move(Y);
    for (const auto& b : m.basis) {
        m.K.push_back(f.qpow(b.w.e));
        m.Kinv.push_back(f.qpow(-b.w.e));
    }
    return m;
}

template <class F>
WeightModule<typename F::Scalar> make_std(const F& f, const StdObject& obj0) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    StdObject obj = obj0.canon(mode);
    const WeightComponent& al = obj.alpha;
    const WeightComponent& a = obj.a;
    const Parity p = obj.p, p1 = obj.p + Parity(1);
    const WeightComponent one(1);
    std::vector<BasisVector> basis;
    std::size_t n = obj.dim();
    Mat<S> X(n, n), Y(n, n);
    switch (obj.kind) {
        case StdObject::Kind::Eps:
            mode.check_g_weight(a);
            basis = {{{al, a}, p, "v"}};
            break;
        case StdObject::Kind::Kac:
            mode.check_g_weight(a);
            basis = {{{al, a}, p, "v"}, {{al, a - one}, p1, "v'"}};
            Y(1, 0) = S(1);
            X(0, 1) = f.bracket(al);
            break;
        case StdObject::Kind::AntiKac:
            mode.check_g_weight(a);
            basis = {{{al, a}, p, "v'"}, {{al, a + one}, p1, "v"}};
            X(1, 0) = S(1);
            Y(0, 1) = f.bracket(al);
            break;
        case StdObject::Kind::Proj:
            mode.check_g_weight(a);
            basis = {{{al, a}, p, "v'"}, {{al, a + one}, p1, "v+"}, {{al, a - one}, p1, "v-"}, {{al, a}, p, "v"}};
            X(1, 0) = S(1);   // X v' = v+
            Y(2, 0) = S(1);   // Y v' = v-
            Y(3, 1) = S(-1);  // Y v+ = -v
            X(3, 2) = S(1);   // X v- = v
            break;
    }
    return assemble(f, std::move(basis), std::move(X), std::move(Y));
}

// The nilpotent endomorphism x of a projective module: v' -> v.
template <class S>
Mat<S> proj_nilpotent() {
    Mat<S> x(4, 4);
    x(3, 0) = S(1);
    return x;
}

struct ModuleReport {
    bool ok = true;
    std::vector<std::pair<std::string, double>> residuals;
};

template <class F>
ModuleReport check_module(const F& f, const WeightModule<typename F::Scalar>& m) {
    using S = typename F::Scalar;
    const std::size_t n = m.dim();
    const double tol = F::exact ? 0.0 : f.tol();
    ModuleReport rep;
    auto record = [&](const std::string& name, double r, bool violated) {
        rep.residuals.emplace_back(name, r);
        if (violated) rep.ok = false;
    };
    {
        Mat<S> x2 = m.X * m.X;
        record("X^2 = 0", x2.max_abs(), !x2.is_zero(tol));
        Mat<S> y2 = m.Y * m.Y;
        record("Y^2 = 0", y2.max_abs(), !y2.is_zero(tol));
    }
    // Weight and parity behaviour of X and Y.
    auto shift_check = [&](const Mat<S>& A, long dg, const std::string& name) {
        double worst = 0;
        bool bad = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (negligible(A(i, j), tol)) continue;
                const auto& bi = m.basis[i];
                const auto& bj = m.basis[j];
                bool fine = bi.w.e == bj.w.e && bi.w.g == bj.w.g + WeightComponent(dg) && bi.p != bj.p;
                if (!fine) {
                    bad = true;
                    worst = std::max(worst, magnitude(A(i, j)));
                }
            }
        record(name, worst, bad);
    };
    shift_check(m.X, 1, "[G,X] = X, X odd, E central");
    shift_check(m.Y, -1, "[G,Y] = -Y, Y odd, E central");
    {
        double worst = 0;
        bool bad = false;
        for (std::size_t i = 0; i < n; ++i) {
            S d = m.K[i] - f.qpow(m.basis[i].w.e);
            S e = m.K[i] * m.Kinv[i] - S(1);
            double r = std::max(magnitude(d), magnitude(e));
            worst = std::max(worst, r);
            if (!negligible(d, tol) || !negligible(e, tol)) bad = true;
        }
        record("K = q^E", worst, bad);
    }
    {
        Mat<S> lhs = m.X * m.Y + m.Y * m.X;
        Mat<S> rhs(n, n);
        S inv = f.inv(f.qdiff());
        for (std::size_t i = 0; i < n; ++i) rhs(i, i) = (m.K[i] - m.Kinv[i]) * inv;
        Mat<S> d = lhs - rhs;
        record("XY + YX = (K - K^-1)/(q - q^-1)", d.max_abs(), !d.is_zero(tol));
    }
    return rep;
}

// Operator A (parity pa) tensored with operator B (parity pb) on M (x) N,
// acting with the Koszul sign (-1)^{|B| |v|} on v (x) w.
template <class S>
Mat<S> graded_kron(const Mat<S>& A, const Mat<S>& B, Parity pb, const std::vector<BasisVector>& left_basis) {
    Mat<S> c = kron(A, B);
    if (pb.v == 0) return c;
    const std::size_t nb = B.cols();
    for (std::size_t row = 0; row < c.rows(); ++row)
        for (std::size_t col = 0; col < c.cols(); ++col) {
            std::size_t i = col / nb;
            if (left_basis[i].p.v == 1) c(row, col) = -c(row, col);
        }
    return c;
}

template <class S>
Mat<S> diag(const std::vector<S>& d) {
    Mat<S> m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

template <class F>
WeightModule<typename F::Scalar> tensor(const F& f, const WeightModule<typename F::Scalar>& M,
                                        const WeightModule<typename F::Scalar>& N) {
    using S = typename F::Scalar;
    (void)f;
    WeightModule<S> out;
    for (const auto& a : M.basis)
        for (const auto& b : N.basis) out.basis.push_back({a.w + b.w, a.p + b.p, a.label + "(x)" + b.label});
    for (std::size_t i = 0; i < M.dim(); ++i)
        for (std::size_t j = 0; j < N.dim(); ++j) {
            out.K.push_back(M.K[i] * N.K[j]);
            out.Kinv.push_back(M.Kinv[i] * N.Kinv[j]);
        }
    const Mat<S> idM = Mat<S>::identity(M.dim());
    const Mat<S> idN = Mat<S>::identity(N.dim());
    // X = X (x) K^-1 + 1 (x) X ;  Y = Y (x) 1 + K (x) Y
    out.X = graded_kron(M.X, diag(N.Kinv), Parity(0), M.basis) + graded_kron(idM, N.X, Parity(1), M.basis);
    out.Y = graded_kron(M.Y, idN, Parity(0), M.basis) + graded_kron(diag(M.K), N.Y, Parity(1), M.basis);
    return out;
}

// Dual module with basis v_i^* (weight -lambda_i, parity p_i) and the
// antipode action (x f)(v) = (-1)^{|f||x|} f(S(x) v), S(X) = -XK, S(Y) = -K^{-1}Y.
template <class F>
WeightModule<typename F::Scalar> dual(const F& f, const WeightModule<typename F::Scalar>& M) {
    using S = typename F::Scalar;
    (void)f;
    WeightModule<S> out;
    const std::size_t n = M.dim();
    for (const auto& b : M.basis) out.basis.push_back({-b.w, b.p, b.label + "*"});
    out.K = M.Kinv;
    out.Kinv = M.K;
    out.X = Mat<S>(n, n);
    out.Y = Mat<S>(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        S sgn = M.basis[i].p.v ? S(1) : S(-1);
        for (std::size_t k = 0; k < n; ++k) {
            if (!(M.X(i, k) == S(0))) out.X(k, i) = sgn * M.K[k] * M.X(i, k);
            if (!(M.Y(i, k) == S(0))) out.Y(k, i) = sgn * M.Kinv[k] * M.Y(i, k);
        }
    }
    return out;
}

// Transpose of an even morphism, as a map between dual modules.
template <class S>
Mat<S> dual_morphism(const Mat<S>& m) {
    return m.transpose();
}

template <class F>
WeightModule<typename F::Scalar> direct_sum(const F& f, const WeightModule<typename F::Scalar>& M,
                                            const WeightModule<typename F::Scalar>& N) {
    using S = typename F::Scalar;
    (void)f;
    WeightModule<S> out;
    out.basis = M.basis;
    out.basis.insert(out.basis.end(), N.basis.begin(), N.basis.end());
    out.K = M.K;
    out.K.insert(out.K.end(), N.K.begin(), N.K.end());
    out.Kinv = M.Kinv;
    out.Kinv.insert(out.Kinv.end(), N.Kinv.begin(), N.Kinv.end());
    const std::size_t n = out.dim(), m = M.dim();
    out.X = Mat<S>(n, n);
    out.Y = Mat<S>(n, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out.X(i, j) = M.X(i, j);
            out.Y(i, j) = M.Y(i, j);
        }
    for (std::size_t i = 0; i < N.dim(); ++i)
        for (std::size_t j = 0; j < N.dim(); ++j) {
            out.X(m + i, m + j) = N.X(i, j);
            out.Y(m + i, m + j) = N.Y(i, j);
        }
    return out;
}

// Relative residual of the intertwining equations for a candidate morphism
// M -> N, including entries that would break weight or parity.
template <class F>
double intertwining_residual(const F& f, const WeightModule<typename F::Scalar>& M,
                             const WeightModule<typename F::Scalar>& N, const Mat<typename F::Scalar>& T) {
    (void)f;
    double r = std::max(residual(T * M.X, N.X * T), residual(T * M.Y, N.Y * T));
    double scale = std::max({M.X.max_abs(), M.Y.max_abs(), N.X.max_abs(), N.Y.max_abs(), 1.0});
    r /= std::max(1.0, T.max_abs() * scale);
    for (std::size_t i = 0; i < N.dim(); ++i)
        for (std::size_t j = 0; j < M.dim(); ++j) {
            if (negligible(T(i, j), 0.0)) continue;
            if (N.basis[i].w != M.basis[j].w || N.basis[i].p != M.basis[j].p)
                r = std::max(r, magnitude(T(i, j)) / std::max(1.0, T.max_abs()));
        }
    return r;
}

}  // namespace gl11
