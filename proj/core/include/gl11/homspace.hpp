#pragma once

#include "gl11/module.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace gl11 {

// Basis of the space of degree-zero intertwiners M -> N.
template <class F>
std::vector<Mat<typename F::Scalar>> hom_basis(const F& f, const WeightModule<typename F::Scalar>& M,
                                               const WeightModule<typename F::Scalar>& N) {
    using S = typename F::Scalar;
    const std::size_t m = M.dim(), n = N.dim();
    // Unknowns: entries (i, j) with matching weight and parity.
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<long> index(n * m, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (N.basis[i].w == M.basis[j].w && N.basis[i].p == M.basis[j].p) {
                index[i * m + j] = static_cast<long>(unknowns.size());
                unknowns.emplace_back(i, j);
            }
    if (unknowns.empty()) return {};
    // Equations: (T A_M - A_N T)(i, j) = 0 for A in {X, Y}.
    Mat<S> sys(2 * n * m, unknowns.size());
    auto add_block = [&](const Mat<S>& AM, const Mat<S>& AN, std::size_t row0) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                std::size_t row = row0 + i * m + j;
                // (T AM)(i, j) = sum_k T(i, k) AM(k, j)
                for (std::size_t k = 0; k < m; ++k) {
                    long u = index[i * m + k];
                    if (u >= 0 && !(AM(k, j) == S(0))) sys(row, static_cast<std::size_t>(u)) += AM(k, j);
                }
                // (AN T)(i, j) = sum_k AN(i, k) T(k, j)
                for (std::size_t k = 0; k < n; ++k) {
                    long u = index[k * m + j];
                    if (u >= 0 && !(AN(i, k) == S(0))) sys(row, static_cast<std::size_t>(u)) -= AN(i, k);
                }
            }
    };
    add_block(M.X, N.X, 0);
    add_block(M.Y, N.Y, n * m);
    Mat<S> ker = nullspace(sys, F::exact ? 0.0 : f.tol());
    std::vector<Mat<S>> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Mat<S> T(n, m);
        for (std::size_t u = 0; u < unknowns.size(); ++u) T(unknowns[u].first, unknowns[u].second) = ker(u, c);
        out.push_back(std::move(T));
    }
    return out;
}

// A left inverse of a full-column-rank matrix B, built from an invertible
// square selection of its rows.
template <class S>
Mat<S> left_inverse(const Mat<S>& B, double tol) {
    Mat<S> bt = B.transpose();
    auto rows = rref(bt, tol);
    if (rows.size() != B.cols()) throw ValidationError("left_inverse: matrix does not have full column rank");
    Mat<S> sq(B.cols(), B.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < B.cols(); ++c) sq(r, c) = B(rows[r], c);
    auto inv = inverse(sq, tol);
    if (!inv) throw ValidationError("left_inverse: singular row selection");
    Mat<S> sel(B.cols(), B.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) sel(r, rows[r]) = S(1);
    return *inv * sel;
}

template <class S>
struct Summand {
    StdObject obj;
    Mat<S> incl;  // obj -> M
    Mat<S> proj;  // M -> obj
};

namespace detail {

// Submodule of M spanned by the columns of B (a module summand).
template <class F>
WeightModule<typename F::Scalar> restrict_to(const F& f, const WeightModule<typename F::Scalar>& M,
                                             const Mat<typename F::Scalar>& B, const Mat<typename F::Scalar>& L) {
    using S = typename F::Scalar;
    std::vector<BasisVector> basis;
    for (std::size_t c = 0; c < B.cols(); ++c) {
        std::size_t r = 0;
        double best = -1;
        for (std::size_t i = 0; i < B.rows(); ++i)
            if (magnitude(B(i, c)) > best) {
                best = magnitude(B(i, c));
                r = i;
            }
        basis.push_back(M.basis[r]);
    }
    Mat<S> X = L * M.X * B;
    Mat<S> Y = L * M.Y * B;
    return assemble(f, std::move(basis), std::move(X), std::move(Y));
}

template <class S>
Mat<S> column(const Mat<S>& A, std::size_t c) {
    Mat<S> v(A.rows(), 1);
    for (std::size_t i = 0; i < A.rows(); ++i) v(i, 0) = A(i, c);
    return v;
}

template <class S>
Mat<S> hstack(const std::vector<Mat<S>>& cols) {
    if (cols.empty()) return {};
    Mat<S> out(cols[0].rows(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t i = 0; i < out.rows(); ++i) out(i, c) = cols[c](i, 0);
    return out;
}

// Weight classes of a module: groups of basis indices with equal weight and parity.
template <class S>
std::vector<std::vector<std::size_t>> weight_classes(const WeightModule<S>& M) {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < M.dim(); ++i) {
        bool placed = false;
        for (auto& cl : classes) {
            const auto& b = M.basis[cl[0]];
            if (b.w == M.basis[i].w && b.p == M.basis[i].p) {
                cl.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({i});
    }
    // Descending G-weight, then ascending first index.
    std::stable_sort(classes.begin(), classes.end(), [&](const auto& x, const auto& y) {
        const auto& gx = M.basis[x[0]].w.g;
        const auto& gy = M.basis[y[0]].w.g;
        if (gy < gx) return true;
        if (gx < gy) return false;
        return x[0] < y[0];
    });
    return classes;
}

// Kernel of a stack of operators restricted to one weight class, as vectors in M.
template <class S>
std::vector<Mat<S>> class_kernel(const std::vector<const Mat<S>*>& ops, const std::vector<std::size_t>& cl,
                                 std::size_t dim, double tol) {
    std::size_t rows = 0;
    for (auto* op : ops) rows += op->rows();
    std::vector<Mat<S>> out;
    if (rows == 0) {
        for (std::size_t k = 0; k < cl.size(); ++k) {
            Mat<S> v(dim, 1);
            v(cl[k], 0) = S(1);
            out.push_back(v);
        }
        return out;
    }
    Mat<S> A(rows, cl.size());
    std::size_t r0 = 0;
    for (auto* op : ops) {
        for (std::size_t i = 0; i < op->rows(); ++i)
            for (std::size_t k = 0; k < cl.size(); ++k) A(r0 + i, k) = (*op)(i, cl[k]);
        r0 += op->rows();
    }
    Mat<S> ker = nullspace(A, tol);
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        Mat<S> v(dim, 1);
        for (std::size_t k = 0; k < cl.size(); ++k) v(cl[k], 0) = ker(k, c);
        out.push_back(v);
    }
    return out;
}

// Tries to split off the submodule generated by the given images of a
// standard object's basis. Returns the retraction U -> obj on success.
template <class F>
std::optional<Mat<typename F::Scalar>> find_retraction(const F& f, const WeightModule<typename F::Scalar>& U,
                                                       const WeightModule<typename F::Scalar>& std_mod,
                                                       const Mat<typename F::Scalar>& iota) {
    using S = typename F::Scalar;
    const double tol = F::exact ? 0.0 : f.tol();
    auto homs = hom_basis(f, U, std_mod);
    if (homs.empty()) return std::nullopt;
    const std::size_t d = std_mod.dim();
    // Solve sum_k c_k (h_k iota) = Id.
    Mat<S> A(d * d, homs.size());
    Mat<S> b(d * d, 1);
    for (std::size_t k = 0; k < homs.size(); ++k) {
        Mat<S> comp = homs[k] * iota;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) A(i * d + j, k) = comp(i, j);
    }
    for (std::size_t i = 0; i < d; ++i) b(i * d + i, 0) = S(1);
    auto c = solve(A, b, tol);
    if (!c) return std::nullopt;
    Mat<S> pi(d, U.dim());
    for (std::size_t k = 0; k < homs.size(); ++k) pi += (*c)(k, 0) * homs[k];
    if (residual(pi * iota, Mat<S>::identity(d)) > std::max(tol, 1e-300) * 1e3 && !F::exact) return std::nullopt;
    if (F::exact && !(pi * iota - Mat<S>::identity(d)).is_zero(0.0)) return std::nullopt;
    return pi;
}

}  // namespace detail

// Splits M into standard indecomposable summands with inclusion/projection
// pairs. Candidates are tried in the order P, generic Kac, non-generic Kac,
// anti-Kac, eps; generating vectors are scanned by descending G-weight.
template <class F>
std::vector<Summand<typename F::Scalar>> decompose(const F& f, const WeightModule<typename F::Scalar>& M) {
    using S = typename F::Scalar;
    const Mode& mode = f.mode();
    const double tol = F::exact ? 0.0 : f.tol();
    std::vector<Summand<S>> out;

    WeightModule<S> U = M;
    Mat<S> B = Mat<S>::identity(M.dim());  // U -> M
    Mat<S> P = Mat<S>::identity(M.dim());  // M -> U

    while (U.dim() > 0) {
        const std::size_t n = U.dim();
        const auto classes = detail::weight_classes(U);
        std::optional<std::tuple<StdObject, Mat<S>, Mat<S>>> found;

        auto attempt = [&](const StdObject& obj, const std::vector<Mat<S>>& images) {
            if (found) return;
            WeightModule<S> sm = make_std(f, obj);
            Mat<S> iota = detail::hstack(images);
            if (intertwining_residual(f, sm, U, iota) > tol * 1e3 * std::max(1.0, iota.max_abs())) return;
            auto pi = detail::find_retraction(f, U, sm, iota);
            if (pi) found = std::make_tuple(obj, iota, *pi);
        };

        const Mat<S> XY = U.X * U.Y;
        // 1. Projective covers generated by w with XY w != 0 at lattice E-weight.
        for (const auto& cl : classes) {
            const auto& bv = U.basis[cl[0]];
            if (!mode.in_lattice(bv.w.e)) continue;
            for (std::size_t idx : cl) {
                Mat<S> w(n, 1);
                w(idx, 0) = S(1);
                Mat<S> xyw = XY * w;
                if (xyw.is_zero(tol * std::max(1.0, XY.max_abs()))) continue;
                long ln = static_cast<long>(mode.lattice_index(bv.w.e)->get_si());
                attempt(StdObject::proj(ln, bv.w.g, bv.p), {w, U.X * w, U.Y * w, xyw});
                if (found) break;
            }
            if (found) break;
        }
        // 2./3. Kac modules from highest-weight vectors.
        for (int pass = 0; pass < 2 && !found; ++pass) {
            for (const auto& cl : classes) {
                const auto& bv = U.basis[cl[0]];
                bool lattice = mode.in_lattice(bv.w.e);
                if ((pass == 0) == lattice) continue;
                for (const auto& v : detail::class_kernel<S>({&U.X}, cl, n, tol)) {
                    Mat<S> yv = U.Y * v;
                    if (yv.is_zero(tol * std::max(1.0, U.Y.max_abs()))) continue;
                    attempt(StdObject::kac(bv.w.e, bv.w.g, bv.p), {v, yv});
                    if (found) break;
                }
                if (found) break;
            }
        }
        // 4. Anti-Kac modules from w in ker Y with X w != 0.
        if (!found) {
            for (const auto& cl : classes) {
                const auto& bv = U.basis[cl[0]];
                for (const auto& w : detail::class_kernel<S>({&U.Y}, cl, n, tol)) {
                    Mat<S> xw = U.X * w;
                    if (xw.is_zero(tol * std::max(1.0, U.X.max_abs()))) continue;
                    attempt(StdObject::anti_kac(bv.w.e, bv.w.g, bv.p), {w, xw});
                    if (found) break;
                }
                if (found) break;
            }
        }
        // 5. One-dimensional modules.
        if (!found) {
            for (const auto& cl : classes) {
                const auto& bv = U.basis[cl[0]];
                if (!mode.in_lattice(bv.w.e)) continue;
                for (const auto& w : detail::class_kernel<S>({&U.X, &U.Y}, cl, n, tol)) {
                    long ln = static_cast<long>(mode.lattice_index(bv.w.e)->get_si());
                    attempt(StdObject::eps(ln, bv.w.g, bv.p), {w});
                    if (found) break;
                }
                if (found) break;
            }
        }
        if (!found) throw ValidationError("decompose: unrecognized summand");

        auto& [obj, iota, pi] = *found;
        out.push_back({obj.canon(mode), B * iota, pi * P});

        // Complement ker(pi), computed weight class by weight class.
        std::vector<Mat<S>> comp;
        for (const auto& cl : classes) {
            auto ks = detail::class_kernel<S>({&pi}, cl, n, tol);
            comp.insert(comp.end(), ks.begin(), ks.end());
        }
        if (comp.size() + obj.dim() != n) throw ValidationError("decompose: complement has the wrong dimension");
        if (comp.empty()) break;
        Mat<S> Bc = detail::hstack(comp);
        Mat<S> Lc = left_inverse(Bc, tol);
        Mat<S> along = Mat<S>::identity(n) - iota * pi;
        P = Lc * along * P;
        B = B * Bc;
        U = detail::restrict_to(f, U, Bc, Lc);
    }
    return out;
}

}  // namespace gl11
