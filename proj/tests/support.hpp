#pragma once

#include "gl11/gl11.hpp"
#include "gl11/sampling.hpp"


namespace gl11::testing {

inline Mode arb_mode() { return Mode::arbitrary(Q(1, 2), Q(1, 3)); }

inline NumericField arb_field(double tol = 1e-9) { return NumericField(arb_mode(), tol); }

template <class F>
double tol_of(const F& f) {
    return F::exact ? 0.0 : f.tol();
}

template <class F>
bool close(const F& f, const typename F::Scalar& x, const typename F::Scalar& y, double scale = 1.0) {
    if constexpr (F::exact) {
        return x == y;
    } else {
        return std::abs(x - y) <= f.tol() * std::max({scale, 1.0, std::abs(x), std::abs(y)});
    }
}

template <class F>
bool close(const F& f, const Mat<typename F::Scalar>& x, const Mat<typename F::Scalar>& y, double scale = 1.0) {
    if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
    if constexpr (F::exact) {
        return (x - y).is_zero(0.0);
    } else {
        return residual(x, y) <= f.tol() * std::max({scale, 1.0, x.max_abs(), y.max_abs()});
    }
}

}  // namespace gl11::testing
