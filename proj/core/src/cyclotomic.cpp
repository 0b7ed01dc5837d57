#include "gl11/cyclotomic.hpp"

#include "gl11/error.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace gl11 {

namespace {

using Poly = std::vector<Z>;  // coefficient of x^k at index k

Poly poly_divide_exact(const Poly& num, const Poly& den) {
    Poly rem = num;
    std::size_t dn = den.size() - 1;
    Poly quo(num.size() - dn, Z(0));
    for (std::size_t k = num.size(); k-- > dn;) {
        Z c = rem[k] / den[dn];
        quo[k - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= c * den[j];
    }
    return quo;
}

Poly cyclotomic_poly(int n) {
    Poly p(static_cast<std::size_t>(n) + 1, Z(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
    return p;
}

std::unique_ptr<CycloContext> build(int n) {
    auto ctx = std::make_unique<CycloContext>();
    ctx->n = n;
    ctx->poly = cyclotomic_poly(n);
    ctx->phi = static_cast<int>(ctx->poly.size()) - 1;
    const int phi = ctx->phi;
    const int count = std::max(n, 2 * phi - 1);
    ctx->reduce.assign(static_cast<std::size_t>(count), std::vector<Q>(static_cast<std::size_t>(phi), Q(0)));
    for (int k = 0; k < count; ++k) {
        auto& row = ctx->reduce[static_cast<std::size_t>(k)];
        if (k < phi) {
            row[static_cast<std::size_t>(k)] = 1;
            continue;
        }
        // zeta^k = zeta * zeta^{k-1}; shift and fold the top coefficient.
        const auto& prev = ctx->reduce[static_cast<std::size_t>(k - 1)];
        Q top = prev[static_cast<std::size_t>(phi - 1)];
        for (int j = phi - 1; j >= 1; --j) row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
        row[0] = 0;
        for (int j = 0; j < phi; ++j) row[static_cast<std::size_t>(j)] -= top * Q(ctx->poly[static_cast<std::size_t>(j)]);
    }
    return ctx;
}

}  // namespace

const CycloContext* CycloContext::get(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CycloContext>> cache;
    if (n < 1) throw BackendError("invalid cyclotomic conductor");
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = build(n);
    return slot.get();
}

Cyclo Cyclo::zeta_power(int n, long k) {
    const CycloContext* ctx = CycloContext::get(n);
    long kk = ((k % n) + n) % n;
    return Cyclo(ctx, ctx->reduce[static_cast<std::size_t>(kk)]);
}

Cyclo Cyclo::rational(int n, const Q& x) {
    const CycloContext* ctx = CycloContext::get(n);
    std::vector<Q> c(static_cast<std::size_t>(ctx->phi), Q(0));
    c[0] = x;
    return Cyclo(ctx, std::move(c));
}

void Cyclo::promote(const CycloContext* ctx) {
    if (ctx_ == ctx || ctx == nullptr) return;
    if (ctx_ != nullptr) throw BackendError("mixing cyclotomic fields of different conductors");
    Q x = coeffs_[0];
    coeffs_.assign(static_cast<std::size_t>(ctx->phi), Q(0));
    coeffs_[0] = x;
    ctx_ = ctx;
}

bool Cyclo::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        if (coeffs_[k] != 0) return false;
    return true;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    promote(o.ctx_);
    if (o.ctx_ == nullptr && ctx_ != nullptr) {
        coeffs_[0] += o.coeffs_[0];
        return *this;
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    promote(o.ctx_);
    if (o.ctx_ == nullptr && ctx_ != nullptr) {
        coeffs_[0] -= o.coeffs_[0];
        return *this;
    }
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

Cyclo operator-(Cyclo a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (o.ctx_ == nullptr) {
        const Q& s = o.coeffs_[0];
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    if (ctx_ == nullptr) {
        Q s = coeffs_[0];
        *this = o;
        for (auto& c : coeffs_) c *= s;
        return *this;
    }
    if (ctx_ != o.ctx_) throw BackendError("mixing cyclotomic fields of different conductors");
    const int phi = ctx_->phi;
    std::vector<Q> prod(static_cast<std::size_t>(2 * phi - 1), Q(0));
    for (int i = 0; i < phi; ++i) {
        const Q& x = coeffs_[static_cast<std::size_t>(i)];
        if (x == 0) continue;
        for (int j = 0; j < phi; ++j) {
            const Q& y = o.coeffs_[static_cast<std::size_t>(j)];
            if (y != 0) prod[static_cast<std::size_t>(i + j)] += x * y;
        }
    }
    std::vector<Q> out(prod.begin(), prod.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        const Q& c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const auto& red = ctx_->reduce[static_cast<std::size_t>(k)];
        for (int j = 0; j < phi; ++j) out[static_cast<std::size_t>(j)] += c * red[static_cast<std::size_t>(j)];
    }
    coeffs_ = std::move(out);
    return *this;
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw BackendError("division by zero in cyclotomic field");
    if (ctx_ == nullptr) return Cyclo(Q(1) / coeffs_[0]);
    if (is_rational()) return rational(ctx_->n, Q(1) / coeffs_[0]);
    // Solve M y = e_0 where column j of M is this * zeta^j.
    const int phi = ctx_->phi;
    const auto P = static_cast<std::size_t>(phi);
    std::vector<std::vector<Q>> m(P, std::vector<Q>(P + 1, Q(0)));
    for (int j = 0; j < phi; ++j) {
        Cyclo col = *this * zeta_power(ctx_->n, j);
        for (std::size_t i = 0; i < P; ++i) m[i][static_cast<std::size_t>(j)] = col.coeffs_[i];
    }
    m[0][P] = 1;
    for (std::size_t c = 0; c < P; ++c) {
        std::size_t piv = c;
        while (piv < P && m[piv][c] == 0) ++piv;
        if (piv == P) throw BackendError("singular multiplication matrix in cyclotomic inverse");
        std::swap(m[piv], m[c]);
        Q inv = Q(1) / m[c][c];
        for (std::size_t k = c; k <= P; ++k) m[c][k] *= inv;
        for (std::size_t i = 0; i < P; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Q f = m[i][c];
            for (std::size_t k = c; k <= P; ++k) m[i][k] -= f * m[c][k];
        }
    }
    std::vector<Q> y(P);
    for (std::size_t i = 0; i < P; ++i) y[i] = m[i][P];
    return Cyclo(ctx_, std::move(y));
}

bool operator==(const Cyclo& a, const Cyclo& b) { return (a - b).is_zero(); }

std::complex<double> Cyclo::to_complex() const {
    if (ctx_ == nullptr) return {to_double(coeffs_[0]), 0.0};
    std::complex<double> out{0, 0};
    const double step = 2.0 * M_PI / ctx_->n;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        out += to_double(coeffs_[k]) * std::polar(1.0, step * static_cast<double>(k));
    }
    return out;
}

std::string Cyclo::format() const {
    if (ctx_ == nullptr) return to_string(coeffs_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ", ";
        os << to_string(coeffs_[k]);
    }
    os << "]@zeta" << ctx_->n;
    return os.str();
}

}  // namespace gl11
