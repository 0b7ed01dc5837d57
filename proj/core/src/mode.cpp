#include "gl11/mode.hpp"

#include "gl11/error.hpp"

#include <cmath>

namespace gl11 {

Exponent operator*(const WeightComponent& x, const WeightComponent& y) {
    return {x.a * y.a, x.a * y.b + x.b * y.a, x.b * y.b};
}

Mode Mode::arbitrary(Q hbar_re, Q hbar_im, WeightSet w) {
    if (hbar_re == 0 && is_integer(hbar_im))
        throw ValidationError("hbar must satisfy e^hbar != +-1 (got " + to_string(hbar_re) + " + " + to_string(hbar_im) +
                              " pi i)");
    Mode m;
    m.kind_ = ModeKind::Arbitrary;
    m.weights_ = w;
    m.hbar_re_ = std::move(hbar_re);
    m.hbar_im_ = std::move(hbar_im);
    if (m.hbar_re_ == 0) m.unit_ = Q(1) / m.hbar_im_;
    return m;
}

Mode Mode::rou_odd(int r, WeightSet w) {
    if (r < 3 || r % 2 == 0) throw ValidationError("rou-odd requires an odd r >= 3");
    Mode m;
    m.kind_ = ModeKind::RouOdd;
    m.weights_ = w;
    m.r_ = r;
    m.hbar_im_ = Q(2, r);
    m.hbar_im_.canonicalize();
    m.unit_ = Q(r, 2);
    m.unit_->canonicalize();
    return m;
}

Mode Mode::rou_even(int r, WeightSet w) {
    if (r < 2 || r % 2 != 0) throw ValidationError("rou-even requires an even r >= 2");
    Mode m;
    m.kind_ = ModeKind::RouEven;
    m.weights_ = w;
    m.r_ = r;
    m.hbar_im_ = Q(1, r);
    m.hbar_im_.canonicalize();
    m.unit_ = Q(r);
    return m;
}

std::complex<double> Mode::hbar() const { return {to_double(hbar_re_), M_PI * to_double(hbar_im_)}; }

WeightComponent Mode::canon(const WeightComponent& z) const {
    if (!unit_) return z;
    return {z.a + z.b * *unit_, Q(0)};
}

Exponent Mode::canon(const Exponent& x) const {
    if (!unit_) return x;
    const Q& u = *unit_;
    return {x.c0 + x.c1 * u + x.c2 * u * u, Q(0), Q(0)};
}

std::optional<Z> Mode::lattice_index(const WeightComponent& z0) const {
    WeightComponent z = canon(z0);
    if (unit_) {
        Q n = z.a / *unit_;
        if (!is_integer(n)) return std::nullopt;
        return n.get_num();
    }
    if (z.a != 0 || !is_integer(z.b)) return std::nullopt;
    return z.b.get_num();
}

bool Mode::is_generic(const WeightComponent& le, const WeightComponent& lg) const {
    WeightComponent e = canon(le);
    WeightComponent g = canon(lg);
    switch (kind_) {
        case ModeKind::Arbitrary:
            return !in_lattice(e);
        case ModeKind::RouOdd: {
            Q em = mod_q(e.a, Q(1));
            if (integral()) return !(em == 0 || em == Q(1, 2));
            Q gm = mod_q(g.a, Q(1));
            return !(gm == 0 && (em == 0 || em == Q(1, 2)));
        }
        case ModeKind::RouEven: {
            Q em = mod_q(e.a, Q(2));
            if (integral()) return em != 0;
            Q gm = mod_q(g.a, Q(1));
            return !(em == 0 && gm == 0);
        }
    }
    return false;
}

void Mode::check_g_weight(const WeightComponent& g0) const {
    if (!integral()) return;
    WeightComponent g = canon(g0);
    if (g.b != 0 || !is_integer(g.a))
        throw ValidationError("integral weight mode requires integer G-weights, got " + to_string(g0));
}

int Mode::kirby_size() const { return is_rou() ? r_ * r_ : 1; }

std::string Mode::describe() const {
    std::string w = integral() ? ", integral weights" : "";
    switch (kind_) {
        case ModeKind::Arbitrary:
            return "arbitrary q, hbar = " + to_string(hbar_re_) + " + " + to_string(hbar_im_) + " pi i" + w;
        case ModeKind::RouOdd:
            return "odd root of unity, r = " + std::to_string(r_) + w;
        case ModeKind::RouEven:
            return "even root of unity, r = " + std::to_string(r_) + w;
    }
    return "";
}

std::string to_string(const WeightComponent& z) {
    if (z.b == 0) return to_string(z.a);
    std::string bs = (z.b == 1) ? "" : (z.b == -1 ? "-" : to_string(z.b) + "*");
    std::string s = bs + "u";
    if (z.a == 0) return s;
    if (s[0] == '-') return to_string(z.a) + s;
    return to_string(z.a) + "+" + s;
}

// Accepts "a", "a+bu", "a-bu", "bu", "u", "-u", "a+b*u".
WeightComponent parse_weight_component(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '*') s.push_back(c);
    if (s.empty()) throw ValidationError("empty weight component");
    if (s.back() != 'u') return {parse_q(s), Q(0)};
    s.pop_back();
    // Find the split between the rational part and the u-coefficient: the last
    // sign that is not at position 0 and not following an exponent marker.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string apart = split == std::string::npos ? "0" : s.substr(0, split);
    std::string bpart = split == std::string::npos ? s : s.substr(split);
    Q b;
    if (bpart.empty() || bpart == "+")
        b = 1;
    else if (bpart == "-")
        b = -1;
    else
        b = parse_q(bpart);
    return {parse_q(apart), b};
}

}  // namespace gl11
