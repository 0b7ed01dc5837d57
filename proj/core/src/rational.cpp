#include "gl11/rational.hpp"

#include "gl11/error.hpp"

#include <cctype>

namespace gl11 {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

Q parse_decimal(const std::string& s) {
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        exp10 = std::stol(s.substr(epos + 1));
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) {
        neg = mant[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        } else {
            throw ValidationError("malformed number '" + s + "'");
        }
    }
    if (digits.empty()) throw ValidationError("malformed number '" + s + "'");
    Z num(digits, 10);
    Z ten(10);
    Z scale;
    long shift = exp10 - frac_digits;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Q out = shift >= 0 ? Q(num * scale) : Q(num, scale);
    out.canonicalize();
    return neg ? Q(-out) : out;
}

}  // namespace

Q parse_q(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw ValidationError("empty rational");
    if (s.find_first_of(".eE") != std::string::npos) return parse_decimal(s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
            return Q(Z(t, 10));
        }
        std::string ns = trim(s.substr(0, slash));
        std::string ds = trim(s.substr(slash + 1));
        if (!ns.empty() && ns[0] == '+') ns = ns.substr(1);
        Z d(ds, 10);
        if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
        Q out(Z(ns, 10), d);
        out.canonicalize();
        return out;
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed rational '" + s + "'");
    }
}

std::string to_string(const Q& x) { return x.get_str(); }

Z floor_q(const Q& x) {
    Z out;
    mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return out;
}

Q mod_q(const Q& x, const Q& m) {
    Q ratio = x / m;
    return x - m * Q(floor_q(ratio));
}

bool is_integer(const Q& x) { return x.get_den() == 1; }

long to_long(const Q& x) {
    if (!is_integer(x) || !x.get_num().fits_slong_p()) throw ValidationError("expected a small integer, got " + to_string(x));
    return x.get_num().get_si();
}

double to_double(const Q& x) { return x.get_d(); }

}  // namespace gl11
