#include "gl11/std_object.hpp"

#include "gl11/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <vector>

namespace gl11 {

StdObject StdObject::eps(long n, WeightComponent b, Parity p) {
    return {Kind::Eps, WeightComponent(Q(0), Q(n)), std::move(b), p};
}
StdObject StdObject::kac(WeightComponent alpha, WeightComponent a, Parity p) {
    return {Kind::Kac, std::move(alpha), std::move(a), p};
}
StdObject StdObject::anti_kac(WeightComponent alpha, WeightComponent a, Parity p) {
    return {Kind::AntiKac, std::move(alpha), std::move(a), p};
}
StdObject StdObject::proj(long n, WeightComponent b, Parity p) {
    return {Kind::Proj, WeightComponent(Q(0), Q(n)), std::move(b), p};
}

long StdObject::lattice_n() const {
    if (alpha.a != 0 || !is_integer(alpha.b))
        throw ValidationError("object " + to_string(*this) + " has no lattice index");
    return to_long(alpha.b);
}

std::size_t StdObject::dim() const {
    switch (kind) {
        case Kind::Eps: return 1;
        case Kind::Kac:
        case Kind::AntiKac: return 2;
        case Kind::Proj: return 4;
    }
    return 0;
}

bool StdObject::is_projective(const Mode& m) const {
    switch (kind) {
        case Kind::Eps: return false;
        case Kind::Kac:
        case Kind::AntiKac: return !m.in_lattice(alpha);
        case Kind::Proj: return true;
    }
    return false;
}

bool StdObject::is_simple(const Mode& m) const {
    switch (kind) {
        case Kind::Eps: return true;
        case Kind::Kac:
        case Kind::AntiKac: return !m.in_lattice(alpha);
        case Kind::Proj: return false;
    }
    return false;
}

StdObject StdObject::canon(const Mode& m) const {
    StdObject out = *this;
    if (kind == Kind::Eps || kind == Kind::Proj) {
        out.alpha = WeightComponent(Q(0), Q(lattice_n()));
    } else {
        out.alpha = m.canon(alpha);
    }
    out.a = m.canon(a);
    return out;
}

std::string to_string(const StdObject& o) {
    const std::string ps = "; p=" + std::to_string(o.p.v) + ")";
    switch (o.kind) {
        case StdObject::Kind::Eps: return "eps(n=" + std::to_string(o.lattice_n()) + ", b=" + to_string(o.a) + ps;
        case StdObject::Kind::Proj: return "P(n=" + std::to_string(o.lattice_n()) + ", b=" + to_string(o.a) + ps;
        case StdObject::Kind::Kac: return "V(" + to_string(o.alpha) + ", " + to_string(o.a) + ps;
        case StdObject::Kind::AntiKac: return "Vbar(" + to_string(o.alpha) + ", " + to_string(o.a) + ps;
    }
    return "";
}

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

}  // namespace

StdObject parse_std_object(const std::string& text) {
    const std::string s = strip(text);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')') throw ValidationError("malformed object '" + text + "'");
    std::string name = s.substr(0, open);
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::string> positional;
    std::map<std::string, std::string> named;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        auto eq = cur.find('=');
        if (eq == std::string::npos)
            positional.push_back(cur);
        else
            named[cur.substr(0, eq)] = cur.substr(eq + 1);
        cur.clear();
    };
    for (char c : body) {
        if (c == ',' || c == ';')
            flush();
        else
            cur.push_back(c);
    }
    flush();
    auto take = [&](const std::string& key, std::size_t pos) -> std::string {
        auto it = named.find(key);
        if (it != named.end()) return it->second;
        if (pos < positional.size()) return positional[pos];
        throw ValidationError("object '" + text + "' is missing field '" + key + "'");
    };
    Parity p(0);
    if (named.count("p")) p = Parity(static_cast<int>(to_long(parse_q(named["p"]))));
    try {
        if (name == "eps" || name == "e" || name == "p" || name == "proj") {
            long n = to_long(parse_q(take("n", 0)));
            WeightComponent b = parse_weight_component(take("b", 1));
            if (positional.size() > 2) p = Parity(static_cast<int>(to_long(parse_q(positional[2]))));
            return (name == "eps" || name == "e") ? StdObject::eps(n, b, p) : StdObject::proj(n, b, p);
        }
        if (name == "v" || name == "kac" || name == "vbar" || name == "antikac") {
            WeightComponent alpha = parse_weight_component(take("alpha", 0));
            WeightComponent a = parse_weight_component(take("a", 1));
            if (positional.size() > 2) p = Parity(static_cast<int>(to_long(parse_q(positional[2]))));
            return (name == "v" || name == "kac") ? StdObject::kac(alpha, a, p) : StdObject::anti_kac(alpha, a, p);
        }
    } catch (const ValidationError& e) {
        throw ValidationError("malformed object '" + text + "': " + e.what());
    }
    throw ValidationError("unknown object kind '" + name + "'");
}

}  // namespace gl11
