#include "gl11/diagrams.hpp"

#include <algorithm>
#include <numeric>

namespace gl11 {

std::string to_string(const Color& c) {
    if (c.obj) return to_string(*c.obj);
    if (c.kirby) return "Omega(" + to_string(c.kirby->e) + ", " + to_string(c.kirby->g) + ")";
    return "<none>";
}

Color parse_color(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.rfind("Omega(", 0) == 0 || t.rfind("omega(", 0) == 0) {
        if (t.back() != ')') throw ValidationError("bad Kirby color '" + text + "'");
        const std::string inner = t.substr(6, t.size() - 7);
        const auto comma = inner.find(',');
        Degree d;
        if (comma == std::string::npos) {
            d.e = parse_weight_component(inner);
        } else {
            d.e = parse_weight_component(inner.substr(0, comma));
            d.g = parse_weight_component(inner.substr(comma + 1));
        }
        return Color::omega(d);
    }
    return Color::of(parse_std_object(text));
}

namespace {

const std::vector<std::pair<SliceKind, std::string>>& slice_names() {
    static const std::vector<std::pair<SliceKind, std::string>> names = {
        {SliceKind::Identity, "identity"},   {SliceKind::CupLeft, "cup_left"},
        {SliceKind::CupRight, "cup_right"},  {SliceKind::CapLeft, "cap_left"},
        {SliceKind::CapRight, "cap_right"},  {SliceKind::CrossPos, "crossing_pos"},
        {SliceKind::CrossNeg, "crossing_neg"}, {SliceKind::TwistPos, "twist_pos"},
        {SliceKind::TwistNeg, "twist_neg"},  {SliceKind::Coupon, "coupon"},
    };
    return names;
}

bool same_color(const Color& a, const Color& b) {
    if (a.obj && b.obj) return *a.obj == *b.obj;
    if (a.kirby && b.kirby) return a.kirby->e == b.kirby->e && a.kirby->g == b.kirby->g;
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string to_string(SliceKind k) {
    for (const auto& [kind, name] : slice_names())
        if (kind == k) return name;
    return "?";
}

SliceKind parse_slice_kind(const std::string& text) {
    for (const auto& [kind, name] : slice_names())
        if (name == text) return kind;
    throw ValidationError("unknown slice kind '" + text + "'");
}

Topology analyze(const MorseWord& w) {
    const int ns = static_cast<int>(w.strands.size());
    auto check_strand = [&](int s) {
        if (s < 0 || s >= ns) throw ValidationError("strand id " + std::to_string(s) + " out of range");
    };
    UnionFind uf(w.strands.size());
    std::vector<Wire> wires = w.inputs;
    for (const auto& x : wires) check_strand(x.strand);
    std::vector<CrossingInfo> crossings;
    std::vector<std::pair<int, int>> twists;  // strand, sign
    std::vector<bool> coupon_strand(w.strands.size(), false);

    for (std::size_t k = 0; k < w.slices.size(); ++k) {
        const Slice& s = w.slices[k];
        const std::string where = "slice " + std::to_string(k) + " (" + to_string(s.kind) + ")";
        if (s.position < 0) throw ValidationError(where + ": negative position");
        const std::size_t p = static_cast<std::size_t>(s.position);
        auto need = [&](std::size_t n) {
            if (p + n > wires.size()) throw ValidationError(where + ": position out of range");
        };
        switch (s.kind) {
            case SliceKind::Identity: break;
            case SliceKind::CupLeft:
            case SliceKind::CupRight: {
                check_strand(s.strand);
                if (p > wires.size()) throw ValidationError(where + ": position out of range");
                bool left_up = s.kind == SliceKind::CupLeft;
                wires.insert(wires.begin() + static_cast<long>(p), {Wire{s.strand, left_up}, Wire{s.strand, !left_up}});
                break;
            }
            case SliceKind::CapLeft:
            case SliceKind::CapRight: {
                need(2);
                const Wire a = wires[p], b = wires[p + 1];
                bool left_up = s.kind == SliceKind::CapRight;
                if (a.up != left_up || b.up == left_up) throw ValidationError(where + ": orientation mismatch");
                if (!same_color(w.strands[a.strand].color, w.strands[b.strand].color))
                    throw ValidationError(where + ": color mismatch");
                uf.join(a.strand, b.strand);
                wires.erase(wires.begin() + static_cast<long>(p), wires.begin() + static_cast<long>(p) + 2);
                break;
            }
            case SliceKind::CrossPos:
            case SliceKind::CrossNeg: {
                need(2);
                const Wire a = wires[p], b = wires[p + 1];
                const bool pos = s.kind == SliceKind::CrossPos;
                CrossingInfo c;
                c.slice = k;
                c.over_strand = pos ? a.strand : b.strand;
                c.under_strand = pos ? b.strand : a.strand;
                c.sign = (pos ? 1 : -1) * (a.up == b.up ? 1 : -1);
                crossings.push_back(c);
                std::swap(wires[p], wires[p + 1]);
                break;
            }
            case SliceKind::TwistPos:
            case SliceKind::TwistNeg:
                need(1);
                twists.emplace_back(wires[p].strand, s.kind == SliceKind::TwistPos ? 1 : -1);
                break;
            case SliceKind::Coupon: {
                const auto& c = s.coupon;
                if (c.inputs < 0) throw ValidationError(where + ": negative input count");
                need(static_cast<std::size_t>(c.inputs));
                std::vector<int> touched;
                for (int j = 0; j < c.inputs; ++j) touched.push_back(wires[p + j].strand);
                for (const auto& o : c.outputs) {
                    check_strand(o.strand);
                    touched.push_back(o.strand);
                }
                for (int t : touched) coupon_strand[t] = true;
                for (std::size_t j = 1; j < touched.size(); ++j) uf.join(touched[0], touched[j]);
                wires.erase(wires.begin() + static_cast<long>(p), wires.begin() + static_cast<long>(p) + c.inputs);
                wires.insert(wires.begin() + static_cast<long>(p), c.outputs.begin(), c.outputs.end());
                break;
            }
        }
    }

    Topology t;
    t.outputs = wires;
    t.component_of_strand.assign(w.strands.size(), -1);
    std::map<int, int> root_to_comp;
    for (int s = 0; s < ns; ++s) {
        int r = uf.find(s);
        auto it = root_to_comp.find(r);
        if (it == root_to_comp.end()) it = root_to_comp.emplace(r, t.components++).first;
        t.component_of_strand[s] = it->second;
    }
    t.self_writhe.assign(t.components, 0);
    t.has_coupon.assign(t.components, false);
    for (int s = 0; s < ns; ++s)
        if (coupon_strand[s]) t.has_coupon[t.component_of_strand[s]] = true;
    for (const auto& c : crossings) {
        t.total_writhe += c.sign;
        int a = t.component_of_strand[c.over_strand], b = t.component_of_strand[c.under_strand];
        if (a == b) t.self_writhe[a] += c.sign;
    }
    for (const auto& [s, sign] : twists) {
        t.total_writhe += sign;
        t.self_writhe[t.component_of_strand[s]] += sign;
    }
    t.crossings = std::move(crossings);
    // Kirby colors must be constant on components and cannot meet coupons.
    for (int s = 0; s < ns; ++s) {
        const auto& c = w.strands[s].color;
        if (!c.obj && !c.kirby) throw ValidationError("strand " + std::to_string(s) + " has no color");
        if (!c.kirby) continue;
        int comp = t.component_of_strand[s];
        if (t.has_coupon[comp]) throw ValidationError("Kirby-colored component passes through a coupon");
        for (int u = 0; u < ns; ++u)
            if (t.component_of_strand[u] == comp && !same_color(c, w.strands[u].color))
                throw ValidationError("Kirby-colored component has mixed colors");
    }
    return t;
}

MorseWord apply_framings(const MorseWord& w) {
    if (w.framings.empty()) return w;
    const Topology t = analyze(w);
    std::map<int, long> delta;  // component -> twists to add
    for (const auto& [strand, framing] : w.framings) {
        if (strand < 0 || strand >= static_cast<int>(w.strands.size()))
            throw ValidationError("framing refers to an unknown strand");
        int comp = t.component_of_strand[strand];
        long d = framing - t.self_writhe[comp];
        if (delta.count(comp) && delta[comp] != d) throw ValidationError("conflicting framings for one component");
        delta[comp] = d;
    }
    MorseWord out = w;
    out.slices.clear();
    auto add_twists = [&](int comp, int position) {
        auto it = delta.find(comp);
        if (it == delta.end() || it->second == 0) return;
        for (long k = 0; k < std::labs(it->second); ++k) {
            Slice s;
            s.kind = it->second > 0 ? SliceKind::TwistPos : SliceKind::TwistNeg;
            s.position = position;
            out.slices.push_back(s);
        }
        it->second = 0;
    };
    for (std::size_t i = 0; i < w.inputs.size(); ++i) add_twists(t.component_of_strand[w.inputs[i].strand], static_cast<int>(i));
    for (const auto& s : w.slices) {
        out.slices.push_back(s);
        if (s.kind == SliceKind::CupLeft || s.kind == SliceKind::CupRight)
            add_twists(t.component_of_strand[s.strand], s.position);
        else if (s.kind == SliceKind::Coupon)
            for (std::size_t j = 0; j < s.coupon.outputs.size(); ++j)
                add_twists(t.component_of_strand[s.coupon.outputs[j].strand], s.position + static_cast<int>(j));
    }
    return out;
}

std::vector<int> surgery_components(const MorseWord& w, const Topology& t) {
    std::vector<int> out;
    for (std::size_t s = 0; s < w.strands.size(); ++s) {
        if (!w.strands[s].color.kirby) continue;
        int comp = t.component_of_strand[s];
        if (std::find(out.begin(), out.end(), comp) == out.end()) out.push_back(comp);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long>> linking_matrix(const MorseWord& w, const Topology& t, const std::vector<int>& comps) {
    const std::size_t n = comps.size();
    std::vector<std::vector<long>> twice(n, std::vector<long>(n, 0));
    auto index = [&](int comp) -> long {
        auto it = std::find(comps.begin(), comps.end(), comp);
        return it == comps.end() ? -1 : it - comps.begin();
    };
    for (const auto& c : t.crossings) {
        long a = index(t.component_of_strand[c.over_strand]), b = index(t.component_of_strand[c.under_strand]);
        if (a < 0 || b < 0 || a == b) continue;
        twice[a][b] += c.sign;
        twice[b][a] += c.sign;
    }
    std::vector<std::vector<long>> A(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (twice[i][j] % 2 != 0) throw ValidationError("odd crossing count between closed components");
            A[i][j] = twice[i][j] / 2;
        }
    for (std::size_t i = 0; i < n; ++i) {
        A[i][i] = t.self_writhe[comps[i]];
        for (const auto& [strand, framing] : w.framings)
            if (t.component_of_strand[strand] == comps[i]) A[i][i] = framing;
    }
    return A;
}

long signature(const std::vector<std::vector<long>>& A0) {
    const std::size_t n = A0.size();
    std::vector<std::vector<Q>> A(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (A0[i].size() != n) throw ValidationError("signature: matrix is not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (A0[i][j] != A0[j][i]) throw ValidationError("signature: matrix is not symmetric");
            A[i][j] = Q(A0[i][j]);
        }
    }
    long sig = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (A[k][k] == 0) {
            // Bring a nonzero diagonal entry to position k, or create one.
            std::size_t piv = n;
            for (std::size_t j = k + 1; j < n; ++j)
                if (A[j][j] != 0) {
                    piv = j;
                    break;
                }
            if (piv < n) {
                std::swap(A[k], A[piv]);
                for (auto& row : A) std::swap(row[k], row[piv]);
            } else {
                std::size_t off = n;
                for (std::size_t j = k + 1; j < n; ++j)
                    if (A[k][j] != 0) {
                        off = j;
                        break;
                    }
                if (off == n) continue;  // zero row and column
                for (std::size_t c = 0; c < n; ++c) A[k][c] += A[off][c];
                for (std::size_t r = 0; r < n; ++r) A[r][k] += A[r][off];
            }
        }
        const Q d = A[k][k];
        sig += d > 0 ? 1 : -1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (A[i][k] == 0) continue;
            const Q m = A[i][k] / d;
            for (std::size_t c = k; c < n; ++c) A[i][c] -= m * A[k][c];
            for (std::size_t r = k; r < n; ++r) A[r][i] = (r == i) ? A[i][i] : A[r][i];
            for (std::size_t c = k; c < n; ++c) A[c][i] = A[i][c];
        }
    }
    return sig;
}

bool degree_is_zero(const Mode& mode, const Degree& d) {
    const WeightComponent e = mode.canon(d.e), g = mode.canon(d.g);
    switch (mode.kind()) {
        case ModeKind::Arbitrary:
            if (!mode.integral()) return e == WeightComponent(0);
            {
                auto n = mode.lattice_index(e);
                return n && mpz_even_p(n->get_mpz_t());
            }
        case ModeKind::RouOdd:
            return e.b == 0 && is_integer(e.a) && (mode.integral() || (g.b == 0 && is_integer(g.a)));
        case ModeKind::RouEven:
            return e.b == 0 && is_integer(e.a) && mpz_even_p(Z(floor_q(e.a)).get_mpz_t()) &&
                   (mode.integral() || (g.b == 0 && is_integer(g.a)));
    }
    return false;
}

std::vector<CompatibilityDefect> compatibility(const Mode& mode, const MorseWord& w, const Topology& t) {
    std::vector<CompatibilityDefect> out;
    const auto surg = surgery_components(w, t);
    const auto A = linking_matrix(w, t, surg);
    auto degree_of_strand = [&](int s) {
        const auto& c = w.strands[s].color;
        return c.kirby ? *c.kirby : c.obj->degree();
    };
    for (std::size_t i = 0; i < surg.size(); ++i) {
        const int comp = surg[i];
        int any = -1;
        for (std::size_t s = 0; s < w.strands.size(); ++s)
            if (t.component_of_strand[s] == comp) any = static_cast<int>(s);
        const Degree own = degree_of_strand(any);
        Degree v{Q(A[i][i]) * own.e, Q(A[i][i]) * own.g};
        for (const auto& c : t.crossings) {
            if (t.component_of_strand[c.under_strand] != comp) continue;
            if (t.component_of_strand[c.over_strand] == comp) continue;
            const Degree d = degree_of_strand(c.over_strand);
            v.e = v.e + Q(c.sign) * d.e;
            v.g = v.g + Q(c.sign) * d.g;
        }
        v.e = mode.canon(v.e);
        v.g = mode.canon(v.g);
        out.push_back({comp, v, degree_is_zero(mode, v)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

Slice cup(SliceKind k, int position, int strand) {
    Slice s;
    s.kind = k;
    s.position = position;
    s.strand = strand;
    return s;
}

Slice at(SliceKind k, int position) {
    Slice s;
    s.kind = k;
    s.position = position;
    return s;
}

}  // namespace

MorseWord unknot(const Color& c, long framing) {
    MorseWord w;
    w.strands = {{c}};
    w.slices = {cup(SliceKind::CupLeft, 0, 0), at(SliceKind::CapRight, 0)};
    if (framing != 0) w.framings[0] = framing;
    return w;
}

MorseWord braid_closure(int n, const std::vector<int>& gens, const std::vector<Color>& colors) {
    if (n < 1 || static_cast<int>(colors.size()) != n) throw ValidationError("braid_closure: need one color per strand");
    MorseWord w;
    for (const auto& c : colors) w.strands.push_back({c});
    for (int k = 0; k < n; ++k) w.slices.push_back(cup(SliceKind::CupLeft, k, k));
    for (int g : gens) {
        if (g == 0 || std::abs(g) >= n) throw ValidationError("braid_closure: generator out of range");
        w.slices.push_back(at(g > 0 ? SliceKind::CrossPos : SliceKind::CrossNeg, std::abs(g) - 1));
    }
    for (int k = n - 1; k >= 0; --k) w.slices.push_back(at(SliceKind::CapRight, k));
    analyze(w);
    return w;
}

MorseWord hopf_link(const Color& a, const Color& b) { return braid_closure(2, {1, 1}, {a, b}); }
MorseWord trefoil(const Color& c) { return braid_closure(2, {1, 1, 1}, {c, c}); }
MorseWord figure_eight(const Color& c) { return braid_closure(3, {1, -2, 1, -2}, {c, c, c}); }

MorseWord insert_meridian(const MorseWord& w, std::size_t at_slice, int position, const Color& c, bool reversed) {
    if (at_slice > w.slices.size()) throw ValidationError("insert_meridian: slice index out of range");
    MorseWord out = w;
    const int s = static_cast<int>(out.strands.size());
    out.strands.push_back({c});
    const std::vector<Slice> loop = {cup(reversed ? SliceKind::CupRight : SliceKind::CupLeft, position + 1, s),
                                     at(SliceKind::CrossPos, position), at(SliceKind::CrossPos, position),
                                     at(reversed ? SliceKind::CapLeft : SliceKind::CapRight, position + 1)};
    out.slices.insert(out.slices.begin() + static_cast<long>(at_slice), loop.begin(), loop.end());
    analyze(out);
    return out;
}

MorseWord verlinde_link(int g, const std::vector<Degree>& alphas, const std::vector<Degree>& betas,
                        const Degree& beta, const std::vector<MarkedPoint>& points) {
    if (g < 0 || static_cast<int>(alphas.size()) != g || static_cast<int>(betas.size()) != g)
        throw ValidationError("verlinde_link: need g degrees alpha_i and beta_i");
    const int n = 2 * g + 1;
    std::vector<Color> colors = {Color::omega(beta)};
    for (int i = 0; i < g; ++i) {
        colors.push_back(Color::omega(alphas[i]));
        colors.push_back(Color::omega(betas[i]));
    }
    std::vector<int> gens;
    for (int i = 0; i < g; ++i) {
        // Carry the central strand in front of the earlier pairs, hook the
        // Borromean braid (s1 s2^-1)^3 onto pair i, then carry it back.
        for (int j = 0; j < 2 * i; ++j) gens.push_back(j + 1);
        for (int k = 0; k < 3; ++k) {
            gens.push_back(2 * i + 1);
            gens.push_back(-(2 * i + 2));
        }
        for (int j = 2 * i - 1; j >= 0; --j) gens.push_back(-(j + 1));
    }
    MorseWord w = braid_closure(n, gens, colors);
    for (int s = 0; s < n; ++s) w.framings[s] = 0;
    const std::size_t at_slice = static_cast<std::size_t>(n) + gens.size();
    for (const auto& p : points) {
        if (p.sign != 1 && p.sign != -1) throw ValidationError("verlinde_link: point sign must be +1 or -1");
        w = insert_meridian(w, at_slice, 0, Color::of(p.color), p.sign < 0);
    }
    return w;
}

std::pair<MorseWord, MorseWord> kirby_one_pair(const StdObject& v, long framing) {
    MorseWord a = unknot(Color::of(v), framing);
    a.framings[0] = framing;
    const Degree dv = v.degree();
    const Degree du{-dv.e, -dv.g};
    MorseWord b = unknot(Color::of(v), framing + 1);
    b.framings[0] = framing + 1;
    b = insert_meridian(b, 1, 0, Color::omega(du));
    b.framings[1] = 1;
    return {a, b};
}

}  // namespace gl11
