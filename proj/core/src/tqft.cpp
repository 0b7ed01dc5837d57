#include "gl11/tqft.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gl11 {

SurfaceData normalize_surface(const Mode& mode, const SurfaceData& s0) {
    SurfaceData s = s0;
    if (s.genus < 0) throw ValidationError("surface genus must be non-negative");
    const Degree ref = reference_degree(mode);
    if (s.alphas.empty()) s.alphas.assign(static_cast<std::size_t>(s.genus), ref);
    if (s.betas.empty()) s.betas.assign(static_cast<std::size_t>(s.genus), ref);
    if (static_cast<int>(s.alphas.size()) != s.genus || static_cast<int>(s.betas.size()) != s.genus)
        throw ValidationError("surface needs one alpha and one beta degree per handle");
    for (const auto& p : s.points) {
        if (p.color.kind != StdObject::Kind::Kac) throw ValidationError("marked points must be colored by Kac modules");
        if (p.sign != 1 && p.sign != -1) throw ValidationError("marked point sign must be +1 or -1");
    }
    return s;
}

StdObject positive_color(const MarkedPoint& p) {
    if (p.sign > 0) return p.color;
    return StdObject::kac(-p.color.alpha, WeightComponent(1) - p.color.a, p.color.p + Parity(1));
}

long binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long out = 1;
    for (long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::map<long, long> graded_dims(const Mode& mode, int g) {
    if (g < 1) throw ValidationError("graded_dims: genus must be at least 1");
    std::map<long, long> out;
    // Basis colorings: mu and eps_1..eps_{2g-3} in {0, 1}; the degree is
    // mu + sum_j (-1)^j eps_j.
    const int bits = g == 1 ? 0 : 2 * g - 2;
    long lift = 1;
    const int r = mode.is_rou() ? mode.r() : 0;
    if (mode.is_rou())
        for (int k = 0; k < 2 * g; ++k) lift *= r;
    for (long mask = 0; mask < (1L << bits); ++mask) {
        long d = mask & 1;
        for (int j = 1; j < bits; ++j)
            if (mask >> j & 1) d += (j % 2 == 0) ? 1 : -1;
        if (mode.is_rou() && d % r != 0) continue;
        out[d] += lift;
    }
    return out;
}

std::map<long, long> graded_dims_formula(const Mode& mode, int g) {
    if (g < 1) throw ValidationError("graded_dims_formula: genus must be at least 1");
    std::map<long, long> out;
    if (!mode.is_rou()) {
        for (long d = -(g - 1); d <= g - 1; ++d) out[d] = binomial(2L * g - 2, g - 1 - std::labs(d));
        return out;
    }
    const long r = mode.r();
    long lift = 1;
    for (int k = 0; k < 2 * g; ++k) lift *= r;
    for (long n = -(g - 1) / r; n <= (g - 1) / r; ++n) out[n * r] = lift * binomial(2L * g - 2, g - 1 - std::labs(n) * r);
    return out;
}

namespace {

Slice make_slice(SliceKind k, int position, int strand = -1) {
    Slice s;
    s.kind = k;
    s.position = position;
    s.strand = strand;
    return s;
}

// Inserts coupon and twist slices on the up wire at `position`, right after
// slice index `after`.
void decorate(MorseWord& w, std::size_t after, int position, int strand, bool x, long twists) {
    std::vector<Slice> extra;
    if (x) {
        Slice c = make_slice(SliceKind::Coupon, position);
        c.coupon.inputs = 1;
        c.coupon.outputs = {Wire{strand, true}};
        c.coupon.op = "x";
        extra.push_back(c);
    }
    for (long k = 0; k < std::labs(twists); ++k)
        extra.push_back(make_slice(twists > 0 ? SliceKind::TwistPos : SliceKind::TwistNeg, position));
    w.slices.insert(w.slices.begin() + static_cast<long>(after) + 1, extra.begin(), extra.end());
}

}  // namespace

MorseWord torus_pairing_word(const Mode& mode, const TorusPairingSpec& spec) {
    if (spec.parallel && spec.twisted) throw ValidationError("torus pairing: parallel cores need the untwisted gluing");
    if (spec.twisted) {
        MorseWord w = unknot(Color::of(spec.core));
        decorate(w, 0, 0, 0, spec.x, spec.twists);
        if (spec.other) w = insert_meridian(w, 1, 0, Color::of(*spec.other));
        analyze(w);
        return w;
    }
    MorseWord w = unknot(Color::omega(reference_degree(mode)));
    w.framings[0] = 0;
    if (spec.other) w = insert_meridian(w, 1, 0, Color::of(*spec.other), !spec.parallel);
    w = insert_meridian(w, 1, 0, Color::of(spec.core));
    // The core meridian was inserted as cup, two crossings, cap at slice 1.
    decorate(w, 1, 1, static_cast<int>(w.strands.size()) - 1, spec.x, spec.twists);
    analyze(w);
    return w;
}

// ---------------------------------------------------------------------------
// Conway polynomial by skein recursion

namespace {

using Poly = std::vector<long>;

void add_into(Poly& a, const Poly& b, long sign, int shift) {
    if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + shift, 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += sign * b[k];
}

struct Step {
    std::size_t level;
    int pos;
    bool up;
    friend bool operator==(const Step& x, const Step& y) { return x.level == y.level && x.pos == y.pos && x.up == y.up; }
};

bool is_cup(SliceKind k) { return k == SliceKind::CupLeft || k == SliceKind::CupRight; }
bool is_cap(SliceKind k) { return k == SliceKind::CapLeft || k == SliceKind::CapRight; }
bool is_cross(SliceKind k) { return k == SliceKind::CrossPos || k == SliceKind::CrossNeg; }

Poly conway_rec(const std::vector<Slice>& slices) {
    // Orientation of every wire at every level.
    std::vector<std::vector<bool>> levels(1);
    for (const auto& s : slices) {
        std::vector<bool> next = levels.back();
        const auto p = static_cast<std::size_t>(s.position);
        if (is_cup(s.kind)) {
            const bool left_up = s.kind == SliceKind::CupLeft;
            next.insert(next.begin() + static_cast<long>(p), {left_up, !left_up});
        } else if (is_cap(s.kind)) {
            next.erase(next.begin() + static_cast<long>(p), next.begin() + static_cast<long>(p) + 2);
        } else {
            std::swap(next[p], next[p + 1]);
        }
        levels.push_back(next);
    }

    std::vector<bool> cup_seen(slices.size(), false);
    std::vector<int> first_visit(slices.size(), 0);  // +1 over, -1 under
    std::optional<std::size_t> bad;
    int components = 0;
    for (std::size_t c = 0; c < slices.size() && !bad; ++c) {
        if (!is_cup(slices[c].kind) || cup_seen[c]) continue;
        ++components;
        cup_seen[c] = true;
        const int cp = slices[c].position;
        const Step start{c + 1, slices[c].kind == SliceKind::CupLeft ? cp : cp + 1, true};
        Step st = start;
        do {
            if (st.up) {
                const Slice& s = slices[st.level];
                const int sp = s.position;
                if (is_cross(s.kind)) {
                    if (st.pos == sp || st.pos == sp + 1) {
                        const bool over = (s.kind == SliceKind::CrossPos) == (st.pos == sp);
                        if (first_visit[st.level] == 0) {
                            first_visit[st.level] = over ? 1 : -1;
                            if (!over) {
                                bad = st.level;
                                break;
                            }
                        }
                        st.pos = st.pos == sp ? sp + 1 : sp;
                    }
                    ++st.level;
                } else if (is_cup(s.kind)) {
                    if (st.pos >= sp) st.pos += 2;
                    ++st.level;
                } else {
                    if (st.pos == sp || st.pos == sp + 1) {
                        st.pos = st.pos == sp ? sp + 1 : sp;
                        st.up = false;
                    } else {
                        if (st.pos > sp + 1) st.pos -= 2;
                        ++st.level;
                    }
                }
            } else {
                const std::size_t k = st.level - 1;
                const Slice& s = slices[k];
                const int sp = s.position;
                if (is_cross(s.kind)) {
                    if (st.pos == sp || st.pos == sp + 1) {
                        const int next = st.pos == sp ? sp + 1 : sp;
                        const bool over = (s.kind == SliceKind::CrossPos) == (next == sp);
                        if (first_visit[k] == 0) {
                            first_visit[k] = over ? 1 : -1;
                            if (!over) {
                                bad = k;
                                break;
                            }
                        }
                        st.pos = next;
                    }
                    --st.level;
                } else if (is_cap(s.kind)) {
                    if (st.pos >= sp) st.pos += 2;
                    --st.level;
                } else {
                    if (st.pos == sp || st.pos == sp + 1) {
                        cup_seen[k] = true;
                        st.pos = st.pos == sp ? sp + 1 : sp;
                        st.up = true;
                    } else {
                        if (st.pos > sp + 1) st.pos -= 2;
                        --st.level;
                    }
                }
            }
        } while (!(st == start));
    }
    if (!bad) return components == 1 ? Poly{1} : Poly{0};

    const std::size_t k = *bad;
    const Slice& s = slices[k];
    const auto p = static_cast<std::size_t>(s.position);
    const bool left_up = levels[k][p];
    const bool co = left_up == levels[k][p + 1];
    const int sign = (s.kind == SliceKind::CrossPos ? 1 : -1) * (co ? 1 : -1);

    std::vector<Slice> switched = slices;
    switched[k].kind = s.kind == SliceKind::CrossPos ? SliceKind::CrossNeg : SliceKind::CrossPos;
    std::vector<Slice> smoothed = slices;
    if (co) {
        smoothed.erase(smoothed.begin() + static_cast<long>(k));
    } else {
        const SliceKind cap = left_up ? SliceKind::CapRight : SliceKind::CapLeft;
        const SliceKind cup = left_up ? SliceKind::CupRight : SliceKind::CupLeft;
        smoothed[k] = make_slice(cap, s.position);
        smoothed.insert(smoothed.begin() + static_cast<long>(k) + 1, make_slice(cup, s.position, 0));
    }
    // nabla(L_+) - nabla(L_-) = z nabla(L_0)
    Poly out = conway_rec(switched);
    add_into(out, conway_rec(smoothed), sign, 1);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace

std::vector<long> conway_polynomial(const MorseWord& w) {
    analyze(w);
    if (!w.inputs.empty()) throw ValidationError("conway_polynomial: the diagram must be closed");
    std::vector<Slice> slices;
    for (const auto& s : w.slices) {
        if (s.kind == SliceKind::Coupon) throw ValidationError("conway_polynomial: coupons are not supported");
        if (s.kind == SliceKind::Identity || s.kind == SliceKind::TwistPos || s.kind == SliceKind::TwistNeg) continue;
        slices.push_back(s);
    }
    if (slices.empty()) throw ValidationError("conway_polynomial: empty diagram");
    return conway_rec(slices);
}

std::map<long, long> alexander_polynomial(const std::vector<long>& conway) {
    std::map<long, long> out;
    for (std::size_t k = 0; k < conway.size(); ++k) {
        if (conway[k] == 0) continue;
        const long kk = static_cast<long>(k);
        for (long j = 0; j <= kk; ++j) out[kk - 2 * j] += conway[k] * binomial(kk, j) * (j % 2 == 0 ? 1 : -1);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

namespace {

std::string term(long coef, const std::string& var, bool first) {
    std::string out;
    if (coef < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    const long a = std::labs(coef);
    if (var.empty() || a != 1) out += std::to_string(a);
    if (!var.empty() && a != 1) out += "*";
    out += var;
    return out;
}

}  // namespace

std::string format_conway(const std::vector<long>& conway) {
    std::string out;
    for (std::size_t k = 0; k < conway.size(); ++k) {
        if (conway[k] == 0) continue;
        const std::string var = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
        out += term(conway[k], var, out.empty());
    }
    return out.empty() ? "0" : out;
}

std::string format_alexander(const std::map<long, long>& alex) {
    std::string out;
    for (auto it = alex.rbegin(); it != alex.rend(); ++it) {
        const long e = it->first;
        std::string var;
        if (e != 0) {
            const std::string pw = e % 2 == 0 ? std::to_string(e / 2) : std::to_string(e) + "/2";
            var = pw == "1" ? "t" : "t^" + pw;
        }
        out += term(it->second, var, out.empty());
    }
    return out.empty() ? "0" : out;
}

}  // namespace gl11
