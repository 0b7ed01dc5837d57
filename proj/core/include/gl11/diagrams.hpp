#pragma once

#include "gl11/mtrace.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gl11 {

// Strand color: a standard object, or a Kirby color of a generic degree.
struct Color {
    std::optional<StdObject> obj;
    std::optional<Degree> kirby;

    static Color of(const StdObject& o) { return {o, std::nullopt}; }
    static Color omega(const Degree& d) { return {std::nullopt, d}; }
    bool is_kirby() const { return kirby.has_value(); }
};

std::string to_string(const Color& c);
// Accepts standard object text or "Omega(e, g)".
Color parse_color(const std::string& text);

struct Strand {
    Color color;
};

// One wire of a horizontal level: which strand it belongs to and whether it
// points up (object V) or down (object V*).
struct Wire {
    int strand = 0;
    bool up = true;
};

enum class SliceKind {
    Identity,
    CupLeft,    // coev_left:  1 -> V (x) V*   (left wire up)
    CupRight,   // coev_right: 1 -> V* (x) V   (left wire down)
    CapLeft,    // ev_left:    V* (x) V -> 1   (left wire down)
    CapRight,   // ev_right:   V (x) V* -> 1   (left wire up)
    CrossPos,   // braiding c on wires (p, p+1): the bottom-left strand passes over
    CrossNeg,   // inverse braiding: the bottom-right strand passes over
    TwistPos,   // twist theta on wire p
    TwistNeg,   // inverse twist on wire p
    Coupon,     // an explicit morphism replacing `inputs` wires by `outputs`
};

std::string to_string(SliceKind k);
SliceKind parse_slice_kind(const std::string& text);

// Coupon operations: "id", "x" (nilpotent endomorphism of a projective),
// "scalar" (multiple of the identity) or a name resolved at evaluation time.
struct CouponSpec {
    int inputs = 0;
    std::vector<Wire> outputs;
    std::string op = "id";
    Q scalar{1};
};

struct Slice {
    SliceKind kind = SliceKind::Identity;
    int position = 0;
    int strand = -1;  // cups only
    CouponSpec coupon;
};

// A colored ribbon graph as a sequence of horizontal slices read bottom to top.
struct MorseWord {
    std::vector<Strand> strands;
    std::vector<Wire> inputs;
    std::vector<Slice> slices;
    // Requested total framing per component, keyed by any strand of it.
    std::map<int, long> framings;
    long signature_defect = 0;
};

struct CrossingInfo {
    std::size_t slice = 0;
    int over_strand = 0, under_strand = 0;
    int sign = 0;  // +1 right-handed
};

// Combinatorial data of a word: strand components, crossings, writhes.
struct Topology {
    std::vector<int> component_of_strand;
    int components = 0;
    std::vector<CrossingInfo> crossings;
    std::vector<long> self_writhe;  // per component, including twist slices
    long total_writhe = 0;
    std::vector<Wire> outputs;
    std::vector<bool> has_coupon;  // per component
};

// Validates arities, orientations and colors; throws ValidationError.
Topology analyze(const MorseWord& w);

// Inserts twist slices so that every component with a requested framing gets it.
MorseWord apply_framings(const MorseWord& w);

// Components colored by Kirby colors, in component order.
std::vector<int> surgery_components(const MorseWord& w, const Topology& t);

// Linking matrix of the given components; the diagonal holds the framings
// (the requested framing, or the blackboard self-writhe).
std::vector<std::vector<long>> linking_matrix(const MorseWord& w, const Topology& t, const std::vector<int>& comps);

// Signature of an integer symmetric matrix by exact congruence diagonalization.
long signature(const std::vector<std::vector<long>>& A);

// Builders.
MorseWord unknot(const Color& c, long framing = 0);
// Closure of a braid on n strands; generator k > 0 is c at wires (k-1, k),
// k < 0 its inverse. Colors are given per braid strand and must be constant
// along each component.
MorseWord braid_closure(int n, const std::vector<int>& gens, const std::vector<Color>& colors);
MorseWord hopf_link(const Color& a, const Color& b);
MorseWord trefoil(const Color& c);
MorseWord figure_eight(const Color& c);
// Inserts a meridian loop colored `c` around the wire at `position` after
// slice index `at`, realizing the double braiding of the loop with that wire.
// With reversed = true the loop runs the other way around.
MorseWord insert_meridian(const MorseWord& w, std::size_t at, int position, const Color& c, bool reversed = false);

// Surgery presentation of (surface of genus g) x S^1 with n vertical strands:
// the band sum of g Borromean rings along a central component colored
// Omega_beta, with the marked-point colors as meridians of that component.
// A point with sign -1 gives a meridian running the other way.
struct MarkedPoint {
    StdObject color;
    int sign = 1;
};
MorseWord verlinde_link(int g, const std::vector<Degree>& alphas, const std::vector<Degree>& betas,
                        const Degree& beta, const std::vector<MarkedPoint>& points);

// Two presentations of S^3 with a framed V-colored unknot: directly, and with
// an extra +1-framed Kirby-colored unknot clasping the V-unknot.
std::pair<MorseWord, MorseWord> kirby_one_pair(const StdObject& v, long framing);

// ---------------------------------------------------------------------------
// Evaluation

template <class F>
class Evaluator {
public:
    using S = typename F::Scalar;

    Evaluator(const F& f, const MorseWord& w, std::vector<StdObject> colors,
              const std::map<std::string, Mat<S>>* named = nullptr)
        : f_(f), w_(w), colors_(std::move(colors)), named_(named) {
        up_.resize(colors_.size());
        down_.resize(colors_.size());
    }

    const WeightModule<S>& module(const Wire& x) {
        auto& slot = x.up ? up_[x.strand] : down_[x.strand];
        if (!slot) {
            WeightModule<S> m = make_std(f_, colors_.at(x.strand));
            slot = x.up ? m : dual(f_, m);
        }
        return *slot;
    }

    WeightModule<S> module_of(const std::vector<Wire>& ws) {
        WeightModule<S> m;
        m.X = Mat<S>(1, 1);
        m.Y = Mat<S>(1, 1);
        m.basis = {{{WeightComponent(0), WeightComponent(0)}, Parity(0), "1"}};
        m.K = {S(1)};
        m.Kinv = {S(1)};
        for (const auto& x : ws) m = tensor(f_, m, module(x));
        return m;
    }

    void start(const std::vector<Wire>& inputs) {
        wires_ = inputs;
        std::size_t d = 1;
        for (const auto& x : wires_) d *= module(x).dim();
        state_ = Mat<S>::identity(d);
    }

    const Mat<S>& state() const { return state_; }
    const std::vector<Wire>& wires() const { return wires_; }

    // Applies one slice; positions are shifted by `offset` wires.
    void apply(const Slice& s, int offset = 0) {
        const std::size_t p = static_cast<std::size_t>(s.position + offset);
        switch (s.kind) {
            case SliceKind::Identity: return;
            case SliceKind::CupLeft: {
                Wire a{s.strand, true}, b{s.strand, false};
                local(p, 0, coev_left(module(a)), {a, b});
                return;
            }
            case SliceKind::CupRight: {
                Wire a{s.strand, false}, b{s.strand, true};
                local(p, 0, coev_right(module(b)), {a, b});
                return;
            }
            case SliceKind::CapLeft: {
                need(p, 2);
                local(p, 2, ev_left(module(wires_[p + 1])), {});
                return;
            }
            case SliceKind::CapRight: {
                need(p, 2);
                local(p, 2, ev_right(module(wires_[p])), {});
                return;
            }
            case SliceKind::CrossPos:
            case SliceKind::CrossNeg: cross(p, s.kind == SliceKind::CrossPos); return;
            case SliceKind::TwistPos:
            case SliceKind::TwistNeg: {
                need(p, 1);
                const Wire x = wires_[p];
                Mat<S> th = twist(f_, module(x));
                if (s.kind == SliceKind::TwistNeg) {
                    auto inv = inverse(th, F::exact ? 0.0 : f_.tol());
                    if (!inv) throw BackendError("twist is not invertible");
                    th = *inv;
                }
                local(p, 1, th, {x});
                return;
            }
            case SliceKind::Coupon: {
                const auto& c = s.coupon;
                need(p, static_cast<std::size_t>(c.inputs));
                std::vector<Wire> ins(wires_.begin() + static_cast<long>(p),
                                      wires_.begin() + static_cast<long>(p) + c.inputs);
                local(p, static_cast<std::size_t>(c.inputs), coupon_matrix(c, ins), c.outputs);
                return;
            }
        }
    }

    // Braiding on wires (p, p+1); positive = c, otherwise c^{-1}.
    void cross(std::size_t p, bool positive) {
        need(p, 2);
        const Wire a = wires_[p], b = wires_[p + 1];
        Mat<S> m = positive ? braiding(f_, module(a), module(b)) : braiding_inv(f_, module(b), module(a));
        local(p, 2, m, {b, a});
    }

private:
    void need(std::size_t p, std::size_t k) const {
        if (p + k > wires_.size()) throw ValidationError("slice position out of range");
    }

    Mat<S> coupon_matrix(const CouponSpec& c, const std::vector<Wire>& ins) {
        const WeightModule<S> src = module_of(ins);
        const WeightModule<S> dst = module_of(c.outputs);
        Mat<S> m;
        if (c.op == "id" || c.op == "scalar") {
            if (src.dim() != dst.dim()) throw ValidationError("identity coupon changes dimension");
            m = Mat<S>::scalar(c.op == "id" ? S(1) : f_.from_q(c.scalar), src.dim());
        } else if (c.op == "x") {
            if (ins.size() != 1 || c.outputs.size() != 1 || src.dim() != 4 || dst.dim() != 4)
                throw ValidationError("coupon 'x' needs a single projective wire");
            m = proj_nilpotent<S>();
            if (!ins[0].up) m = m.transpose();
        } else {
            if (!named_ || !named_->count(c.op)) throw ValidationError("unknown coupon '" + c.op + "'");
            m = named_->at(c.op);
        }
        if (m.rows() != dst.dim() || m.cols() != src.dim()) throw ValidationError("coupon shape mismatch");
        const double tol = F::exact ? 0.0 : f_.tol() * 1e3;
        if (intertwining_residual(f_, src, dst, m) > tol)
            throw ValidationError("coupon '" + c.op + "' is not a morphism");
        return m;
    }

    // Replaces wires [p, p+k) by `out` through the local matrix.
    void local(std::size_t p, std::size_t k, const Mat<S>& m, const std::vector<Wire>& out) {
        need(p, k);
        std::size_t L = 1, Kin = 1, R = 1, Kout = 1;
        for (std::size_t i = 0; i < p; ++i) L *= module(wires_[i]).dim();
        for (std::size_t i = p; i < p + k; ++i) Kin *= module(wires_[i]).dim();
        for (std::size_t i = p + k; i < wires_.size(); ++i) R *= module(wires_[i]).dim();
        for (const auto& x : out) Kout *= module(x).dim();
        if (m.rows() != Kout || m.cols() != Kin) throw ValidationError("slice map has the wrong shape");
        struct Entry {
            std::size_t o, i;
            S v;
        };
        std::vector<Entry> nz;
        for (std::size_t o = 0; o < Kout; ++o)
            for (std::size_t i = 0; i < Kin; ++i)
                if (!(m(o, i) == S(0))) nz.push_back({o, i, m(o, i)});
        const std::size_t cols = state_.cols();
        Mat<S> next(L * Kout * R, cols);
        for (std::size_t l = 0; l < L; ++l)
            for (const auto& e : nz) {
                const std::size_t src0 = (l * Kin + e.i) * R, dst0 = (l * Kout + e.o) * R;
                for (std::size_t r = 0; r < R; ++r)
                    for (std::size_t c = 0; c < cols; ++c) {
                        const S& x = state_(src0 + r, c);
                        if (x == S(0)) continue;
                        next(dst0 + r, c) += e.v * x;
                    }
            }
        state_ = std::move(next);
        std::vector<Wire> nw(wires_.begin(), wires_.begin() + static_cast<long>(p));
        nw.insert(nw.end(), out.begin(), out.end());
        nw.insert(nw.end(), wires_.begin() + static_cast<long>(p + k), wires_.end());
        wires_ = std::move(nw);
    }

    const F& f_;
    const MorseWord& w_;
    std::vector<StdObject> colors_;
    const std::map<std::string, Mat<S>>* named_;
    std::vector<std::optional<WeightModule<S>>> up_, down_;
    std::vector<Wire> wires_;
    Mat<S> state_;
};

namespace detail {

inline std::vector<StdObject> concrete_colors(const MorseWord& w) {
    std::vector<StdObject> out;
    for (const auto& s : w.strands) {
        if (!s.color.obj) throw ValidationError("strand colored by a Kirby color needs expansion first");
        out.push_back(*s.color.obj);
    }
    return out;
}

// Expands Kirby-colored components into weighted concrete colorings.
template <class F>
std::vector<std::pair<typename F::Scalar, std::vector<StdObject>>> expand(const F& f, const MorseWord& w,
                                                                         const Topology& t) {
    using S = typename F::Scalar;
    std::vector<std::pair<S, std::vector<StdObject>>> out;
    std::vector<StdObject> base(w.strands.size());
    std::map<int, FormalColor<S>> omegas;  // component -> color
    for (std::size_t i = 0; i < w.strands.size(); ++i) {
        const auto& c = w.strands[i].color;
        if (c.obj) {
            base[i] = *c.obj;
            continue;
        }
        const int comp = t.component_of_strand[i];
        if (!omegas.count(comp)) omegas.emplace(comp, kirby_color(f, *c.kirby));
    }
    out.emplace_back(S(1), base);
    for (const auto& [comp, color] : omegas) {
        std::vector<std::pair<S, std::vector<StdObject>>> next;
        for (const auto& [coef, cols] : out)
            for (const auto& [obj, c] : color.terms) {
                auto cc = cols;
                for (std::size_t i = 0; i < w.strands.size(); ++i)
                    if (t.component_of_strand[i] == comp) cc[i] = obj;
                next.emplace_back(coef * c, std::move(cc));
            }
        out = std::move(next);
    }
    return out;
}

inline bool generic_simple(const Mode& m, const StdObject& o) {
    return (o.kind == StdObject::Kind::Kac || o.kind == StdObject::Kind::AntiKac) && !m.in_lattice(o.alpha);
}

}  // namespace detail

// Evaluates a word with concrete colors as a matrix from the input wires to
// the output wires.
template <class F>
Mat<typename F::Scalar> evaluate(const F& f, const MorseWord& w,
                                 const std::map<std::string, Mat<typename F::Scalar>>* named = nullptr) {
    analyze(w);
    Evaluator<F> ev(f, w, detail::concrete_colors(w), named);
    ev.start(w.inputs);
    for (const auto& s : w.slices) ev.apply(s);
    return ev.state();
}

// <T_V> for a (1,1)-tangle whose open strand is a simple object.
template <class F>
typename F::Scalar bracket(const F& f, const MorseWord& w,
                           const std::map<std::string, Mat<typename F::Scalar>>* named = nullptr) {
    using S = typename F::Scalar;
    const Topology t = analyze(w);
    if (w.inputs.size() != 1 || t.outputs.size() != 1) throw ValidationError("bracket needs a (1,1)-tangle");
    const Mat<S> m = evaluate(f, w, named);
    const double tol = F::exact ? 0.0 : f.tol() * 1e3 * std::max(1.0, m.max_abs());
    if (!(m - Mat<S>::scalar(m(0, 0), m.rows())).is_zero(tol))
        throw ValidationError("bracket: tangle is not a multiple of the identity");
    return m(0, 0);
}

struct CutEdge {
    std::size_t slice = 0;  // the slice creating the edge
    int position = 0;       // wire position just above that slice
    Wire wire;
};

// First edge colored by a generic simple object in slice order, otherwise
// the first projective edge.
inline std::optional<CutEdge> choose_cut(const Mode& mode, const MorseWord& w, const std::vector<StdObject>& colors) {
    for (int pass = 0; pass < 2; ++pass) {
        auto eligible = [&](const Wire& x) {
            const StdObject& o = colors.at(x.strand);
            return pass == 0 ? detail::generic_simple(mode, o) : o.kind == StdObject::Kind::Proj;
        };
        for (std::size_t i = 0; i < w.inputs.size(); ++i)
            if (eligible(w.inputs[i])) return CutEdge{0, static_cast<int>(i), w.inputs[i]};
        for (std::size_t k = 0; k < w.slices.size(); ++k) {
            const Slice& s = w.slices[k];
            if (s.kind == SliceKind::CupLeft || s.kind == SliceKind::CupRight) {
                Wire a{s.strand, s.kind == SliceKind::CupLeft}, b{s.strand, s.kind != SliceKind::CupLeft};
                if (eligible(a)) return CutEdge{k + 1, s.position, a};
                if (eligible(b)) return CutEdge{k + 1, s.position + 1, b};
            } else if (s.kind == SliceKind::Coupon) {
                for (std::size_t j = 0; j < s.coupon.outputs.size(); ++j)
                    if (eligible(s.coupon.outputs[j]))
                        return CutEdge{k + 1, s.position + static_cast<int>(j), s.coupon.outputs[j]};
            }
        }
    }
    return std::nullopt;
}

// F' of a closed graph with concrete colors: cut along the chosen edge and
// take the modified trace of the resulting endomorphism. The cut strand is
// re-routed in front of the diagram: the incoming end crosses over the wires
// to its left, the outgoing end over the wires to its right.
template <class F>
typename F::Scalar fprime_concrete(const F& f, const MorseWord& w, const std::vector<StdObject>& colors,
                                   const std::map<std::string, Mat<typename F::Scalar>>* named = nullptr) {
    using S = typename F::Scalar;
    if (!w.inputs.empty()) throw ValidationError("fprime needs a closed graph");
    const auto cut = choose_cut(f.mode(), w, colors);
    if (!cut) throw ValidationError("fprime: no generic simple or projective edge to cut");
    Evaluator<F> ev(f, w, colors, named);
    ev.start({cut->wire});
    for (std::size_t k = 0; k < cut->slice; ++k) ev.apply(w.slices[k], 1);
    // wires: in, L (cut->position wires), edge, R
    const int p = cut->position;
    // Crossings of the re-routed strand with its own component change the
    // blackboard framing; they are undone by twists on the cut strand.
    const Topology topo = analyze(w);
    const int comp = topo.component_of_strand[cut->wire.strand];
    long added_writhe = 0;
    auto cross_over = [&](std::size_t j) {
        const Wire moving = ev.wires()[j], crossed = ev.wires()[j + 1];
        if (topo.component_of_strand[crossed.strand] == comp) added_writhe += moving.up == crossed.up ? 1 : -1;
        ev.cross(j, true);
    };
    for (int j = 0; j < p; ++j) cross_over(static_cast<std::size_t>(j));
    const std::size_t n = ev.wires().size();
    for (std::size_t j = static_cast<std::size_t>(p) + 1; j + 1 < n; ++j) cross_over(j);
    for (std::size_t k = cut->slice; k < w.slices.size(); ++k) ev.apply(w.slices[k], 0);
    if (ev.wires().size() != 1) throw ValidationError("fprime: graph is not closed");
    Slice undo;
    undo.kind = added_writhe > 0 ? SliceKind::TwistNeg : SliceKind::TwistPos;
    for (long k = 0; k < std::labs(added_writhe); ++k) ev.apply(undo, 0);
    const Mat<S> T = ev.state();
    return mtrace(f, T, ev.module(cut->wire));
}

// F' of a closed graph; Kirby-colored components are expanded multilinearly.
template <class F>
typename F::Scalar fprime(const F& f, const MorseWord& w0,
                          const std::map<std::string, Mat<typename F::Scalar>>* named = nullptr) {
    using S = typename F::Scalar;
    const MorseWord w = apply_framings(w0);
    const Topology t = analyze(w);
    if (!t.outputs.empty()) throw ValidationError("fprime needs a closed graph");
    S total(0);
    for (const auto& [coef, cols] : detail::expand(f, w, t)) total += coef * fprime_concrete(f, w, cols, named);
    return total;
}

// Writhe-renormalized invariant of a link whose components are all colored
// V(alpha, a)_0: (q^{2 alpha a - alpha})^{wr} F'.
template <class F>
typename F::Scalar renormalized(const F& f, const MorseWord& w) {
    const Topology t = analyze(w);
    std::optional<StdObject> col;
    for (const auto& s : w.strands) {
        if (!s.color.obj || s.color.obj->kind != StdObject::Kind::Kac)
            throw ValidationError("renormalized invariant needs Kac-colored strands");
        if (col && !(*col == *s.color.obj)) throw ValidationError("renormalized invariant needs a single color");
        col = s.color.obj;
    }
    if (!col) throw ValidationError("empty link");
    const auto& al = col->alpha;
    const auto& a = col->a;
    const auto unit = f.qpow(Q(2) * (al * a) - Exponent(al));
    typename F::Scalar pw(1);
    const long wr = t.total_writhe + 0;
    for (long k = 0; k < std::labs(wr); ++k) pw = pw * unit;
    if (wr < 0) pw = f.inv(pw);
    // Requested framings are not applied: the renormalization removes them.
    MorseWord plain = w;
    plain.framings.clear();
    return pw * fprime(f, plain);
}

struct CompatibilityDefect {
    int component = 0;
    Degree value;     // omega on the framed longitude
    bool zero = true;
};

bool degree_is_zero(const Mode& mode, const Degree& d);

// omega(longitude) for each surgery component: f_i g_i + sum over crossings
// where the component passes under an edge of sign * degree(edge).
std::vector<CompatibilityDefect> compatibility(const Mode& mode, const MorseWord& w, const Topology& t);

template <class S>
struct CgpResult {
    S value;
    S fprime;
    int surgery_components = 0;
    long sigma = 0;
    long m = 0;
    std::vector<CompatibilityDefect> defects;
};

// D^{-1-l} delta^{m - sigma(L)} F'(L u T).
template <class F>
CgpResult<typename F::Scalar> cgp(const F& f, const MorseWord& w0,
                                  const std::map<std::string, Mat<typename F::Scalar>>* named = nullptr) {
    using S = typename F::Scalar;
    const MorseWord w = apply_framings(w0);
    const Topology t = analyze(w);
    const auto surg = surgery_components(w, t);
    if (surg.empty()) {
        const auto cut = choose_cut(f.mode(), w, detail::concrete_colors(w));
        if (!cut) throw ValidationError("cgp: presentation is not computable (no generic projective edge)");
    }
    CgpResult<S> res;
    res.surgery_components = static_cast<int>(surg.size());
    res.sigma = signature(linking_matrix(w, t, surg));
    res.m = w.signature_defect;
    res.defects = compatibility(f.mode(), w, t);
    res.fprime = fprime(f, w, named);
    const auto nz = normalization(f);
    auto ipow = [&](S x, long e) {
        S out(1);
        if (e < 0) {
            x = f.inv(x);
            e = -e;
        }
        for (long k = 0; k < e; ++k) out = out * x;
        return out;
    };
    res.value = ipow(nz.D, -1 - res.surgery_components) * ipow(nz.delta, res.m - res.sigma) * res.fprime;
    return res;
}

}  // namespace gl11
