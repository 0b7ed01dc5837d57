// Command-line front end: checks, invariants of diagrams, 3-manifold values,
// Verlinde formulas, graded dimensions, torus mapping class group and the
// Alexander-polynomial comparison.

#include "gl11/io.hpp"
#include "gl11/suite.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>

using namespace gl11;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_tolerance = 3;

struct Options {
    std::string mode = "arb";
    int r = 3;
    std::string hbar = "1,0";
    std::string weights = "all";
    std::string backend = "numeric";
    std::string format = "text";
    bool mode_given = false;
};

// GL11_TOL overrides every numeric tolerance; 0 means "use the pinned value".
double tolerance_override() {
    const char* env = std::getenv("GL11_TOL");
    if (!env || !*env) return 0;
    char* end = nullptr;
    const double t = std::strtod(env, &end);
    if (*end != '\0' || !(t > 0)) throw ValidationError(std::string("GL11_TOL must be a positive number (got '") + env + "')");
    return t;
}

double pick_tol(double pinned) {
    const double o = tolerance_override();
    return o > 0 ? o : pinned;
}

Mode make_mode(const Options& o) {
    const WeightSet w = o.weights == "integral" ? WeightSet::Integral : WeightSet::All;
    if (o.mode == "rou-odd") return Mode::rou_odd(o.r, w);
    if (o.mode == "rou-even") return Mode::rou_even(o.r, w);
    const auto comma = o.hbar.find(',');
    if (comma == std::string::npos) throw ValidationError("--hbar expects a,b (hbar = a + b*pi*i)");
    return Mode::arbitrary(parse_q(o.hbar.substr(0, comma)), parse_q(o.hbar.substr(comma + 1)), w);
}

std::string fmt(double x) { return CheckAccumulator::format(x); }

// Runs `fn` on the field selected by the options. A mode stored in an input
// file is used unless the mode was given on the command line.
template <class Fn>
Report with_field(const Options& o, const std::optional<Mode>& file_mode, Fn&& fn) {
    const Mode mode = (file_mode && !o.mode_given) ? *file_mode : make_mode(o);
    Report rep;
    if (o.backend == "exact") {
        if (!mode.is_rou()) throw ValidationError("--backend exact requires a root-of-unity mode");
        rep = fn(ExactField(mode));
    } else {
        rep = fn(NumericField(mode, pick_tol(1e-9)));
    }
    rep.mode = mode.describe();
    rep.backend = o.backend;
    return rep;
}

template <class F>
double tol_for(const F&, double pinned) {
    return F::exact ? 0.0 : pick_tol(pinned);
}

template <class S>
Table matrix_table(const std::string& title, const Mat<S>& m, const std::vector<std::string>& labels,
                   const std::function<std::string(const S&)>& format) {
    Table t;
    t.title = title;
    t.columns.push_back("");
    for (const auto& l : labels) t.columns.push_back(l);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row{labels.at(i)};
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format(m(i, j)));
        t.rows.push_back(row);
    }
    return t;
}

// Item names end in ", <field>"; the report header already names the field.
void add_item(Report& rep, Table& table, const CheckItem& item) {
    const std::string name = item.name.substr(0, item.name.find(", "));
    table.rows.push_back({name, fmt(item.residual), fmt(item.tolerance), item.passed ? "PASS" : "FAIL"});
    for (const auto& n : item.notes) rep.notes.push_back(name + ": " + n);
    if (!item.passed) rep.status = "fail";
}

Table check_table() { return Table{"checks", {"item", "residual", "tolerance", "result"}, {}}; }

// ---------------------------------------------------------------- check

template <class F>
Report run_check(const F& f, unsigned seed) {
    const double o = tolerance_override();
    const bool rou = f.mode().is_rou();
    Report rep;
    rep.command = "check";
    Table t = check_table();
    add_item(rep, t, check_modules(f, seed, 50, o));
    add_item(rep, t, check_ribbon(f, seed + 1, 20, o));
    add_item(rep, t, check_scalars(f, seed + 2, 10, o));
    add_item(rep, t, check_phi(f, seed + 3, 10, o));
    add_item(rep, t, check_modularity(f, o));
    add_item(rep, t, check_kirby(f, seed + 4, o));
    add_item(rep, t, check_verlinde(f, rou ? 1 : 2, rou ? 1 : 2, 1, seed + 5, o));
    add_item(rep, t, check_dims(f.mode(), rou ? 3 : 5));
    add_item(rep, t, check_mcg(f, o));
    add_item(rep, t, check_alexander(f, seed + 6, 10, o));
    rep.tables.push_back(t);
    return rep;
}

// ------------------------------------------------------------ invariant

void apply_color_overrides(MorseWord& w, const std::vector<std::string>& overrides) {
    for (const auto& spec : overrides) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) throw ValidationError("--color expects STRAND=COLOR (got '" + spec + "')");
        const int id = std::stoi(spec.substr(0, eq));
        if (id < 0 || id >= static_cast<int>(w.strands.size())) throw ValidationError("--color: no strand " + std::to_string(id));
        w.strands[static_cast<std::size_t>(id)].color = parse_color(spec.substr(eq + 1));
    }
}

template <class F>
Report run_invariant(const F& f, MorseWord w, bool renormalize) {
    using S = typename F::Scalar;
    Report rep;
    rep.command = "invariant";
    Table t{"invariant", {"quantity", "value"}, {}};
    const Topology top = analyze(w);
    if (renormalize) {
        t.rows.push_back({"renormalized F'", f.format(alexander(f, w))});
        try {
            const auto conway = conway_polynomial(w);
            t.rows.push_back({"Conway polynomial", format_conway(conway)});
            t.rows.push_back({"Alexander polynomial", format_alexander(alexander_polynomial(conway))});
        } catch (const ValidationError& e) {
            rep.notes.push_back(std::string("no Conway polynomial: ") + e.what());
        }
    } else if (top.outputs.empty() && w.inputs.empty()) {
        t.rows.push_back({"F'", f.format(fprime(f, w))});
    } else if (w.inputs.size() == 1 && top.outputs.size() == 1) {
        t.rows.push_back({"<T>", f.format(bracket(f, w))});
    } else {
        const Mat<S> m = evaluate(f, w);
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < std::max(m.rows(), m.cols()); ++k) labels.push_back(std::to_string(k));
        rep.tables.push_back(matrix_table<S>("tangle matrix", m, labels, [&](const S& x) { return f.format(x); }));
    }
    if (!w.strands.empty() && w.strands[0].color.obj) {
        try {
            t.rows.push_back({"d(" + to_string(*w.strands[0].color.obj) + ")", f.format(mdim(f, *w.strands[0].color.obj))});
        } catch (const ValidationError&) {
        }
    }
    t.rows.push_back({"components", std::to_string(top.components)});
    t.rows.push_back({"writhe", std::to_string(top.total_writhe)});
    rep.tables.insert(rep.tables.begin(), t);
    return rep;
}

// ------------------------------------------------------------------ cgp

template <class F>
Report run_cgp(const F& f, const std::vector<std::string>& files, const std::vector<MorseWord>& words) {
    using S = typename F::Scalar;
    Report rep;
    rep.command = "cgp";
    Table t{"3-manifold invariants", {"file", "value", "F'", "surgery components", "signature", "m", "compatible"}, {}};
    std::vector<S> values;
    for (std::size_t k = 0; k < words.size(); ++k) {
        const auto res = cgp(f, words[k]);
        bool compatible = true;
        for (const auto& d : res.defects) compatible = compatible && d.zero;
        if (!compatible) rep.notes.push_back(files[k] + ": cohomology class is not compatible with the framing");
        t.rows.push_back({files[k], f.format(res.value), f.format(res.fprime), std::to_string(res.surgery_components),
                          std::to_string(res.sigma), std::to_string(res.m), compatible ? "yes" : "no"});
        values.push_back(res.value);
    }
    rep.tables.push_back(t);
    if (values.size() > 1) {
        const double tol = tol_for(f, tolerance::cgp);
        Table c{"agreement with the first file", {"file", "residual", "tolerance", "result"}, {}};
        for (std::size_t k = 1; k < values.size(); ++k) {
            const double r = detail::rel(values[k], values[0]);
            const bool ok = r <= tol;
            c.rows.push_back({files[k], fmt(r), fmt(tol), ok ? "PASS" : "FAIL"});
            if (!ok) rep.status = "fail";
        }
        rep.tables.push_back(c);
    }
    return rep;
}

// ------------------------------------------------------------- verlinde

template <class F>
Report run_verlinde(const F& f, const SurfaceData& surf, const Degree& beta, bool surgery) {
    Report rep;
    rep.command = "verlinde";
    Table t{"state-space trace", {"quantity", "value"}, {}};
    t.rows.push_back({"genus", std::to_string(surf.genus)});
    t.rows.push_back({"marked points", std::to_string(surf.points.size())});
    t.rows.push_back({"beta", to_string(beta.e)});
    const auto closed = verlinde_closed(f, surf, beta);
    t.rows.push_back({"closed form", f.format(closed)});
    const bool feasible = !f.mode().is_rou() || surf.genus <= 1;
    if (surgery && !feasible)
        rep.notes.push_back("surgery evaluation skipped: at roots of unity it is only run for genus <= 1");
    if (surgery && feasible) {
        const auto res = verlinde_surgery(f, surf, beta);
        const double tol = tol_for(f, tolerance::verlinde);
        const double r = detail::rel(res.value, closed);
        t.rows.push_back({"surgery", f.format(res.value)});
        t.rows.push_back({"residual", fmt(r)});
        t.rows.push_back({"tolerance", fmt(tol)});
        if (!(r <= tol)) rep.status = "fail";
    }
    rep.tables.push_back(t);
    return rep;
}

// ----------------------------------------------------------------- dims

Report run_dims(const Mode& mode, int g) {
    Report rep;
    rep.command = "dims";
    rep.mode = mode.describe();
    const auto dims = graded_dims(mode, g);
    Table t{"graded dimensions, genus " + std::to_string(g), {"degree", "dimension"}, {}};
    long total = 0;
    for (const auto& [d, c] : dims) {
        t.rows.push_back({std::to_string(d), std::to_string(c)});
        total += c;
    }
    t.rows.push_back({"total", std::to_string(total)});
    rep.tables.push_back(t);
    if (dims != graded_dims_formula(mode, g)) {
        rep.status = "fail";
        rep.notes.push_back("enumeration disagrees with the binomial formula");
    }
    return rep;
}

// ------------------------------------------------------------------ mcg

template <class F>
Report run_mcg(const F& f) {
    using S = typename F::Scalar;
    Report rep;
    rep.command = "mcg";
    const auto m = torus_mcg(f);
    const std::function<std::string(const S&)> format = [&](const S& x) { return f.format(x); };
    rep.tables.push_back(matrix_table<S>("N_S", m.S_, m.labels, format));
    rep.tables.push_back(matrix_table<S>("N_T", m.T, m.labels, format));
    Table t = check_table();
    add_item(rep, t, check_mcg(f, tolerance_override()));
    rep.tables.push_back(t);
    return rep;
}

// ------------------------------------------------------------ alexander

MorseWord named_knot(const std::string& name, const Color& c) {
    if (name == "unknot") return unknot(c);
    if (name == "trefoil") return trefoil(c);
    if (name == "figure-eight") return figure_eight(c);
    if (name == "hopf") return hopf_link(c, c);
    throw ValidationError("unknown knot '" + name + "' (unknot, trefoil, figure-eight, hopf)");
}

template <class F>
Report run_alexander(const F& f, const MorseWord& w) {
    Report rep;
    rep.command = "alexander";
    const StdObject v = *w.strands.at(0).color.obj;
    const auto conway = conway_polynomial(w);
    const auto value = alexander(f, w);
    const auto oracle = mdim(f, v) * eval_poly(f, conway, conway_variable(f, v.alpha));
    const double tol = tol_for(f, tolerance::skein);
    const double r = detail::rel(value, oracle);
    Table t{"Alexander invariant", {"quantity", "value"}, {}};
    t.rows.push_back({"color", to_string(v)});
    t.rows.push_back({"renormalized F'", f.format(value)});
    t.rows.push_back({"d(V) Conway(q^-alpha - q^alpha)", f.format(oracle)});
    t.rows.push_back({"residual", fmt(r)});
    t.rows.push_back({"tolerance", fmt(tol)});
    t.rows.push_back({"Conway polynomial", format_conway(conway)});
    t.rows.push_back({"Alexander polynomial", format_alexander(alexander_polynomial(conway))});
    rep.tables.push_back(t);
    if (!(r <= tol)) rep.status = "fail";
    return rep;
}

// ---------------------------------------------------------------- skein

template <class F>
Report run_skein(const F& f, const WeightComponent& alpha, const WeightComponent& a) {
    Report rep;
    rep.command = "skein";
    const double tol = tol_for(f, tolerance::skein);
    const double r = skein_check(f, alpha, a);
    Table t{"skein relation on V(alpha, a) (x) V(alpha, a)", {"alpha", "a", "residual", "tolerance", "result"}, {}};
    t.rows.push_back({to_string(alpha), to_string(a), fmt(r), fmt(tol), r <= tol ? "PASS" : "FAIL"});
    rep.tables.push_back(t);
    if (!(r <= tol)) rep.status = "fail";
    return rep;
}

MarkedPoint parse_point(const std::string& text) {
    const bool negative = !text.empty() && text[0] == '-';
    const Color c = parse_color(negative ? text.substr(1) : text);
    if (!c.obj) throw ValidationError("marked points need standard-object colors");
    return {*c.obj, negative ? -1 : 1};
}

int emit(const Report& rep, const std::string& format) {
    if (format == "json")
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        std::cout << report_to_text(rep);
    return rep.status == "ok" ? exit_ok : exit_tolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants from the unrolled quantum group of gl(1|1)"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    auto* mode_opt = app.add_option("--mode", o.mode, "arb, rou-odd or rou-even")
                         ->check(CLI::IsMember({"arb", "rou-odd", "rou-even"}))
                         ->capture_default_str();
    auto* r_opt = app.add_option("--r", o.r, "order parameter r for roots of unity")->capture_default_str();
    auto* hbar_opt = app.add_option("--hbar", o.hbar, "a,b with hbar = a + b*pi*i (arb mode)")->capture_default_str();
    app.add_option("--weights", o.weights, "all or integral")->check(CLI::IsMember({"all", "integral"}))->capture_default_str();
    app.add_option("--backend", o.backend, "exact (roots of unity only) or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}))
        ->capture_default_str();
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    std::function<Report()> action;

    auto* check = app.add_subcommand("check", "run the self-checks on the selected field");
    unsigned seed = 1;
    check->add_option("--seed", seed, "random seed")->capture_default_str();
    check->callback([&] { action = [&] { return with_field(o, std::nullopt, [&](const auto& f) { return run_check(f, seed); }); }; });

    auto* inv = app.add_subcommand("invariant", "evaluate a diagram file");
    std::string inv_file;
    bool renormalize = false;
    std::vector<std::string> color_overrides;
    inv->add_option("file", inv_file, "diagram JSON")->required();
    inv->add_flag("--renormalize", renormalize, "writhe-renormalized invariant of a link with one Kac color");
    inv->add_option("--color", color_overrides, "override a strand color, STRAND=COLOR");
    inv->callback([&] {
        action = [&] {
            DiagramFile d = diagram_from_json(read_json_file(inv_file));
            apply_color_overrides(d.word, color_overrides);
            return with_field(o, d.mode, [&](const auto& f) { return run_invariant(f, d.word, renormalize); });
        };
    });

    auto* cg = app.add_subcommand("cgp", "3-manifold invariant of surgery presentations; several files are compared");
    std::vector<std::string> cgp_files;
    cg->add_option("files", cgp_files, "diagram JSON files")->required();
    cg->callback([&] {
        action = [&] {
            std::vector<MorseWord> words;
            std::optional<Mode> file_mode;
            for (const auto& p : cgp_files) {
                DiagramFile d = diagram_from_json(read_json_file(p));
                if (d.mode && !file_mode) file_mode = d.mode;
                words.push_back(d.word);
            }
            return with_field(o, file_mode, [&](const auto& f) { return run_cgp(f, cgp_files, words); });
        };
    });

    auto* ver = app.add_subcommand("verlinde", "trace of a power-free state space: closed form and surgery");
    int genus = 1;
    std::string beta_text = "1/5";
    std::string surface_file;
    std::vector<std::string> points;
    bool no_surgery = false;
    ver->add_option("-g,--genus", genus, "genus")->capture_default_str();
    ver->add_option("--beta", beta_text, "fiber degree beta")->capture_default_str();
    ver->add_option("--point", points, "marked point color; a leading '-' gives sign -1");
    ver->add_option("--surface", surface_file, "surface JSON (replaces --genus and --point)");
    ver->add_flag("--no-surgery", no_surgery, "only evaluate the closed form");
    ver->callback([&] {
        action = [&] {
            SurfaceData surf;
            std::optional<Mode> file_mode;
            Degree beta{parse_weight_component(beta_text), WeightComponent(0)};
            if (!surface_file.empty()) {
                const SurfaceFile sf = surface_from_json(read_json_file(surface_file));
                surf = sf.surface;
                file_mode = sf.mode;
                if (sf.fiber && ver->count("--beta") == 0) beta = *sf.fiber;
            } else {
                surf.genus = genus;
                for (const auto& p : points) surf.points.push_back(parse_point(p));
            }
            if (surf.genus < 1) throw ValidationError("genus must be at least 1");
            return with_field(o, file_mode, [&](const auto& f) { return run_verlinde(f, surf, beta, !no_surgery); });
        };
    });

    auto* dims = app.add_subcommand("dims", "graded dimensions of a closed surface state space");
    int dims_genus = 1;
    dims->add_option("-g,--genus", dims_genus, "genus")->capture_default_str();
    dims->callback([&] {
        action = [&] {
            if (dims_genus < 1) throw ValidationError("genus must be at least 1");
            Report rep = run_dims(make_mode(o), dims_genus);
            rep.backend = "exact";
            return rep;
        };
    });

    auto* mcg = app.add_subcommand("mcg", "torus mapping class group action");
    mcg->callback([&] { action = [&] { return with_field(o, std::nullopt, [&](const auto& f) { return run_mcg(f); }); }; });

    auto* alex = app.add_subcommand("alexander", "renormalized knot invariant against the Conway oracle");
    std::string alex_file, knot = "trefoil", alpha_text = "1/3", a_text = "0";
    alex->add_option("file", alex_file, "diagram JSON (default: --knot)");
    alex->add_option("--knot", knot, "unknot, trefoil, figure-eight or hopf")->capture_default_str();
    alex->add_option("--alpha", alpha_text, "E-weight of the color")->capture_default_str();
    alex->add_option("--a", a_text, "G-weight of the color")->capture_default_str();
    alex->callback([&] {
        action = [&] {
            std::optional<Mode> file_mode;
            MorseWord w;
            if (!alex_file.empty()) {
                DiagramFile d = diagram_from_json(read_json_file(alex_file));
                file_mode = d.mode;
                w = d.word;
            } else {
                const StdObject v = StdObject::kac(parse_weight_component(alpha_text), parse_weight_component(a_text), Parity(0));
                w = named_knot(knot, Color::of(v));
            }
            return with_field(o, file_mode, [&](const auto& f) { return run_alexander(f, w); });
        };
    });

    auto* sk = app.add_subcommand("skein", "skein relation of the braiding on V (x) V");
    std::string sk_alpha = "1/3", sk_a = "0";
    sk->add_option("--alpha", sk_alpha, "E-weight")->capture_default_str();
    sk->add_option("--a", sk_a, "G-weight")->capture_default_str();
    sk->callback([&] {
        action = [&] {
            return with_field(o, std::nullopt, [&](const auto& f) {
                return run_skein(f, parse_weight_component(sk_alpha), parse_weight_component(sk_a));
            });
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }
    o.mode_given = mode_opt->count() > 0 || r_opt->count() > 0 || hbar_opt->count() > 0;
    try {
        return emit(action(), o.format);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: invalid number (" << e.what() << ")\n";
        return exit_validation;
    }
}
