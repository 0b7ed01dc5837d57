#include "gl11/io.hpp"

#include <fstream>
#include <sstream>

namespace gl11 {

namespace {

std::string weights_name(WeightSet w) { return w == WeightSet::Integral ? "integral" : "all"; }

WeightSet parse_weights(const std::string& s) {
    if (s == "all") return WeightSet::All;
    if (s == "integral") return WeightSet::Integral;
    throw ValidationError("unknown weight set '" + s + "' (expected all or integral)");
}

std::string text_of(const json& j, const char* what) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long>());
    throw ValidationError(std::string(what) + " must be a string or an integer");
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
    return j.at(key);
}

bool orientation_up(const json& j) {
    const std::string s = j.get<std::string>();
    if (s == "up") return true;
    if (s == "down") return false;
    throw ValidationError("orientation must be 'up' or 'down' (got '" + s + "')");
}

}  // namespace

std::string mode_kind_name(ModeKind k) {
    switch (k) {
        case ModeKind::Arbitrary: return "arb";
        case ModeKind::RouOdd: return "rou-odd";
        case ModeKind::RouEven: return "rou-even";
    }
    return "?";
}

json mode_to_json(const Mode& mode) {
    json j;
    j["kind"] = mode_kind_name(mode.kind());
    if (mode.is_rou())
        j["r"] = mode.r();
    else
        j["hbar"] = {to_string(mode.hbar_re()), to_string(mode.hbar_im())};
    j["weights"] = weights_name(mode.weights());
    return j;
}

Mode mode_from_json(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    const WeightSet w = j.contains("weights") ? parse_weights(j.at("weights").get<std::string>()) : WeightSet::All;
    if (kind == "arb") {
        const json& h = field(j, "hbar");
        if (!h.is_array() || h.size() != 2) throw ValidationError("hbar must be a pair [re, im]");
        return Mode::arbitrary(parse_q(text_of(h[0], "hbar")), parse_q(text_of(h[1], "hbar")), w);
    }
    const int r = field(j, "r").get<int>();
    if (kind == "rou-odd") return Mode::rou_odd(r, w);
    if (kind == "rou-even") return Mode::rou_even(r, w);
    throw ValidationError("unknown mode kind '" + kind + "'");
}

json degree_to_json(const Degree& d) { return {{"e", to_string(d.e)}, {"g", to_string(d.g)}}; }

Degree degree_from_json(const json& j) {
    if (j.is_string() || j.is_number_integer()) return {parse_weight_component(text_of(j, "degree")), WeightComponent(0)};
    Degree d;
    d.e = parse_weight_component(text_of(field(j, "e"), "degree"));
    if (j.contains("g")) d.g = parse_weight_component(text_of(j.at("g"), "degree"));
    return d;
}

json diagram_to_json(const MorseWord& w, const std::optional<Mode>& mode) {
    const Topology t = analyze(w);
    json j;
    if (mode) j["mode"] = mode_to_json(*mode);
    std::vector<bool> up(w.strands.size(), true);
    for (const auto& in : w.inputs) up[static_cast<std::size_t>(in.strand)] = in.up;
    json strands = json::array();
    for (std::size_t s = 0; s < w.strands.size(); ++s)
        strands.push_back({{"color", to_string(w.strands[s].color)}, {"orientation", up[s] ? "up" : "down"}});
    j["strands"] = strands;
    if (!w.inputs.empty()) {
        json inputs = json::array();
        for (const auto& in : w.inputs) inputs.push_back({{"strand", in.strand}, {"orientation", in.up ? "up" : "down"}});
        j["inputs"] = inputs;
    }
    json slices = json::array();
    for (const auto& s : w.slices) {
        json js = {{"kind", to_string(s.kind)}, {"position", s.position}};
        if (s.kind == SliceKind::CupLeft || s.kind == SliceKind::CupRight) js["strand"] = s.strand;
        if (s.kind == SliceKind::Coupon) {
            json outs = json::array();
            for (const auto& o : s.coupon.outputs) outs.push_back({{"strand", o.strand}, {"orientation", o.up ? "up" : "down"}});
            js["coupon"] = {{"inputs", s.coupon.inputs}, {"outputs", outs}, {"op", s.coupon.op}, {"scalar", to_string(s.coupon.scalar)}};
        }
        slices.push_back(js);
    }
    j["slices"] = slices;
    json comps = json::array();
    for (int c = 0; c < t.components; ++c) {
        json ids = json::array();
        std::optional<long> framing;
        for (std::size_t s = 0; s < w.strands.size(); ++s) {
            if (t.component_of_strand[s] != c) continue;
            ids.push_back(s);
            const auto it = w.framings.find(static_cast<int>(s));
            if (it != w.framings.end()) framing = it->second;
        }
        json jc = {{"strand_ids", ids}, {"framing", framing ? *framing : t.self_writhe[static_cast<std::size_t>(c)]}};
        comps.push_back(jc);
    }
    j["components"] = comps;
    j["signature_defect"] = w.signature_defect;
    return j;
}

DiagramFile diagram_from_json(const json& j) {
    DiagramFile out;
    try {
        if (j.contains("mode") && !j.at("mode").is_null()) out.mode = mode_from_json(j.at("mode"));
        MorseWord& w = out.word;
        std::vector<bool> up;
        for (const auto& s : field(j, "strands")) {
            w.strands.push_back({parse_color(field(s, "color").get<std::string>())});
            up.push_back(s.contains("orientation") ? orientation_up(s.at("orientation")) : true);
        }
        if (j.contains("inputs")) {
            for (const auto& in : j.at("inputs")) {
                Wire wire;
                if (in.is_number_integer()) {
                    wire.strand = in.get<int>();
                    if (wire.strand < 0 || wire.strand >= static_cast<int>(up.size()))
                        throw ValidationError("input refers to an unknown strand");
                    wire.up = up[static_cast<std::size_t>(wire.strand)];
                } else {
                    wire.strand = field(in, "strand").get<int>();
                    wire.up = in.contains("orientation") ? orientation_up(in.at("orientation")) : true;
                }
                w.inputs.push_back(wire);
            }
        }
        for (const auto& js : field(j, "slices")) {
            Slice s;
            s.kind = parse_slice_kind(field(js, "kind").get<std::string>());
            s.position = js.value("position", 0);
            s.strand = js.value("strand", -1);
            if (s.kind == SliceKind::Coupon) {
                const json& c = field(js, "coupon");
                s.coupon.inputs = c.value("inputs", 0);
                s.coupon.op = c.value("op", std::string("id"));
                if (c.contains("scalar")) s.coupon.scalar = parse_q(text_of(c.at("scalar"), "coupon scalar"));
                if (c.contains("outputs"))
                    for (const auto& o : c.at("outputs"))
                        s.coupon.outputs.push_back(
                            {field(o, "strand").get<int>(), o.contains("orientation") ? orientation_up(o.at("orientation")) : true});
            }
            w.slices.push_back(s);
        }
        if (j.contains("components"))
            for (const auto& c : j.at("components")) {
                const json& ids = field(c, "strand_ids");
                if (!ids.is_array() || ids.empty()) throw ValidationError("component needs at least one strand id");
                if (c.contains("framing") && !c.at("framing").is_null())
                    w.framings[ids[0].get<int>()] = c.at("framing").get<long>();
            }
        w.signature_defect = j.value("signature_defect", 0L);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed diagram JSON: ") + e.what());
    }
    analyze(out.word);
    return out;
}

json surface_to_json(const SurfaceData& s, const std::optional<Mode>& mode, const std::optional<Degree>& fiber) {
    json j;
    if (mode) j["mode"] = mode_to_json(*mode);
    j["genus"] = s.genus;
    json pts = json::array();
    json meridians = json::array();
    for (const auto& p : s.points) {
        pts.push_back({{"color", to_string(p.color)}, {"sign", p.sign}});
        const Degree d = p.color.degree();
        meridians.push_back(degree_to_json(p.sign > 0 ? d : Degree{-d.e, -d.g}));
    }
    j["points"] = pts;
    json basis = json::array();
    for (std::size_t k = 0; k < s.alphas.size() && k < s.betas.size(); ++k) {
        basis.push_back(degree_to_json(s.alphas[k]));
        basis.push_back(degree_to_json(s.betas[k]));
    }
    j["omega"] = {{"meridians", meridians}, {"basis", basis}};
    if (fiber) j["fiber"] = degree_to_json(*fiber);
    return j;
}

SurfaceFile surface_from_json(const json& j) {
    SurfaceFile out;
    try {
        if (j.contains("mode") && !j.at("mode").is_null()) out.mode = mode_from_json(j.at("mode"));
        SurfaceData& s = out.surface;
        s.genus = field(j, "genus").get<int>();
        if (j.contains("points"))
            for (const auto& p : j.at("points")) {
                const Color c = parse_color(field(p, "color").get<std::string>());
                if (!c.obj) throw ValidationError("marked points must be colored by standard objects");
                s.points.push_back({*c.obj, p.value("sign", 1)});
            }
        if (j.contains("omega")) {
            const json& om = j.at("omega");
            if (om.contains("basis")) {
                const json& b = om.at("basis");
                if (!b.is_array() || b.size() != 2 * static_cast<std::size_t>(s.genus))
                    throw ValidationError("omega.basis needs 2g degrees (a_1, b_1, ..., a_g, b_g)");
                for (std::size_t k = 0; k < b.size(); k += 2) {
                    s.alphas.push_back(degree_from_json(b[k]));
                    s.betas.push_back(degree_from_json(b[k + 1]));
                }
            }
            if (om.contains("meridians")) {
                const json& m = om.at("meridians");
                if (!m.is_array() || m.size() != s.points.size())
                    throw ValidationError("omega.meridians needs one degree per marked point");
                for (std::size_t k = 0; k < m.size(); ++k) {
                    const Degree given = degree_from_json(m[k]);
                    const Degree d = s.points[k].color.degree();
                    const Degree expected = s.points[k].sign > 0 ? d : Degree{-d.e, -d.g};
                    if (given.e != expected.e || given.g != expected.g)
                        throw ValidationError("omega on meridian " + std::to_string(k) +
                                              " does not match the degree of the marked point");
                }
            }
        }
        if (j.contains("fiber")) out.fiber = degree_from_json(j.at("fiber"));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed surface JSON: ") + e.what());
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::complex<double> parse_complex(const std::string& text) {
    if (text.empty() || text.back() != 'i') throw ValidationError("complex number must look like a+bi: '" + text + "'");
    // The imaginary part starts at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size() - 1; k > 0; --k)
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    if (split == std::string::npos) throw ValidationError("complex number must look like a+bi: '" + text + "'");
    try {
        return {std::stod(text.substr(0, split)), std::stod(text.substr(split, text.size() - split - 1))};
    } catch (const std::exception&) {
        throw ValidationError("complex number must look like a+bi: '" + text + "'");
    }
}

json report_to_json(const Report& r) {
    json tables = json::array();
    for (const auto& t : r.tables) tables.push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    return {{"command", r.command}, {"mode", r.mode}, {"backend", r.backend}, {"status", r.status},
            {"tables", tables}, {"notes", r.notes}};
}

Report report_from_json(const json& j) {
    Report r;
    try {
        r.command = field(j, "command").get<std::string>();
        r.mode = j.value("mode", std::string());
        r.backend = j.value("backend", std::string());
        r.status = j.value("status", std::string("ok"));
        if (j.contains("tables"))
            for (const auto& t : j.at("tables")) {
                Table tab;
                tab.title = t.value("title", std::string());
                tab.columns = t.value("columns", std::vector<std::string>{});
                tab.rows = t.value("rows", std::vector<std::vector<std::string>>{});
                r.tables.push_back(tab);
            }
        r.notes = j.value("notes", std::vector<std::string>{});
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed report JSON: ") + e.what());
    }
    return r;
}

std::string report_to_text(const Report& r) {
    std::ostringstream os;
    os << r.command << " [" << r.mode;
    if (!r.backend.empty()) os << ", " << r.backend;
    os << "]: " << r.status << "\n";
    for (const auto& t : r.tables) {
        os << "\n" << t.title << "\n";
        std::vector<std::size_t> width(t.columns.size(), 0);
        for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
        for (const auto& row : t.rows)
            for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
        auto line = [&](const std::vector<std::string>& cells) {
            os << " ";
            for (std::size_t c = 0; c < cells.size(); ++c) {
                os << " " << cells[c];
                if (c + 1 < cells.size() && c < width.size()) os << std::string(width[c] - cells[c].size(), ' ');
            }
            os << "\n";
        };
        line(t.columns);
        for (const auto& row : t.rows) line(row);
    }
    for (const auto& n : r.notes) os << "\nnote: " << n;
    if (!r.notes.empty()) os << "\n";
    return os.str();
}

}  // namespace gl11
