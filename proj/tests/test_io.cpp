#include "support.hpp"

#include <doctest.h>

#include <filesystem>

using namespace gl11;
using namespace gl11::testing;

namespace {

const std::string data_dir = GL11_DATA_DIR;

std::vector<std::string> json_files(const std::string& sub) {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(data_dir + "/" + sub))
        if (e.path().extension() == ".json") out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("modes round-trip through JSON") {
    for (const Mode& m : {arb_mode(), Mode::arbitrary(Q(-2, 3), Q(0), WeightSet::Integral), Mode::rou_odd(5), Mode::rou_even(4)})
        CHECK(mode_from_json(mode_to_json(m)) == m);
    CHECK_THROWS_AS(mode_from_json(json{{"kind", "rou-odd"}, {"r", 4}}), ValidationError);
    CHECK_THROWS_AS(mode_from_json(json{{"kind", "other"}}), ValidationError);
}

TEST_CASE("degrees round-trip through JSON") {
    const Degree d{parse_weight_component("3/7"), parse_weight_component("-2")};
    const Degree back = degree_from_json(degree_to_json(d));
    CHECK(back.e == d.e);
    CHECK(back.g == d.g);
    CHECK(degree_from_json(json("1/4")).e == parse_weight_component("1/4"));
}

TEST_CASE("diagrams round-trip through JSON") {
    const Color V = Color::of(StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(1), Parity(1)));
    const Color W = Color::of(StdObject::kac(WeightComponent(Q(2, 5)), WeightComponent(0), Parity(0)));
    const auto [plain, blown] = kirby_one_pair(*V.obj, 1);
    MorseWord framed = trefoil(V);
    framed.framings[0] = 5;
    for (const MorseWord& w : {unknot(V, 2), hopf_link(V, W), framed, figure_eight(W), plain, blown}) {
        const json j = diagram_to_json(w, arb_mode());
        const DiagramFile back = diagram_from_json(j);
        REQUIRE(back.mode.has_value());
        CHECK(*back.mode == arb_mode());
        CHECK(diagram_to_json(back.word, back.mode) == j);
        CHECK(close(arb_field(), fprime(arb_field(), back.word), fprime(arb_field(), w)));
    }
}

TEST_CASE("malformed diagram JSON is rejected") {
    const std::string bad[] = {
        R"j({"strands": []})j",
        R"j({"strands": [{"color": "V(1/3, 0; p=0)"}], "slices": [{"kind": "cap_right", "position": 0}]})j",
        R"j({"strands": [{"color": "nonsense"}], "slices": []})j",
        R"j({"strands": [{"color": "V(1/3, 0; p=0)", "orientation": "left"}], "slices": []})j",
    };
    for (const auto& text : bad) {
        CAPTURE(text);
        const json j = json::parse(text);
        CHECK_THROWS_AS(diagram_from_json(j), ValidationError);
    }
}

TEST_CASE("surfaces round-trip through JSON and validate omega") {
    SurfaceData s;
    s.genus = 2;
    s.points.push_back({StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(0), Parity(0)), 1});
    s.points.push_back({StdObject::kac(WeightComponent(Q(1, 3)), WeightComponent(0), Parity(0)), -1});
    s = normalize_surface(arb_mode(), s);
    const Degree fiber{WeightComponent(Q(1, 5)), WeightComponent(0)};
    const json j = surface_to_json(s, arb_mode(), fiber);
    const SurfaceFile back = surface_from_json(j);
    CHECK(surface_to_json(back.surface, back.mode, back.fiber) == j);

    json bad = j;
    bad["omega"]["meridians"][0]["e"] = "1/2";
    CHECK_THROWS_AS(surface_from_json(bad), ValidationError);
    bad = j;
    bad["omega"]["basis"].erase(0);
    CHECK_THROWS_AS(surface_from_json(bad), ValidationError);
}

TEST_CASE("numeric scalars round-trip through text") {
    const NumericField f = arb_field();
    for (const std::complex<double> z : {std::complex<double>(1.25, -3.5), std::complex<double>(-1e-7, 2e12),
                                         std::complex<double>(0, 0), std::complex<double>(-0.1, 1e-30)}) {
        const auto back = parse_complex(f.format(z));
        CHECK(std::abs(back - z) <= 1e-11 * std::max(1.0, std::abs(z)));
    }
    CHECK_THROWS_AS(parse_complex("1.5"), ValidationError);
    CHECK_THROWS_AS(parse_complex("x+yi"), ValidationError);
}

TEST_CASE("reports round-trip through JSON") {
    Report r;
    r.command = "check";
    r.mode = "odd root of unity, r = 3";
    r.backend = "exact";
    r.status = "fail";
    r.tables.push_back({"checks", {"item", "residual"}, {{"a", "0"}, {"b", "1e-3"}}});
    r.notes = {"first", "second"};
    CHECK(report_from_json(json::parse(report_to_json(r).dump())) == r);
    CHECK(report_to_text(r).find("residual") != std::string::npos);
}

TEST_CASE("shipped diagram files parse and round-trip") {
    const auto files = json_files("diagrams");
    REQUIRE(files.size() >= 7);
    for (const auto& p : files) {
        CAPTURE(p);
        const json j = read_json_file(p);
        const DiagramFile d = diagram_from_json(j);
        CHECK(diagram_to_json(d.word, d.mode) == j);
    }
}

TEST_CASE("shipped surface files parse and round-trip") {
    const auto files = json_files("surfaces");
    REQUIRE(files.size() >= 2);
    for (const auto& p : files) {
        CAPTURE(p);
        const json j = read_json_file(p);
        const SurfaceFile s = surface_from_json(j);
        CHECK(surface_to_json(s.surface, s.mode, s.fiber) == j);
    }
}

TEST_CASE("shipped S^3 examples") {
    const NumericField f(Mode::arbitrary(Q(1), Q(0)));
    const DiagramFile with_v = diagram_from_json(read_json_file(data_dir + "/diagrams/s3_empty_with_V.json"));
    const StdObject v = *with_v.word.strands.at(0).color.obj;
    CHECK(close(f, cgp(f, with_v.word).value, f.inv(normalization(f).D) * mdim(f, v)));
    const DiagramFile a = diagram_from_json(read_json_file(data_dir + "/diagrams/s3_kirbyI_a.json"));
    const DiagramFile b = diagram_from_json(read_json_file(data_dir + "/diagrams/s3_kirbyI_b.json"));
    CHECK(close(f, cgp(f, a.word).value, cgp(f, b.word).value));
    const DiagramFile unknot_file = diagram_from_json(read_json_file(data_dir + "/diagrams/unknot.json"));
    CHECK(close(f, fprime(f, unknot_file.word), mdim(f, v)));
}

TEST_CASE("shipped Verlinde example agrees with the surface file") {
    const NumericField f(Mode::arbitrary(Q(1), Q(0)));
    const SurfaceFile s = surface_from_json(read_json_file(data_dir + "/surfaces/torus_two_points.json"));
    const DiagramFile d = diagram_from_json(read_json_file(data_dir + "/diagrams/verlinde_g1_two_points.json"));
    REQUIRE(s.fiber.has_value());
    const auto res = cgp(f, d.word);
    CHECK(close(f, res.value, verlinde_closed(f, s.surface, *s.fiber)));
    for (const auto& defect : res.defects) CHECK(defect.zero);
}
