#pragma once

#include "gl11/tqft.hpp"

#include <json.hpp>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace gl11 {

using json = nlohmann::ordered_json;

// Modes: {"kind": "arb" | "rou-odd" | "rou-even", "r": N, "hbar": ["a", "b"], "weights": "all" | "integral"}.
json mode_to_json(const Mode& mode);
Mode mode_from_json(const json& j);
std::string mode_kind_name(ModeKind k);

// Degrees: {"e": "1/4", "g": "0"}; a bare string is an E-weight with g = 0.
json degree_to_json(const Degree& d);
Degree degree_from_json(const json& j);

// Diagram files. See docs/formats.md.
struct DiagramFile {
    std::optional<Mode> mode;
    MorseWord word;
};

json diagram_to_json(const MorseWord& w, const std::optional<Mode>& mode = std::nullopt);
DiagramFile diagram_from_json(const json& j);

// Surface files: {genus, points: [{color, sign}], omega: {meridians, basis}}.
struct SurfaceFile {
    std::optional<Mode> mode;
    SurfaceData surface;
    std::optional<Degree> fiber;
};

json surface_to_json(const SurfaceData& s, const std::optional<Mode>& mode = std::nullopt,
                     const std::optional<Degree>& fiber = std::nullopt);
SurfaceFile surface_from_json(const json& j);

json read_json_file(const std::string& path);

// Numeric scalars print as "a+bi" with 12 significant digits.
std::complex<double> parse_complex(const std::string& text);

// Output tables. Every command result is a Report of titled tables whose
// cells are already formatted text, so JSON output round-trips exactly.
struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

struct Report {
    std::string command;
    std::string mode;
    std::string backend;
    std::string status = "ok";
    std::vector<Table> tables;
    std::vector<std::string> notes;

    friend bool operator==(const Report&, const Report&) = default;
};

json report_to_json(const Report& r);
Report report_from_json(const json& j);
std::string report_to_text(const Report& r);

}  // namespace gl11
