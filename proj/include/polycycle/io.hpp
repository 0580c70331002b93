#pragma once

#include <string>

#include "polycycle/polycycle.hpp"

namespace polycycle {

inline constexpr const char* json_format_tag = "polycycle-json/1";

// Lossless interchange document with sorted keys; rotations start at their
// smallest edge id and holes are face ids of the map rebuilt from them.
std::string write_json(const Polycycle& p);
// Errors: ParseError, UnknownFormatTag, ValidationError (inner cause kept).
Polycycle read_json(const std::string& text);

// Underlying graph only (holes are lost). Errors: TooLarge above 255 vertices.
std::string write_planar_code(const Polycycle& p);
// Graph of a single planar_code record, for round-trip checks.
PlanarMap read_planar_code(const std::string& bytes);

std::string write_dot(const Polycycle& p);

struct SvgOptions {
    double size = 400.0;
    double margin = 20.0;
};

// Tutte embedding with the largest hole pinned to a regular polygon.
std::string render_svg(const Polycycle& p, const SvgOptions& options = {});

// Vertex coordinates of the embedding used by render_svg (before scaling).
std::vector<std::pair<double, double>> tutte_layout(const Polycycle& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& bytes);

}  // namespace polycycle
