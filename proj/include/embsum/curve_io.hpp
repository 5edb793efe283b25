#pragma once

// JSON curve files and SVG rendering of diagrams on the torus.
//
// A curve is stored as its lift: vertices v_0 .. v_n in R^2 with
// v_n - v_0 in Z^2, so the displacement is the homology class.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "embsum/curve_resolver.hpp"
#include "embsum/torus_curve.hpp"

namespace embsum::io {

struct CurveFile {
  std::vector<torus::TorusCurve> curves;
  // Per curve, per vertex; present only for resolver output.
  std::optional<std::vector<std::vector<resolver::VertexSource>>> provenance;
};

// Throws InputError on schema violations and GeometryError when a curve
// breaks the TorusCurve invariants.
CurveFile curve_file_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CurveFile& f);
nlohmann::json to_json(const resolver::ResolvedDiagram& d);

CurveFile load_curve_file(const std::string& path);
nlohmann::json load_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

std::string to_string(resolver::VertexSource s);

struct SvgLayer {
  std::vector<torus::TorusCurve> curves;
  std::string title;
};

// One panel per layer, each showing the unit square with every segment drawn
// through all translates that meet it, clipped to the square.
std::string render_svg(const std::vector<SvgLayer>& layers, const std::vector<torus::Vec2>& marks = {});

}  // namespace embsum::io
