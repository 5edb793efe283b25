#include "embsum/curve_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "embsum/errors.hpp"

namespace embsum::io {

namespace {

using torus::TorusCurve;
using torus::Vec2;

constexpr double kPanel = 400.0;  // pixels per unit of the square
constexpr double kMargin = 20.0;
constexpr double kTitle = 24.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

Vec2 vertex_from_json(const nlohmann::json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw InputError("curve file: each vertex must be a pair [u, v]");
  }
  const Vec2 p{v[0].get<double>(), v[1].get<double>()};
  if (!std::isfinite(p[0]) || !std::isfinite(p[1])) throw InputError("curve file: non-finite vertex");
  return p;
}

resolver::VertexSource source_from_string(const std::string& s) {
  if (s == "curve1") return resolver::VertexSource::curve1;
  if (s == "curve2") return resolver::VertexSource::curve2;
  if (s == "cut") return resolver::VertexSource::cut;
  throw InputError("curve file: unknown provenance '" + s + "'");
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string xml_escape(const std::string& in) {
  std::string out;
  for (char c : in) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string to_string(resolver::VertexSource s) {
  switch (s) {
    case resolver::VertexSource::curve1: return "curve1";
    case resolver::VertexSource::curve2: return "curve2";
    default: return "cut";
  }
}

CurveFile curve_file_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("curve file must be a JSON object");
  if (!j.contains("schema") || j.at("schema") != 1) throw InputError("curve file: \"schema\": 1 is required");
  if (!j.contains("surface") || j.at("surface") != "torus") throw InputError("curve file: surface must be \"torus\"");
  if (!j.contains("curves") || !j.at("curves").is_array()) throw InputError("curve file: \"curves\" must be an array");

  CurveFile f;
  std::vector<std::vector<resolver::VertexSource>> prov;
  for (const auto& c : j.at("curves")) {
    if (!c.is_object() || !c.contains("id") || !c.at("id").is_string()) throw InputError("curve file: curve needs a string id");
    if (!c.contains("vertices") || !c.at("vertices").is_array()) throw InputError("curve file: curve needs a vertex array");
    const bool oriented = c.value("oriented", true);
    std::vector<Vec2> lift;
    for (const auto& v : c.at("vertices")) lift.push_back(vertex_from_json(v));
    f.curves.emplace_back(c.at("id").get<std::string>(), std::move(lift), oriented);
    if (c.contains("provenance")) {
      std::vector<resolver::VertexSource> p;
      for (const auto& s : c.at("provenance")) p.push_back(source_from_string(s.get<std::string>()));
      if (p.size() != f.curves.back().lift().size()) throw InputError("curve file: provenance length != vertex count");
      prov.push_back(std::move(p));
    }
  }
  if (!prov.empty()) {
    if (prov.size() != f.curves.size()) throw InputError("curve file: provenance given for some curves only");
    f.provenance = std::move(prov);
  }
  return f;
}

nlohmann::json to_json(const CurveFile& f) {
  nlohmann::json curves = nlohmann::json::array();
  for (std::size_t k = 0; k < f.curves.size(); ++k) {
    const auto& c = f.curves[k];
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : c.lift()) verts.push_back({v[0], v[1]});
    nlohmann::json entry{{"id", c.id()}, {"vertices", verts}, {"oriented", c.oriented()}};
    if (f.provenance) {
      nlohmann::json p = nlohmann::json::array();
      for (auto s : (*f.provenance)[k]) p.push_back(to_string(s));
      entry["provenance"] = p;
    }
    curves.push_back(entry);
  }
  return {{"schema", 1}, {"surface", "torus"}, {"curves", curves}};
}

nlohmann::json to_json(const resolver::ResolvedDiagram& d) {
  nlohmann::json j = to_json(CurveFile{d.curves, d.provenance});
  j["chamfer"] = d.chamfer;
  return j;
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

CurveFile load_curve_file(const std::string& path) {
  const auto j = load_json(path);
  try {
    return curve_file_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("'" + path + "': " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path + "'");
}

std::string render_svg(const std::vector<SvgLayer>& layers, const std::vector<Vec2>& marks) {
  const double panel_w = kPanel + 2.0 * kMargin;
  const double height = kPanel + 2.0 * kMargin + kTitle;
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(panel_w * static_cast<double>(layers.size()))
    << "\" height=\"" << fmt(height) << "\">\n";
  s << "<defs><clipPath id=\"square\"><rect x=\"0\" y=\"0\" width=\"" << fmt(kPanel) << "\" height=\"" << fmt(kPanel)
    << "\"/></clipPath></defs>\n";
  // Torus u to the right, v upwards.
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const double ox = panel_w * static_cast<double>(l) + kMargin, oy = kTitle + kMargin;
    s << "<text x=\"" << fmt(ox) << "\" y=\"" << fmt(kTitle - 6.0) << "\" font-family=\"sans-serif\" font-size=\"14\">"
      << xml_escape(layers[l].title) << "</text>\n";
    s << "<g transform=\"translate(" << fmt(ox) << "," << fmt(oy) << ")\">\n";
    s << "<rect x=\"0\" y=\"0\" width=\"" << fmt(kPanel) << "\" height=\"" << fmt(kPanel)
      << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    s << "<g clip-path=\"url(#square)\" fill=\"none\" stroke-width=\"2\">\n";
    for (std::size_t k = 0; k < layers[l].curves.size(); ++k) {
      const auto& c = layers[l].curves[k];
      s << "<g stroke=\"" << kPalette[k % std::size(kPalette)] << "\"><title>" << xml_escape(c.id()) << "</title>\n";
      for (std::size_t i = 0; i < c.segment_count(); ++i) {
        const auto seg = c.segment(i);
        const torus::Segment unit{{0.0, 0.0}, {1.0, 1.0}};
        for (const auto& shift : torus::candidate_shifts(unit, seg, 0.0)) {
          const auto t = seg.shifted(shift);
          s << "<line x1=\"" << fmt(t.a[0] * kPanel) << "\" y1=\"" << fmt((1.0 - t.a[1]) * kPanel) << "\" x2=\""
            << fmt(t.b[0] * kPanel) << "\" y2=\"" << fmt((1.0 - t.b[1]) * kPanel) << "\"/>\n";
        }
      }
      s << "</g>\n";
    }
    s << "</g>\n";
    for (const auto& m : marks) {
      const Vec2 w = torus::wrap(m);
      s << "<circle cx=\"" << fmt(w[0] * kPanel) << "\" cy=\"" << fmt((1.0 - w[1]) * kPanel)
        << "\" r=\"4\" fill=\"none\" stroke=\"#000\"/>\n";
    }
    s << "</g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace embsum::io
