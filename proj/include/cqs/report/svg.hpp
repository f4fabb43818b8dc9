#pragma once

/// @file svg.hpp
/// @brief SVG 1.1 drawings of fans in the input cone's coordinates: lattice
/// dots, solid rays from the origin to their primitive generators, and the
/// roof path as one dashed polyline.
///
/// Output is a pure function of the fan and the style record.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cqs/cqs.hpp"

namespace cqs::report {

struct SvgStyle {
  int scale = 40;  // px per lattice unit
  int dot_radius = 2;
  const char* dash = "6,4";
  int stroke_width = 2;
  int font_size = 12;
  const char* ray_color = "#000000";
  const char* roof_color = "#c0392b";
  const char* dot_color = "#555555";
};

struct SvgFile {
  std::string name;
  std::string content;
};

inline std::string fan_file_name(const std::vector<Int>& k) { return "fan_" + join(k, "-") + ".svg"; }
inline std::string minimal_file_name() { return "fan_minimal.svg"; }

namespace detail {

struct Frame {
  Int xmin, xmax, ymin, ymax;
  int scale;

  Int px(const Int& x) const { return (x - xmin) * scale; }
  Int py(const Int& y) const { return (ymax - y) * scale; }
};

/// Bounding box of conv{0, g1, g2} grown by one lattice unit.
inline Frame frame_for(const NormalForm& nf, int scale) {
  const NVec& g1 = nf.input.g1;
  const NVec& g2 = nf.input.g2;
  Int xmin = std::min({Int(0), g1.x, g2.x}) - 1;
  Int xmax = std::max({Int(0), g1.x, g2.x}) + 1;
  Int ymin = std::min({Int(0), g1.y, g2.y}) - 1;
  Int ymax = std::max({Int(0), g1.y, g2.y}) + 1;
  return {xmin, xmax, ymin, ymax, scale};
}

inline NVec integral(const RatPoint& p) {
  if (!p.x.is_integer() || !p.y.is_integer())
    throw ConsistencyError("svg: roof endpoint is not a lattice point");
  return {p.x.num(), p.y.num()};
}

}  // namespace detail

/// `labels` names rays (in normal coordinates) that should carry a text label.
inline std::string render_fan_svg(const NormalForm& nf, const Fan& fan, bool draw_roof,
                                  const std::vector<std::pair<NVec, std::string>>& labels,
                                  const SvgStyle& style = {}) {
  const detail::Frame f = detail::frame_for(nf, style.scale);
  const Int width = (f.xmax - f.xmin) * style.scale;
  const Int height = (f.ymax - f.ymin) * style.scale;
  const Mat2 back = nf.transform.inverse();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<g id=\"lattice\" fill=\"" << style.dot_color << "\">\n";
  for (Int y = f.ymax; y >= f.ymin; --y)
    for (Int x = f.xmin; x <= f.xmax; ++x)
      os << "<circle cx=\"" << f.px(x) << "\" cy=\"" << f.py(y) << "\" r=\"" << style.dot_radius
         << "\"/>\n";
  os << "</g>\n";

  os << "<g id=\"rays\" stroke=\"" << style.ray_color << "\" stroke-width=\"" << style.stroke_width
     << "\">\n";
  for (const NVec& ray : fan.rays) {
    NVec p = back(ray);
    os << "<line x1=\"" << f.px(0) << "\" y1=\"" << f.py(0) << "\" x2=\"" << f.px(p.x)
       << "\" y2=\"" << f.py(p.y) << "\"/>\n";
  }
  os << "</g>\n";

  if (draw_roof && !fan.cones.empty()) {
    std::vector<NVec> path{back(detail::integral(fan.cones.front().roof.lo))};
    for (const FanCone& c : fan.cones) path.push_back(back(detail::integral(c.roof.hi)));
    os << "<polyline class=\"roof\" fill=\"none\" stroke=\"" << style.roof_color
       << "\" stroke-width=\"" << style.stroke_width << "\" stroke-dasharray=\"" << style.dash
       << "\" points=\"";
    for (std::size_t i = 0; i < path.size(); ++i)
      os << (i ? " " : "") << f.px(path[i].x) << "," << f.py(path[i].y);
    os << "\"/>\n";
  }

  os << "<g id=\"labels\" font-family=\"serif\" font-size=\"" << style.font_size << "\">\n";
  for (const auto& [ray, text] : labels) {
    if (std::find(fan.rays.begin(), fan.rays.end(), ray) == fan.rays.end()) continue;
    NVec p = back(ray);
    os << "<text x=\"" << f.px(p.x) + 4 << "\" y=\"" << f.py(p.y) - 4 << "\">" << text
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

/// The minimal resolution (no roof) followed by one figure per P-resolution.
inline std::vector<SvgFile> render_all(const SingularityReport& rep, const SvgStyle& style = {}) {
  std::vector<std::pair<NVec, std::string>> labels;
  const std::vector<NVec> v = v_rays(rep.nf);
  for (std::size_t i = 0; i < v.size(); ++i) labels.emplace_back(v[i], "v" + std::to_string(i));

  std::vector<SvgFile> out;
  out.push_back(
      {minimal_file_name(), render_fan_svg(rep.nf, minimal_resolution_fan(rep.nf), false, labels, style)});
  for (const ComponentReport& c : rep.components)
    out.push_back({fan_file_name(c.k_chain.k), render_fan_svg(rep.nf, c.fan, true, labels, style)});
  return out;
}

}  // namespace cqs::report
