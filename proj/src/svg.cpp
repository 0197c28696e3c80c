// Copyright 2026 The DualBloch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dualbloch/svg.hpp"

#include <fmt/format.h>

#include <cmath>
#include <sstream>

namespace dualbloch {

namespace {

constexpr const char* kArrowColor = "#f08c00";
constexpr const char* kAxisColor = "#222222";
constexpr double kAxisOvershoot = 1.2;

std::string px(double v) {
  if (std::abs(v) < 5e-4) v = 0;  // no "-0.000"
  return fmt::format("{:.3f}", v);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

class Projector {
 public:
  Projector(double elevation_deg, double azimuth_deg) {
    const double th = elevation_deg * kPi / 180;
    const double ph = azimuth_deg * kPi / 180;
    ex_ = {std::cos(ph), -std::cos(th) * std::sin(ph)};
    ey_ = {std::sin(ph), std::cos(th) * std::cos(ph)};
    ez_ = {0.0, std::sin(th)};
  }

  /// Screen offset (SVG y grows downward) of a world point.
  std::pair<double, double> operator()(const Vec3& p) const {
    const double sx = ex_.first * p.x() + ey_.first * p.y() + ez_.first * p.z();
    const double sy = ex_.second * p.x() + ey_.second * p.y() + ez_.second * p.z();
    return {sx, -sy};
  }

 private:
  std::pair<double, double> ex_, ey_, ez_;
};

struct Canvas {
  std::ostringstream out;
  Projector proj;
  double cx = 0, cy = 0, radius = 1;

  std::pair<double, double> at(const Vec3& p) const {
    auto [x, y] = proj(p);
    return {cx + radius * x, cy + radius * y};
  }

  void segment(const Vec3& a, const Vec3& b, const char* cls, const char* color,
               double width, bool arrowhead) {
    auto [x1, y1] = at(a);
    auto [x2, y2] = at(b);
    out << "<line class=\"" << cls << "\" x1=\"" << px(x1) << "\" y1=\"" << px(y1)
        << "\" x2=\"" << px(x2) << "\" y2=\"" << px(y2) << "\" stroke=\"" << color
        << "\" stroke-width=\"" << px(width) << "\""
        << (arrowhead ? " marker-end=\"url(#head)\"" : "") << "/>\n";
  }

  void circle(double r, const char* cls, bool dashed) {
    out << "<circle class=\"" << cls << "\" cx=\"" << px(cx) << "\" cy=\"" << px(cy)
        << "\" r=\"" << px(radius * r) << "\" fill=\"" << (dashed ? "none" : "#e9eef5")
        << "\" fill-opacity=\"0.6\" stroke=\"#8899aa\""
        << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }

  void equator(double r) {
    out << "<polyline class=\"equator\" fill=\"none\" stroke=\"#8899aa\" "
           "stroke-dasharray=\"2 3\" points=\"";
    for (int k = 0; k <= 72; ++k) {
      const double t = 2 * kPi * k / 72;
      auto [x, y] = at(Vec3(r * std::cos(t), r * std::sin(t), 0));
      out << (k ? " " : "") << px(x) << "," << px(y);
    }
    out << "\"/>\n";
  }

  void label(const Vec3& tip, char axis, int sphere) {
    auto [x, y] = at(tip * 1.08);
    out << "<text class=\"axis-label\" x=\"" << px(x) << "\" y=\"" << px(y)
        << "\" font-size=\"13\" text-anchor=\"middle\">" << axis
        << "<tspan baseline-shift=\"sub\" font-size=\"9\">" << sphere << "</tspan></text>\n";
  }

  void dot() {
    out << "<circle class=\"center-dot\" cx=\"" << px(cx) << "\" cy=\"" << px(cy)
        << "\" r=\"4.000\" fill=\"" << kArrowColor << "\"/>\n";
  }
};

constexpr char kAxisNames[3] = {'x', 'y', 'z'};

void draw_axes(Canvas& c, const Frame& frame, int sphere) {
  for (int i = 0; i < 3; ++i) {
    const Vec3 tip = frame.axis(i) * kAxisOvershoot;
    c.segment(Vec3::Zero(), tip, "axis", kAxisColor, 1.5, true);
    c.label(tip, kAxisNames[i], sphere);
  }
}

/// Inner frame up to radius `split`, outer frame from there to the rim.
void draw_split_axes(Canvas& c, const Frame& inner, const Frame& outer, double split,
                     int sphere) {
  for (int i = 0; i < 3; ++i) {
    c.segment(Vec3::Zero(), inner.axis(i) * split, "axis-inner", kAxisColor, 1.5, false);
    const Vec3 tip = outer.axis(i) * kAxisOvershoot;
    c.segment(outer.axis(i) * split, tip, "axis-outer", kAxisColor, 1.5, true);
    c.label(tip, kAxisNames[i], sphere);
  }
}

void draw_sphere(Canvas& c, const Scene& scene, int s, MergeStyle merge) {
  const SceneLayer* sep = scene.layer(LayerKind::Separable);
  const SceneLayer* ent = scene.layer(LayerKind::Mes);
  const int label = s + 1;
  c.circle(1.0, "shell-outer", false);
  c.equator(1.0);
  if (sep && !ent) {
    draw_axes(c, sep->spheres[s].frame, label);
    c.segment(Vec3::Zero(), *sep->spheres[s].arrow, "arrow", kArrowColor, 4, true);
    return;
  }
  if (ent && !sep) {
    draw_axes(c, ent->spheres[s].frame, label);
    c.dot();
    return;
  }
  const Vec3 dir = sep->spheres[s].arrow->normalized();
  if (merge == MergeStyle::InnerSeparable) {
    const double split = sep->weight;
    c.circle(split, "shell-inner", true);
    draw_split_axes(c, sep->spheres[s].frame, ent->spheres[s].frame, split, label);
    c.segment(Vec3::Zero(), dir * split, "arrow", kArrowColor, 4, true);
  } else {
    const double split = ent->weight;
    c.circle(split, "shell-inner", true);
    draw_split_axes(c, ent->spheres[s].frame, sep->spheres[s].frame, split, label);
    c.dot();
    c.segment(dir * split, dir, "arrow", kArrowColor, 4, true);
  }
}

}  // namespace

std::string render_svg(const Scene& scene, const SvgOptions& options) {
  validate(scene);
  const double r = options.radius;
  const double cell = 2.8 * r;
  const double caption_h = options.caption.empty() ? 0.0 : 28.0;
  const double width = 2 * cell;
  const double height = cell + caption_h;

  Canvas c{std::ostringstream{}, Projector(options.elevation_deg, options.azimuth_deg)};
  c.radius = r;
  auto& out = c.out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
      << px(height) << "\" viewBox=\"0 0 " << px(width) << " " << px(height) << "\">\n";
  out << "<title>" << to_string(scene.classification()) << " two-qubit scene</title>\n";
  out << "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
         "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"context-stroke\"/></marker></defs>\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int s = 0; s < 2; ++s) {
    c.cx = cell * s + cell / 2;
    c.cy = cell / 2;
    out << "<g class=\"sphere\" id=\"sphere" << s + 1 << "\">\n";
    draw_sphere(c, scene, s, options.merge);
    out << "</g>\n";
  }
  if (!options.caption.empty()) {
    out << "<text class=\"caption\" x=\"" << px(width / 2) << "\" y=\""
        << px(cell + caption_h / 2) << "\" font-size=\"15\" text-anchor=\"middle\">"
        << escape(options.caption) << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dualbloch
