#pragma once

// SVG rendering of the feasible regions in the (x, y) plane: each vertex's
// ellipse, its triangle, its tangent points, the two constructive segments and
// a chosen point. Output is deterministic for a given input.

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sprsynth/regions.hpp"

namespace sprsynth::svg {

struct PlotOptions {
  /// Boundary samples per ellipse.
  std::size_t resolution = 256;
  double width_px = 640.0;
  double padding = 0.10;
};

/// A named polyline or marker in plot coordinates (y up).
struct Layer {
  std::vector<Point2D> points;
  std::string stroke;
  std::string fill = "none";
  bool closed = false;
  bool dashed = false;
  double marker_radius = 0.0;  // > 0: draw each point as a dot
  std::string label;
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);
  return buf;
}

inline const char* palette(std::size_t i) {
  static const std::array<const char*, 6> colors{"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  return colors[i % colors.size()];
}

inline Point2D to_d(const Point2& p) { return {to_double(p.x), to_double(p.y)}; }

}  // namespace detail

struct Box {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -std::numeric_limits<double>::infinity();
  double ymin = std::numeric_limits<double>::infinity(), ymax = -std::numeric_limits<double>::infinity();

  void add(const Point2D& p) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
};

/// Writes the layers into one SVG document; the viewBox is the layers'
/// bounding box grown by `padding` on every side.
inline std::string render(const std::vector<Layer>& layers, const PlotOptions& opt = {}) {
  Box box;
  for (const auto& l : layers)
    for (const auto& p : l.points) box.add(p);
  if (!(box.xmin <= box.xmax)) box = Box{0.0, 1.0, 0.0, 1.0};
  double w = std::max(box.xmax - box.xmin, 1e-9), h = std::max(box.ymax - box.ymin, 1e-9);
  const double px = w * opt.padding, py = h * opt.padding;
  const double vx = box.xmin - px, vy = -(box.ymax + py), vw = w + 2 * px, vh = h + 2 * py;
  const double unit = std::max(vw, vh) / 400.0;
  using detail::num;

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(opt.width_px) << "\" height=\""
    << num(opt.width_px * vh / vw) << "\" viewBox=\"" << num(vx) << ' ' << num(vy) << ' ' << num(vw) << ' '
    << num(vh) << "\">\n";
  s << "<rect x=\"" << num(vx) << "\" y=\"" << num(vy) << "\" width=\"" << num(vw) << "\" height=\"" << num(vh)
    << "\" fill=\"white\"/>\n";
  // Axes through the origin when visible.
  if (vx <= 0 && 0 <= vx + vw)
    s << "<line x1=\"0\" y1=\"" << num(vy) << "\" x2=\"0\" y2=\"" << num(vy + vh)
      << "\" stroke=\"#999\" stroke-width=\"" << num(unit) << "\"/>\n";
  if (vy <= 0 && 0 <= vy + vh)
    s << "<line x1=\"" << num(vx) << "\" y1=\"0\" x2=\"" << num(vx + vw) << "\" y2=\"0\" stroke=\"#999\" stroke-width=\""
      << num(unit) << "\"/>\n";

  for (const auto& l : layers) {
    if (!l.label.empty()) s << "<!-- " << l.label << " -->\n";
    if (l.marker_radius > 0) {
      for (const auto& p : l.points)
        s << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << num(l.marker_radius * unit)
          << "\" fill=\"" << l.stroke << "\"/>\n";
      continue;
    }
    s << '<' << (l.closed ? "polygon" : "polyline") << " points=\"";
    for (std::size_t i = 0; i < l.points.size(); ++i)
      s << (i ? " " : "") << num(l.points[i].x) << ',' << num(-l.points[i].y);
    s << "\" fill=\"" << l.fill << "\" stroke=\"" << l.stroke << "\" stroke-width=\"" << num(unit) << '"';
    if (l.dashed) s << " stroke-dasharray=\"" << num(4 * unit) << ' ' << num(3 * unit) << '"';
    s << "/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

/// A labelled line piece drawn over the regions.
struct Chord {
  Point2 from;
  Point2 to;
  std::string label;
};

/// Region plot for quartic vertices. `chords` are extra line pieces (for
/// instance the constructive segments), `point` is drawn last.
inline std::string plot_regions(const std::vector<Poly>& vertices, const std::vector<Chord>& chords,
                                const std::optional<Point2>& point, const PlotOptions& opt = {}) {
  if (opt.resolution < 8) throw InvalidInput("plot resolution must be at least 8");
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto c = QuarticCoeffs::of(vertices[i]);
    const std::string color = detail::palette(i);
    const std::string name = "a" + std::to_string(i + 1) + "(s) = " + to_string(vertices[i]);
    layers.push_back({sample_ellipse(c, opt.resolution), color, "none", true, false, 0.0, "ellipse " + name});
    std::vector<Point2D> tri;
    for (const auto& p : triangle_vertices(c)) tri.push_back(detail::to_d(p));
    layers.push_back({tri, color, "none", true, true, 0.0, "triangle " + name});
    std::vector<Point2D> tan;
    for (const auto& p : tangent_points(c)) tan.push_back(detail::to_d(p));
    layers.push_back({tan, color, "none", false, false, 2.0, "tangent points " + name});
  }
  for (const auto& c : chords)
    layers.push_back({{detail::to_d(c.from), detail::to_d(c.to)}, "#444", "none", false, true, 0.0, c.label});
  if (point) layers.push_back({{detail::to_d(*point)}, "#000", "none", false, false, 3.5, "chosen point"});
  return render(layers, opt);
}

/// The chords (A13, B3) and (A24, B2) of an interval family.
inline std::vector<Chord> constructive_segments(const Rational& a1m, const Rational& a1p, const Rational& a3m,
                                                const Rational& a3p, const Rational& a4p) {
  return {{Point2{Rational(0), Rational(a3m / a1p)}, Point2{a1p, Rational(a1p * a4p / a3m)}, "segment (A13, B3)"},
          {Point2{Rational(0), Rational(a3p / a1m)}, Point2{a1m, Rational(a1m * a4p / a3p)}, "segment (A24, B2)"}};
}

}  // namespace sprsynth::svg
