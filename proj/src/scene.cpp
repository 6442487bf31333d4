#include "hypgeo/scene.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "hypgeo/disk_model.hpp"
#include "hypgeo/error.hpp"
#include "hypgeo/halfplane_model.hpp"

namespace hypgeo {

namespace {

constexpr double kWidthPx = 600.0;

struct Box {
  double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  bool empty() const { return xmin > xmax; }
};

void require_planar_scene(const Point& p) {
  if (p.dim() != 2) fail(ErrorCode::DimensionMismatch, "scenes are planar");
}

// Fixed 6-decimal formatting without a negative zero.
std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

struct Mapper {
  Viewport v;
  double scale;
  double px(double x) const { return (x - v.xmin) * scale; }
  double py(double y) const { return (v.ymax - y) * scale; }
  double height() const { return (v.ymax - v.ymin) * scale; }
};

// Liang-Barsky clip of the infinite line p + t u to the viewport.
bool clip_line(const Viewport& v, const Point& p, const Point& u, Point& a, Point& b) {
  double t0 = -HUGE_VAL, t1 = HUGE_VAL;
  const double q[2][2] = {{v.xmin, v.xmax}, {v.ymin, v.ymax}};
  for (int k = 0; k < 2; ++k) {
    if (u[k] == 0.0) {
      if (p[k] < q[k][0] || p[k] > q[k][1]) return false;
      continue;
    }
    double lo = (q[k][0] - p[k]) / u[k];
    double hi = (q[k][1] - p[k]) / u[k];
    if (lo > hi) std::swap(lo, hi);
    t0 = std::max(t0, lo);
    t1 = std::min(t1, hi);
  }
  if (t0 > t1) return false;
  a = p + u * t0;
  b = p + u * t1;
  return true;
}

const char* stroke_for(const std::string& operation) {
  if (operation.find("bisector") != std::string::npos) return "#c0392b";
  if (operation.find("geodesic") != std::string::npos) return "#2c6fbb";
  return "#555555";
}

}  // namespace

Viewport scene_viewport(const ConstructionScene& scene) {
  if (scene.model == SceneModel::Disk) return Viewport{};
  Box box;
  box.add(0.0, 0.0);  // the real axis stays visible
  for (const auto& p : scene.points)
    if (p.point.is_finite()) box.add(p.point[0], p.point[1]);
  for (const auto& c : scene.curves) {
    if (const auto* circle = std::get_if<Circle>(&c.curve)) {
      const double cx = circle->center[0], cy = circle->center[1], r = circle->radius;
      box.add(cx - r, std::max(0.0, cy - r));
      box.add(cx + r, std::max(0.0, cy + r));
    }
  }
  const double w = std::max(box.xmax - box.xmin, 1e-9);
  const double h = std::max(box.ymax - box.ymin, 1e-9);
  const double mx = 0.5 * (box.xmin + box.xmax);
  const double my = 0.5 * (box.ymin + box.ymax);
  return Viewport{mx - 0.6 * w, mx + 0.6 * w, my - 0.6 * h, my + 0.6 * h};
}

std::string to_svg(const ConstructionScene& scene) {
  const Viewport v = scene_viewport(scene);
  const Mapper m{v, kWidthPx / (v.xmax - v.xmin)};
  const std::string width = num(kWidthPx);
  const std::string height = num(m.height());

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width + "\" height=\"" + height +
       "\" viewBox=\"0 0 " + width + " " + height + "\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + width + "\" height=\"" + height + "\" fill=\"white\"/>\n";

  // Model boundary; construction curves are clipped to the model.
  const bool disk = scene.model == SceneModel::Disk;
  s += "<defs><clipPath id=\"model\">";
  if (disk)
    s += "<rect x=\"0\" y=\"0\" width=\"" + width + "\" height=\"" + height + "\"/>";
  else
    s += "<rect x=\"0\" y=\"0\" width=\"" + width + "\" height=\"" + num(m.py(0.0)) + "\"/>";
  s += "</clipPath></defs>\n";
  if (disk) {
    s += "<circle cx=\"" + num(m.px(0.0)) + "\" cy=\"" + num(m.py(0.0)) + "\" r=\"" + num(m.scale) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  } else {
    s += "<line x1=\"0.000000\" y1=\"" + num(m.py(0.0)) + "\" x2=\"" + width + "\" y2=\"" + num(m.py(0.0)) +
         "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }

  s += "<g clip-path=\"url(#model)\" fill=\"none\" stroke-width=\"1\">\n";
  for (const auto& c : scene.curves) {
    const std::string meta = " data-label=\"" + escape(c.label) + "\" data-op=\"" + escape(c.operation) + "\"";
    const std::string stroke = std::string(" stroke=\"") + stroke_for(c.operation) + "\"";
    if (const auto* circle = std::get_if<Circle>(&c.curve)) {
      require_planar_scene(circle->center);
      s += "<circle cx=\"" + num(m.px(circle->center[0])) + "\" cy=\"" + num(m.py(circle->center[1])) + "\" r=\"" +
           num(circle->radius * m.scale) + "\"" + stroke + meta + "/>\n";
    } else if (const auto* line = std::get_if<Line>(&c.curve)) {
      require_planar_scene(line->point);
      Point a(2), b(2);
      if (!clip_line(v, line->point, line->direction, a, b)) continue;
      s += "<line x1=\"" + num(m.px(a[0])) + "\" y1=\"" + num(m.py(a[1])) + "\" x2=\"" + num(m.px(b[0])) + "\" y2=\"" +
           num(m.py(b[1])) + "\"" + stroke + meta + "/>\n";
    } else {
      fail(ErrorCode::DimensionMismatch, "scenes are planar");
    }
  }
  for (const auto& arc : scene.arcs) {
    const std::string meta = " data-label=\"" + escape(arc.label) + "\" data-op=\"" + escape(arc.operation) + "\"";
    const Point a = path_start(arc.path);
    const Point b = path_end(arc.path);
    if (const auto* p = std::get_if<ArcPath>(&arc.path)) {
      const double sweep = p->end_angle - p->start_angle;
      const int large = std::abs(sweep) > 3.14159265358979323846 ? 1 : 0;
      // The y axis flips, so counterclockwise in the plane is sweep-flag 0.
      const int flag = sweep > 0.0 ? 0 : 1;
      s += "<path d=\"M " + num(m.px(a[0])) + " " + num(m.py(a[1])) + " A " + num(p->radius * m.scale) + " " +
           num(p->radius * m.scale) + " 0 " + std::to_string(large) + " " + std::to_string(flag) + " " +
           num(m.px(b[0])) + " " + num(m.py(b[1])) + "\" stroke=\"black\" stroke-width=\"2.5\"" + meta + "/>\n";
    } else {
      s += "<line x1=\"" + num(m.px(a[0])) + "\" y1=\"" + num(m.py(a[1])) + "\" x2=\"" + num(m.px(b[0])) + "\" y2=\"" +
           num(m.py(b[1])) + "\" stroke=\"black\" stroke-width=\"2.5\"" + meta + "/>\n";
    }
  }
  s += "</g>\n";

  s += "<g font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const auto& p : scene.points) {
    if (!p.point.is_finite()) continue;
    require_planar_scene(p.point);
    const double x = m.px(p.point[0]);
    const double y = m.py(p.point[1]);
    s += "<circle cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3.000000\" fill=\"black\" data-op=\"" +
         escape(p.operation) + "\"/>\n";
    s += "<text x=\"" + num(x + 6.0) + "\" y=\"" + num(y - 6.0) + "\">" + escape(p.label) + "</text>\n";
  }
  s += "</g>\n";
  s += "</svg>\n";
  return s;
}

void render_svg(const ConstructionScene& scene, const std::string& path) {
  const std::string text = to_svg(scene);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) fail(ErrorCode::IoError, "write to " + path + " failed");
}

ConstructionScene disk_bisect_scene(const Point& x, const Point& y) {
  const BisectConstruction b = bisect_construction(x, y);
  const GeodesicSegment seg = geodesic_disk(x, y);
  ConstructionScene scene;
  scene.model = SceneModel::Disk;
  scene.curves.push_back({"carrier", "geodesic_disk", b.carrier});
  scene.curves.push_back({"bisector", "bisector_disk", b.bisector});
  scene.arcs.push_back({"[x,y]", "geodesic_disk", geodesic_path(seg)});
  scene.points.push_back({"x", "input", x});
  scene.points.push_back({"y", "input", y});
  scene.points.push_back({"z", "midpoint_disk", b.midpoint});
  return scene;
}

ConstructionScene half_midpoint_scene(const Point& x, const Point& y) {
  const HalfSpacePoint hx(x);
  const HalfSpacePoint hy(y);
  const GeodesicSegment seg = geodesic_half(hx, hy);
  ConstructionScene scene;
  scene.model = SceneModel::HalfPlane;
  scene.curves.push_back({"carrier", "geodesic_half", seg.carrier});
  scene.curves.push_back({"bisector", "bisector_half", bisector_half(hx, hy)});
  scene.arcs.push_back({"[x,y]", "geodesic_half", geodesic_path(seg)});
  scene.points.push_back({"x", "input", x});
  scene.points.push_back({"y", "input", y});
  scene.points.push_back({"z", "midpoint_half", midpoint_half(hx, hy)});
  return scene;
}

ConstructionScene geodesic_scene(SceneModel model, const Point& x, const Point& y) {
  ConstructionScene scene;
  scene.model = model;
  const GeodesicSegment seg =
      model == SceneModel::Disk ? geodesic_disk(x, y) : geodesic_half(HalfSpacePoint(x), HalfSpacePoint(y));
  const std::string op = model == SceneModel::Disk ? "geodesic_disk" : "geodesic_half";
  scene.curves.push_back({"carrier", op, seg.carrier});
  scene.arcs.push_back({"[x,y]", op, geodesic_path(seg)});
  scene.points.push_back({"x", "input", x});
  scene.points.push_back({"y", "input", y});
  for (const Point* ideal : {&seg.ideal_x, &seg.ideal_y})
    if (ideal->is_finite()) scene.points.push_back({ideal == &seg.ideal_x ? "x'" : "y'", op, *ideal});
  return scene;
}

}  // namespace hypgeo
