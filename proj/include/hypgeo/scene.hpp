#pragma once

#include <string>
#include <vector>

#include "hypgeo/geom_core.hpp"
#include "hypgeo/quadrature.hpp"

namespace hypgeo {

enum class SceneModel { Disk, HalfPlane };

struct SceneCurve {
  std::string label;
  std::string operation;  // operation that produced the curve
  CircleOrLine curve;
};

struct ScenePoint {
  std::string label;
  std::string operation;
  Point point;
};

struct SceneArc {
  std::string label;
  std::string operation;
  PathPiece path;
};

/// A planar construction. Drawing order is boundary, curves, arcs, points,
/// each in insertion order.
struct ConstructionScene {
  SceneModel model = SceneModel::Disk;
  std::vector<SceneCurve> curves;
  std::vector<ScenePoint> points;
  std::vector<SceneArc> arcs;
};

struct Viewport {
  double xmin = -1.15;
  double xmax = 1.15;
  double ymin = -1.15;
  double ymax = 1.15;
};

/// Disk: [-1.15, 1.15]^2. Half-plane: 1.2 times the bounding box of the finite
/// objects (circles clipped to y >= 0), extended to contain the real axis.
Viewport scene_viewport(const ConstructionScene& scene);

/// Standalone SVG 1.1 document; coordinates printed with 6 decimals.
std::string to_svg(const ConstructionScene& scene);
/// Writes to_svg(scene) to path; throws IoError on failure.
void render_svg(const ConstructionScene& scene, const std::string& path);

/// Carrier, bisector, geodesic arc and midpoint of x, y in the disk.
ConstructionScene disk_bisect_scene(const Point& x, const Point& y);
/// Carrier, bisector, geodesic arc and midpoint of x, y in the upper half-plane.
ConstructionScene half_midpoint_scene(const Point& x, const Point& y);
/// Carrier and geodesic arc only.
ConstructionScene geodesic_scene(SceneModel model, const Point& x, const Point& y);

}  // namespace hypgeo
