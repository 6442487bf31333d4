#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "hypgeo/error.hpp"
#include "hypgeo/scene.hpp"

namespace hypgeo {
namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Scene, DiskBisectMatchesGolden) {
  const std::string svg = to_svg(disk_bisect_scene({0.5, 0.0}, {0.0, 0.5}));
  EXPECT_EQ(svg, slurp(HYPGEO_GOLDEN_DIR "/disk_bisect.svg"));
}

TEST(Scene, HalfMidpointMatchesGolden) {
  const std::string svg = to_svg(half_midpoint_scene({-1.0, 1.0}, {1.0, 1.0}));
  EXPECT_EQ(svg, slurp(HYPGEO_GOLDEN_DIR "/half_midpoint.svg"));
}

TEST(Scene, LabelsAndOperations) {
  const ConstructionScene s = disk_bisect_scene({0.5, 0.0}, {0.0, 0.5});
  const std::string svg = to_svg(s);
  EXPECT_EQ(count(svg, "data-op=\"input\""), 2u);
  EXPECT_NE(svg.find("data-label=\"bisector\""), std::string::npos);
  EXPECT_NE(svg.find("data-label=\"carrier\""), std::string::npos);
  EXPECT_EQ(svg.find("-0.000000"), std::string::npos);
  EXPECT_EQ(svg.find("nan"), std::string::npos);
}

TEST(Scene, EmptySceneDrawsBoundaryOnly) {
  const std::string disk = to_svg(ConstructionScene{SceneModel::Disk, {}, {}, {}});
  EXPECT_NE(disk.find("<circle cx=\"300.000000\" cy=\"300.000000\""), std::string::npos);
  EXPECT_EQ(count(disk, "<circle"), 1u);
  EXPECT_EQ(count(disk, "<path"), 0u);
  const std::string half = to_svg(ConstructionScene{SceneModel::HalfPlane, {}, {}, {}});
  EXPECT_EQ(count(half, "<line"), 1u);
  EXPECT_EQ(count(half, "<circle"), 0u);
}

TEST(Scene, GeodesicScenesInBothModels) {
  for (SceneModel m : {SceneModel::Disk, SceneModel::HalfPlane}) {
    const ConstructionScene s = geodesic_scene(m, {0.2, 0.6}, {-0.3, 0.4});
    // x, y and both finite ideal endpoints.
    EXPECT_EQ(s.points.size(), 4u);
    EXPECT_EQ(s.arcs.size(), 1u);
    const std::string svg = to_svg(s);
    EXPECT_EQ(svg, to_svg(s));
    EXPECT_EQ(svg.find("-0.000000"), std::string::npos);
  }
  // A vertical geodesic has its second endpoint at infinity.
  EXPECT_EQ(geodesic_scene(SceneModel::HalfPlane, {0.0, 1.0}, {0.0, 2.0}).points.size(), 3u);
}

TEST(Scene, UnwritablePathThrows) {
  try {
    render_svg(disk_bisect_scene({0.5, 0.0}, {0.0, 0.5}), "/nonexistent-dir/scene.svg");
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

}  // namespace
}  // namespace hypgeo
