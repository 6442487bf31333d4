#include "hypgeo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypgeo/bounds.hpp"
#include "hypgeo/disk_model.hpp"
#include "hypgeo/error.hpp"
#include "hypgeo/halfplane_model.hpp"
#include "hypgeo/scene.hpp"
#include "hypgeo/verify.hpp"

namespace hypgeo::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kCommands[] = {"dist", "midpoint", "geodesic", "bisect", "ball", "bounds", "verify", "render"};
constexpr std::string_view kModels[] = {"ball", "half"};

// ---------------------------------------------------------------------------
// Document values.

Json point_json(const Point& p) {
  if (p.is_infinity()) return "inf";
  Json a = Json::array();
  for (double c : p.coords()) a.push_back(c);
  return a;
}

Json curve_json(const CircleOrLine& c) {
  Json j;
  if (const auto* circle = std::get_if<Circle>(&c)) {
    j["type"] = "circle";
    j["center"] = point_json(circle->center);
    j["radius"] = circle->radius;
  } else if (const auto* line = std::get_if<Line>(&c)) {
    j["type"] = "line";
    j["point"] = point_json(line->point);
    j["direction"] = point_json(line->direction);
  } else {
    const auto& plane = std::get<Hyperplane>(c);
    j["type"] = "hyperplane";
    j["point"] = point_json(plane.point);
    j["normal"] = point_json(plane.normal);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Text rendering: one "key: value" line per scalar, nested blocks indented.

bool is_numeric_array(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
}

std::string scalar_text(const Json& j, bool color) {
  if (j.is_number_float()) return format_double(j.get<double>());
  if (j.is_number()) return j.dump();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "none";
  if (is_numeric_array(j)) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i], false);
    return s + ")";
  }
  std::string s = j.get<std::string>();
  if (color && s == "PASS") return "\x1b[32mPASS\x1b[0m";
  if (color && s == "FAIL") return "\x1b[31mFAIL\x1b[0m";
  return s;
}

bool is_scalar(const Json& j) { return !j.is_structured() || is_numeric_array(j); }

void render_text(const Json& j, const std::string& indent, bool color, std::string& out);

void render_item(const Json& item, const std::string& indent, bool color, std::string& out) {
  if (is_scalar(item)) {
    out += indent + "- " + scalar_text(item, color) + "\n";
    return;
  }
  // First key shares the dash line; the rest align under it.
  std::string block;
  render_text(item, indent + "  ", color, block);
  if (block.size() >= indent.size() + 2) block.replace(indent.size(), 2, "- ");
  out += block;
}

void render_text(const Json& j, const std::string& indent, bool color, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_scalar(value)) {
        out += indent + key + ": " + scalar_text(value, color) + "\n";
      } else if (value.empty()) {
        out += indent + key + ": " + (value.is_array() ? "[]" : "{}") + "\n";
      } else {
        out += indent + key + ":\n";
        render_text(value, indent + "  ", color, out);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) render_item(item, indent, color, out);
  } else {
    out += indent + scalar_text(j, color) + "\n";
  }
}

// Non-finite doubles have no JSON form; they are written as strings.
Json json_safe(const Json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<double>())) {
    const double v = j.get<double>();
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  }
  if (!j.is_structured()) return j;
  Json copy = j;
  for (auto& e : copy) e = json_safe(e);
  return copy;
}

std::string emit(const Json& doc, bool json, bool color) {
  if (json) return json_safe(doc).dump(2) + "\n";
  std::string out;
  render_text(doc, "", color, out);
  return out;
}

// ---------------------------------------------------------------------------
// Request validation.

void require_points(const Request& r, std::size_t count) {
  if (r.points.size() != count)
    throw UsageError(std::string(to_string(r.command)) + " expects " + std::to_string(count) + " point" +
                     (count == 1 ? "" : "s") + ", got " + std::to_string(r.points.size()));
}

void require_planar(const Request& r) {
  if (r.dim != 2) fail(ErrorCode::DimensionMismatch, std::string(to_string(r.command)) + " is planar; use --dim 2");
}

void require_in_model(const Request& r) {
  for (const auto& p : r.points) {
    if (r.model == Model::Ball && !(norm2(p) < 1.0)) fail(ErrorCode::DomainError, "point outside the unit ball");
    if (r.model == Model::Half) (void)HalfSpacePoint(p);
  }
}

double distance(const Request& r, const Point& x, const Point& y) {
  return r.model == Model::Ball ? rho_ball(x, y) : rho_half(HalfSpacePoint(x), HalfSpacePoint(y));
}

Point midpoint(const Request& r, const Point& x, const Point& y) {
  return r.model == Model::Ball ? midpoint_ball(x, y) : midpoint_half(HalfSpacePoint(x), HalfSpacePoint(y));
}

// ---------------------------------------------------------------------------
// Commands. Each fills doc["result"].

void cmd_dist(const Request& r, Json& res) {
  require_points(r, 2);
  res["rho"] = distance(r, r.points[0], r.points[1]);
}

void cmd_midpoint(const Request& r, Json& res) {
  require_points(r, 2);
  const Point& x = r.points[0];
  const Point& y = r.points[1];
  const Point z = midpoint(r, x, y);
  res["midpoint"] = point_json(z);
  res["rho_xy"] = distance(r, x, y);
  res["rho_xz"] = distance(r, x, z);
  res["rho_zy"] = distance(r, z, y);
  if (!r.svg_path.empty()) {
    require_planar(r);
    render_svg(r.model == Model::Ball ? disk_bisect_scene(x, y) : half_midpoint_scene(x, y), r.svg_path);
    res["svg"] = r.svg_path;
  }
}

void cmd_geodesic(const Request& r, Json& res) {
  require_points(r, 2);
  require_planar(r);
  const Point& x = r.points[0];
  const Point& y = r.points[1];
  const GeodesicSegment seg =
      r.model == Model::Ball ? geodesic_disk(x, y) : geodesic_half(HalfSpacePoint(x), HalfSpacePoint(y));
  res["carrier"] = curve_json(seg.carrier);
  res["ideal_x"] = point_json(seg.ideal_x);
  res["ideal_y"] = point_json(seg.ideal_y);
  res["rho"] = distance(r, x, y);
  if (!r.svg_path.empty()) {
    render_svg(geodesic_scene(r.model == Model::Ball ? SceneModel::Disk : SceneModel::HalfPlane, x, y), r.svg_path);
    res["svg"] = r.svg_path;
  }
}

void cmd_bisect(const Request& r, Json& res) {
  require_points(r, 2);
  const Point& x = r.points[0];
  const Point& y = r.points[1];
  const bool ball = r.model == Model::Ball;
  res["bisector"] = curve_json(ball ? bisector_disk(x, y) : bisector_half(HalfSpacePoint(x), HalfSpacePoint(y)));
  if (r.dim == 2) {
    const GeodesicSegment seg = ball ? geodesic_disk(x, y) : geodesic_half(HalfSpacePoint(x), HalfSpacePoint(y));
    res["carrier"] = curve_json(seg.carrier);
  }
  res["midpoint"] = point_json(midpoint(r, x, y));
  if (!r.svg_path.empty()) {
    require_planar(r);
    render_svg(ball ? disk_bisect_scene(x, y) : half_midpoint_scene(x, y), r.svg_path);
    res["svg"] = r.svg_path;
  }
}

void cmd_ball(const Request& r, Json& res) {
  require_points(r, 1);
  if (!r.radius) throw UsageError("ball requires --radius");
  const Point& x = r.points[0];
  const double radius = *r.radius;
  if (r.model == Model::Ball) {
    const EuclideanBallView v = ball_to_euclidean(x, radius);
    res["euclidean_center"] = point_json(v.euclidean_center);
    res["euclidean_radius"] = v.euclidean_radius;
    res["tanh_half_radius"] = v.t;
    if (norm2(x) > 0.0) {
      const ApollonianBall a = sphere_to_apollonian(x, radius);
      Json apo;
      apo["base_x"] = point_json(a.base_x);
      apo["base_y"] = point_json(a.base_y);
      apo["ratio"] = a.ratio;
      res["apollonian"] = apo;
    }
  } else {
    const Circle c = ball_half_to_euclidean(HalfSpacePoint(x), radius);
    res["euclidean_center"] = point_json(c.center);
    res["euclidean_radius"] = c.radius;
  }
}

void cmd_bounds(const Request& r, Json& res) {
  require_points(r, 2);
  const Point& x = r.points[0];
  const Point& y = r.points[1];
  const bool ball = r.model == Model::Ball;
  const BoundReport rep = ball ? ball_bound_report(x, y) : half_lower_bounds(HalfSpacePoint(x), HalfSpacePoint(y));
  res["rho"] = rep.rho;
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j;
    j["name"] = e.name;
    j["kind"] = std::string(to_string(e.kind));
    j["bound"] = e.bound_value;
    j["exact"] = e.exact_value;
    j["slack"] = e.slack;
    j["applicable"] = e.applicable;
    j["equality"] = e.applicable && std::abs(e.slack) <= r.tol;
    if (!e.reason.empty()) j["reason"] = e.reason;
    entries.push_back(j);
  }
  res["entries"] = entries;
  res["valid"] = rep.valid(r.tol);
  res["worst_slack"] = rep.worst_slack();
  if (ball) {
    const RemarkOrdering o = remark_ordering(x, y);
    Json ord;
    ord["c2"] = o.c2;
    ord["c3"] = o.c3;
    ord["c5"] = o.c5;
    ord["c6"] = o.c6;
    ord["c6_le_c5"] = o.c6_le_c5();
    ord["c5_le_c3"] = o.c5_le_c3();
    ord["c3_le_c2"] = o.c3_le_c2();
    res["ordering"] = ord;
  } else {
    res["h2_beats_h1"] = rep.h2_beats_h1;
  }
}

// Smallest distance of a check's samples to the violated side; negative on failure.
double margin(const Check& c) {
  if (c.stats.count == 0) return -HUGE_VAL;
  return std::min(c.upper - c.stats.max, c.stats.min - c.lower);
}

void cmd_verify(const Request& r, Json& res) {
  if (!r.points.empty()) throw UsageError("verify takes no points");
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), r.suite) == names.end()) throw UsageError("unknown suite: " + r.suite);
  VerifyOptions opts;
  opts.seed = r.seed;
  opts.samples = r.samples;
  const auto results = run_suite(r.suite, opts);

  std::size_t passed = 0;
  Json failed = Json::array();
  Json criteria = Json::array();
  for (const auto& c : results) {
    Json jc;
    jc["id"] = c.id;
    jc["title"] = c.title;
    jc["status"] = c.passed() ? "PASS" : "FAIL";
    std::size_t ok = 0, bad = 0;
    double worst = HUGE_VAL;
    Json checks = Json::array();
    for (const auto& k : c.checks) {
      Json jk;
      jk["label"] = k.label;
      jk["samples"] = k.stats.count;
      jk["min"] = k.stats.min;
      jk["argmin"] = k.stats.argmin;
      jk["max"] = k.stats.max;
      jk["argmax"] = k.stats.argmax;
      jk["positive"] = k.stats.positive;
      if (k.asserted) {
        jk["lower"] = k.lower;
        jk["upper"] = k.upper;
        jk["slack"] = margin(k);
        jk["status"] = k.passed() ? "PASS" : "FAIL";
        (k.passed() ? ok : bad) += 1;
        worst = std::min(worst, margin(k));
      } else {
        jk["status"] = "info";
      }
      checks.push_back(jk);
    }
    jc["checks_passed"] = ok;
    jc["checks_failed"] = bad;
    jc["worst_slack"] = worst;
    jc["checks"] = checks;
    if (!c.notes.empty()) jc["notes"] = c.notes;
    criteria.push_back(jc);
    if (c.passed())
      ++passed;
    else
      failed.push_back(c.id);
  }
  res["criteria_passed"] = passed;
  res["criteria_failed"] = failed.size();
  res["failed"] = failed;
  res["status"] = failed.empty() ? "PASS" : "FAIL";
  res["criteria"] = criteria;
}

void cmd_render(const Request& r, Json& res) {
  require_points(r, 2);
  if (r.svg_path.empty()) throw UsageError("render requires --svg PATH");
  require_planar(r);
  const Point& x = r.points[0];
  const Point& y = r.points[1];
  render_svg(r.model == Model::Ball ? disk_bisect_scene(x, y) : half_midpoint_scene(x, y), r.svg_path);
  res["scene"] = r.model == Model::Ball ? "disk bisect" : "half-plane midpoint";
  res["svg"] = r.svg_path;
}

Json echo(const Request& r) {
  Json doc;
  doc["command"] = std::string(to_string(r.command));
  doc["model"] = std::string(to_string(r.model));
  doc["dim"] = r.dim;
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(point_json(p));
  doc["points"] = pts;
  Json opts;
  opts["seed"] = r.seed;
  opts["samples"] = r.samples;
  opts["tol"] = r.tol;
  if (r.radius) opts["radius"] = *r.radius;
  if (r.command == Command::Verify) opts["suite"] = r.suite;
  if (!r.svg_path.empty()) opts["svg"] = r.svg_path;
  doc["options"] = opts;
  return doc;
}

}  // namespace

std::string_view to_string(Command c) { return kCommands[static_cast<int>(c)]; }
std::string_view to_string(Model m) { return kModels[static_cast<int>(m)]; }

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<Point> parse_points(std::string_view text, std::size_t dim) {
  std::vector<Point> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw UsageError("malformed points: expected '" + std::string(1, c) + "' at offset " + std::to_string(i));
    ++i;
  };
  skip_ws();
  if (i == text.size()) return out;
  while (true) {
    expect('(');
    std::vector<double> coords;
    while (true) {
      skip_ws();
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
      if (ec != std::errc() || !std::isfinite(v))
        throw UsageError("malformed points: bad number at offset " + std::to_string(i));
      i = static_cast<std::size_t>(ptr - text.data());
      coords.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    expect(')');
    if (coords.size() != dim)
      throw UsageError("point " + std::to_string(out.size() + 1) + " has " + std::to_string(coords.size()) +
                       " coordinates, expected " + std::to_string(dim));
    out.emplace_back(std::span<const double>(coords));
    skip_ws();
    if (i == text.size()) break;
    expect(';');
  }
  return out;
}

Outcome run(const Request& r, bool color) {
  Json doc = echo(r);
  Json res = Json::object();
  Outcome outcome;
  try {
    if (r.dim < 2) throw UsageError("--dim must be at least 2");
    for (const auto& p : r.points)
      if (p.dim() != r.dim) throw UsageError("point dimension does not match --dim");
    if (r.command != Command::Verify) require_in_model(r);
    switch (r.command) {
      case Command::Dist: cmd_dist(r, res); break;
      case Command::Midpoint: cmd_midpoint(r, res); break;
      case Command::Geodesic: cmd_geodesic(r, res); break;
      case Command::Bisect: cmd_bisect(r, res); break;
      case Command::Ball: cmd_ball(r, res); break;
      case Command::Bounds: cmd_bounds(r, res); break;
      case Command::Verify: cmd_verify(r, res); break;
      case Command::Render: cmd_render(r, res); break;
    }
    doc["status"] = "ok";
    doc["result"] = res;
  } catch (const UsageError& e) {
    outcome.exit_code = kExitUsage;
    doc["status"] = "error";
    doc["error"] = Json{{"code", "UsageError"}, {"message", e.what()}};
  } catch (const GeometryError& e) {
    outcome.exit_code = kExitDomain;
    doc["status"] = "error";
    doc["error"] = Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  }
  outcome.document = emit(doc, r.json, color);
  return outcome;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Hyperbolic distance, midpoint and bound computations in the ball and half-space models."};
  app.name("hypgeo");
  std::string command;
  std::string model = "ball";
  std::string points;
  Request r;
  double radius = 0.0;
  app.add_option("command", command, "dist | midpoint | geodesic | bisect | ball | bounds | verify | render")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kCommands), std::end(kCommands))));
  app.add_option("--model", model, "ball (unit ball) or half (upper half-space)")
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(kModels), std::end(kModels))));
  app.add_option("--dim", r.dim, "dimension n >= 2")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  app.add_option("--points", points, "points as \"(a,b);(c,d)\"");
  auto* radius_opt = app.add_option("--radius", radius, "hyperbolic radius for `ball`")->check(CLI::PositiveNumber);
  app.add_option("--samples", r.samples, "pairs per verify sweep (0: suite defaults)");
  app.add_option("--seed", r.seed, "seed for every sampled quantity");
  app.add_option("--tol", r.tol, "equality threshold for bound slacks")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", r.json, "emit JSON instead of text");
  app.add_option("--svg", r.svg_path, "write the construction scene to PATH");
  app.add_option("--suite", r.suite, "verify suite: golden, quadrature, midpoint, orthogonality, apollonian, "
                                     "bounds, chord, mobius, remark or all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hypgeo: " << e.what() << "\n";
    return kExitUsage;
  }

  r.command = static_cast<Command>(std::find(std::begin(kCommands), std::end(kCommands), command) - std::begin(kCommands));
  r.model = model == "half" ? Model::Half : Model::Ball;
  if (*radius_opt) r.radius = radius;
  Outcome outcome;
  try {
    r.points = parse_points(points, r.dim);
    outcome = run(r, color && !r.json);
  } catch (const UsageError& e) {
    Json doc = echo(r);
    doc["status"] = "error";
    doc["error"] = Json{{"code", "UsageError"}, {"message", e.what()}};
    outcome = {kExitUsage, emit(doc, r.json, false)};
  }
  out << outcome.document;
  if (outcome.exit_code != kExitOk) err << "hypgeo: exit " << outcome.exit_code << "\n";
  return outcome.exit_code;
}

}  // namespace hypgeo::cli
