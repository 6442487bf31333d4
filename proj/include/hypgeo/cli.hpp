#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hypgeo/point.hpp"

namespace hypgeo::cli {

enum class Command { Dist, Midpoint, Geodesic, Bisect, Ball, Bounds, Verify, Render };
enum class Model { Ball, Half };

std::string_view to_string(Command c);
std::string_view to_string(Model m);

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Malformed input: unparsable points, wrong arity or dimension, missing options.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Request {
  Command command = Command::Dist;
  Model model = Model::Ball;
  std::size_t dim = 2;
  std::vector<Point> points;
  std::optional<double> radius;  // `ball` only
  std::size_t samples = 0;       // 0 keeps the suite defaults
  std::uint64_t seed = 42;
  double tol = 1e-12;  // equality threshold for bound slacks
  bool json = false;
  std::string svg_path;  // empty: no SVG output
  std::string suite = "all";
};

struct Outcome {
  int exit_code = kExitOk;
  std::string document;  // one self-describing record, newline terminated
};

/// Parses "(a,b);(c,d)". Every point must have `dim` finite coordinates.
std::vector<Point> parse_points(std::string_view text, std::size_t dim);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

/// Dispatches the request. Never throws: module errors map to exit 1 and
/// usage errors to exit 2, both with an `error` field in the document.
/// `color` highlights PASS and FAIL in text output.
Outcome run(const Request& request, bool color = false);

/// Full command line front end: parses args (without the program name),
/// writes the document to out and diagnostics to err, returns the exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color);

}  // namespace hypgeo::cli
