#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "segskel/geom.hpp"
#include "segskel/neighborhood.hpp"
#include "segskel/solver.hpp"

namespace segskel {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Reads a scene: JSON {"segments": [[x1,y1,x2,y2], ...]} when the first
/// non-space byte is '{', otherwise whitespace text lines "x1 y1 x2 y2"
/// (blank lines and lines starting with '#' are skipped).
SegmentSet parse_segments(const std::string& path, bool normalize = false);
SegmentSet parse_segments_text(const std::string& content, bool normalize = false);

/// Maps the scene into [0,1]^2 preserving aspect ratio (anchored at the
/// bounding box minimum).
SegmentSet normalize_scene(const SegmentSet& S);

/// JSON with 17 significant digits per coordinate (exact double round-trip).
std::string write_segments_json(const SegmentSet& S);

enum class GraphKind { beta, gg, dt };

struct RunConfig {
  std::string input_path;
  GraphKind graph = GraphKind::beta;
  std::optional<double> beta;
  Variant variant = Variant::lune;
  std::optional<Closure> closure;  // resolved from beta when absent
  double epsilon = kDefaultEpsilon;
  int grid = 256;
  std::optional<std::string> svg_path;
  bool oracle = false;
  bool normalize = false;
};

/// Executes one CLI run: parse, validate, compute, emit JSON (and SVG when
/// requested). Returns the process exit code: 0 ok, 1 internal/config error,
/// 2 input violation.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Formats a double with up to 17 significant digits (shortest %.17g form).
std::string format_double(double v);

}  // namespace segskel
