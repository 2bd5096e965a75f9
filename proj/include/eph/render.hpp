#pragma once

#include "eph/cycle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eph::render {

/// World-coordinate window. Defaults to [-3, 3]^2.
struct Viewport {
  Rational x0 = -3, x1 = 3, y0 = -3, y1 = 3;
  int samples = 400;

  /// Throws std::invalid_argument for empty ranges or samples < 2.
  void validate() const;
};

/// "x0:x1:y0:y1".
Viewport parse_viewport(const std::string& text);

struct Style {
  std::string stroke = "black";
  /// Stroke width in world units; <= 0 picks one from the viewport size.
  double width = 0;
};

struct FloatPoint {
  double u, v;
};

enum class Shape { Empty, Circle, Dot, Parabola, VerticalLines, Hyperbola, NullLines, Line };

std::string_view name(Shape s);

/// Float geometry of a cycle's point set inside a viewport. The shape is
/// classified exactly; only the sampled coordinates are floating point.
struct CycleDrawing {
  Shape shape = Shape::Empty;
  struct Circle {
    double cx, cy, r;
  };
  std::optional<Circle> circle;
  std::vector<FloatPoint> dots;
  /// Curves and lines clipped to the viewport; each entry is one connected
  /// run.
  std::vector<std::vector<FloatPoint>> polylines;
  std::string note;
};

CycleDrawing draw_cycle(const Cycle& c, Sigma sigma, const Viewport& vp);

/// <g class="cycle"> fragment carrying the canonical quadruple in data-q.
std::string render_cycle(const Cycle& c, Sigma sigma, const Viewport& vp, const Style& style = {});

/// Standalone SVG 1.1 document with a single cycle.
std::string cycle_document(const Cycle& c, Sigma sigma, const Viewport& vp);

struct GridSpec {
  Rational spacing = Rational(1, 2);
  /// Lines u = j*spacing and v = j*spacing with |j*spacing| <= extent.
  Rational extent = 3;
};

/// The grid lines as k = 0 cycles: vertical lines first, then horizontal.
std::vector<Cycle> grid_lines(const GridSpec& grid);

/// Grid lines reflected in the unit cycle, drawn together with the unit
/// cycle (layer "unit-cycle") and the image of the cycle at infinity
/// (layer "infinity-image").
std::string invert_grid(Sigma sigma, const GridSpec& grid, const Viewport& vp);

struct TimelapseInput {
  std::vector<Point> points;
  std::vector<Cycle> cycles;
};

/// Points in the future cone of the origin and two cycles through (0, 1).
TimelapseInput default_timelapse_input();

struct Frame {
  std::string label;
  double t;
  std::string svg;
};

/// Eight hyperbolic frames of time_reversal(t) for
/// t = 0, e^-3, e^-2, e^-1, 1, e, e^2, e^3. Each transcendental t is
/// replaced by the exact rational value of its double, so the maps
/// themselves are evaluated exactly.
std::vector<Frame> timelapse(const TimelapseInput& input, const Viewport& vp);

}  // namespace eph::render
