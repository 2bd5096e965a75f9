#pragma once

#include "eph/algebra.hpp"
#include "eph/moebius.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace eph {

enum class Sheet : int { Plus = 1, Minus = -1 };

constexpr Sheet operator*(Sheet a, int sign) noexcept {
  return static_cast<int>(a) * sign > 0 ? Sheet::Plus : Sheet::Minus;
}

/// A point of the two-fold cover of the hyperbolic plane: two copies of
/// the plane glued along the light cone at infinity.
struct SheetedPoint {
  /// Throws ContextError unless z is a double number.
  SheetedPoint(HyperNum z, Sheet sheet);

  HyperNum z;
  Sheet sheet;

  friend bool operator==(const SheetedPoint&, const SheetedPoint&) = default;
};

/// (g.z, sheet * sign norm(cz + d)). g must have real entries and positive
/// determinant (ContextError otherwise). Throws OnLightConeAtInfinity when
/// cz + d is a zero divisor.
SheetedPoint act_sheeted(const MoebiusMap& g, const SheetedPoint& sp);

/// Upper half of the + sheet together with the lower half of the - sheet.
bool in_upper(const SheetedPoint& sp);

/// u^2 - v^2 > -1 on the + sheet, u^2 - v^2 < -1 on the - sheet.
bool in_disk(const SheetedPoint& sp);

/// u^2 - v^2 == -1 on either sheet.
bool on_unit_circle(const SheetedPoint& sp);

/// Cayley transform with the same sheet cocycle as act_sheeted. Throws
/// OnLightConeAtInfinity when iota z + 1 is a zero divisor.
SheetedPoint cayley_to_disk(const SheetedPoint& sp);

using MapFamily = std::function<MoebiusMap(const Rational&)>;

struct PathSample {
  Rational t;
  /// Empty when the sample is on the light cone at infinity.
  std::optional<HyperNum> z;
  std::optional<Sheet> sheet;

  bool on_cone() const { return !z.has_value(); }
};

struct PathTrace {
  std::vector<PathSample> samples;
  /// Sheet changes between consecutive finite samples.
  int flips = 0;
};

/// Follows family(t) . z along the grid, tagging each finite sample with
/// sheet * sign norm(c(t) z + d(t)). family(t_grid.front()) must be the
/// identity up to scale.
PathTrace continue_path(const MapFamily& family, const SheetedPoint& start, std::span<const Rational> t_grid);

}  // namespace eph
