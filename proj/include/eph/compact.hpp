#pragma once

#include "eph/cycle.hpp"
#include "eph/moebius.hpp"

#include <optional>

namespace eph {

/// A point of the compactified plane: a quadruple with zero determinant in
/// the matching cycle context (sigma_cycle = sigma, s = 1). Finite points
/// have k != 0; the k = 0 stratum is the zero-radius cycle at infinity,
/// which for the hyperbolic plane keeps the direction data (l, n).
class CPoint {
public:
  /// Throws NotAPoint unless det_inv(q) == 0.
  CPoint(Cycle q, Sigma sigma);

  const Cycle& quadruple() const noexcept { return q_; }
  Sigma sigma() const noexcept { return sigma_; }
  bool is_ideal() const { return q_.k() == 0; }

private:
  Cycle q_;
  Sigma sigma_;
};

bool projectively_equal(const CPoint& x, const CPoint& y);

/// (0, 0, 0, 1).
CPoint z_infinity(Sigma sigma);

/// zero_radius_at(p, sigma) as a compactified point.
CPoint embed(const Point& p, Sigma sigma);

/// Finite point, or std::nullopt for points at infinity (k == 0). In the
/// parabolic plane v is read from the n slot.
std::optional<Point> unembed(const CPoint& cp);
/// Same for a raw quadruple; throws NotAPoint if its determinant is nonzero.
std::optional<Point> unembed(const Cycle& q, Sigma sigma);

/// Compactified Moebius action: total, agrees with apply() on finite
/// non-singular points and sends the singular set of g to infinity.
CPoint act(const MoebiusMap& g, const CPoint& cp);

/// Reflection in the unit cycle U = (1, 0, 0, -1): U conj(C) adj(U), which
/// is (k, l, n, m) -> (m, l, n, k). Involutive.
Cycle invert_unit(const Cycle& c);

/// The equivalent descriptions of points whose inversion lands on the cycle
/// at infinity.
struct EquivalenceChecks {
  /// p lies on the zero-radius cycle at the origin (norm(p) == 0).
  bool on_origin_cone = false;
  /// embed(p) is orthogonal to embed(0, 0); not evaluated for sigma = 0.
  std::optional<bool> orthogonal_to_origin;
  /// z -> 1/z is singular at p.
  bool inversion_singular = false;
  /// invert_unit(embed(p)) is orthogonal to the cycle at infinity.
  bool image_orthogonal_to_infinity = false;

  bool agree() const;
};

EquivalenceChecks equivalence_checks(const Point& p, Sigma sigma);

/// Point on the model surface x^2 - sigma y^2 + w^2 = 1: sphere, cylinder
/// (y free) or one-sheet hyperboloid.
struct SurfacePoint {
  Rational x, y, w;
  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
};

bool on_surface(const SurfacePoint& sp, Sigma sigma);

/// (2u, 2v, N - 1) / (1 + N) with N = u^2 - sigma v^2. Throws AtPole on
/// the hyperbola N = -1.
SurfacePoint lift(const Point& p, Sigma sigma);

/// (x, y) / (1 - w). Throws AtPole for w == 1 and GeometryError for
/// points off the surface.
Point project(const SurfacePoint& sp, Sigma sigma);

}  // namespace eph
