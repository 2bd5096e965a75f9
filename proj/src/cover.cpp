#include "eph/cover.hpp"

#include "eph/errors.hpp"

namespace eph {

namespace {

void require_hyperbolic(Sigma s) {
  if (s != Sigma::Hyperbolic) throw ContextError("the double cover is defined for the hyperbolic plane only");
}

SheetedPoint move(const MoebiusMap& g, const SheetedPoint& sp) {
  require_hyperbolic(g.sigma());
  Rational den_norm = norm(g.denominator(sp.z));
  if (den_norm == 0) throw OnLightConeAtInfinity("image of " + to_string(sp.z) + " is on the light cone at infinity");
  return {*apply(g, sp.z), sp.sheet * sign(den_norm)};
}

}  // namespace

SheetedPoint::SheetedPoint(HyperNum z_, Sheet sheet_) : z(std::move(z_)), sheet(sheet_) {
  require_hyperbolic(z.sigma());
}

SheetedPoint act_sheeted(const MoebiusMap& g, const SheetedPoint& sp) {
  if (!g.is_real()) throw ContextError("sheeted action needs a real matrix");
  if (g.det().re() <= 0) throw ContextError("sheeted action needs a positive determinant");
  return move(g, sp);
}

bool in_upper(const SheetedPoint& sp) {
  int v = sign(sp.z.im());
  return v != 0 && v == static_cast<int>(sp.sheet);
}

bool in_disk(const SheetedPoint& sp) {
  Rational n = norm(sp.z);
  return sp.sheet == Sheet::Plus ? n > -1 : n < -1;
}

bool on_unit_circle(const SheetedPoint& sp) { return norm(sp.z) == -1; }

SheetedPoint cayley_to_disk(const SheetedPoint& sp) { return move(cayley(), sp); }

PathTrace continue_path(const MapFamily& family, const SheetedPoint& start, std::span<const Rational> t_grid) {
  PathTrace trace;
  if (t_grid.empty()) return trace;
  const MoebiusMap first = family(t_grid.front());
  require_hyperbolic(first.sigma());
  if (!projectively_equal(first, MoebiusMap::identity(Sigma::Hyperbolic)))
    throw GeometryError("path family must start at the identity");

  std::optional<Sheet> last;
  for (const Rational& t : t_grid) {
    MoebiusMap g = family(t);
    require_hyperbolic(g.sigma());
    PathSample sample{t, std::nullopt, std::nullopt};
    Rational den_norm = norm(g.denominator(start.z));
    if (den_norm != 0) {
      sample.z = apply(g, start.z);
      sample.sheet = start.sheet * sign(den_norm);
      if (last && *last != *sample.sheet) ++trace.flips;
      last = sample.sheet;
    }
    trace.samples.push_back(std::move(sample));
  }
  return trace;
}

}  // namespace eph
