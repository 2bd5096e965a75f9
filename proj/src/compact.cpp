#include "eph/compact.hpp"

#include "eph/errors.hpp"
#include "eph/products.hpp"

namespace eph {

CPoint::CPoint(Cycle q, Sigma sigma) : q_(std::move(q)), sigma_(sigma) {
  if (!is_zero_radius(q_, CycleContext::matching(sigma_)))
    throw NotAPoint("quadruple " + to_string(q_) + " has nonzero determinant");
}

bool projectively_equal(const CPoint& x, const CPoint& y) {
  return x.sigma() == y.sigma() && projectively_equal(x.quadruple(), y.quadruple());
}

CPoint z_infinity(Sigma sigma) { return {Cycle(0, 0, 0, 1), sigma}; }

CPoint embed(const Point& p, Sigma sigma) { return {zero_radius_at(p, sigma), sigma}; }

std::optional<Point> unembed(const CPoint& cp) {
  const Cycle& q = cp.quadruple();
  if (q.is_line()) return std::nullopt;
  if (cp.sigma() == Sigma::Parabolic) return Point{q.l() / q.k(), q.n() / q.k()};
  return centre(q, CycleContext::matching(cp.sigma()));
}

std::optional<Point> unembed(const Cycle& q, Sigma sigma) { return unembed(CPoint(q, sigma)); }

CPoint act(const MoebiusMap& g, const CPoint& cp) {
  return {similarity(g, cp.quadruple(), CycleContext::matching(cp.sigma())), cp.sigma()};
}

Cycle invert_unit(const Cycle& c) {
  const CycleContext ctx;
  Matrix2 u = fscc_matrix(Cycle(1, 0, 0, -1), ctx);
  return cycle_from_fscc(u * conj(fscc_matrix(c, ctx)) * adjugate(u), ctx);
}

bool EquivalenceChecks::agree() const {
  if (orthogonal_to_origin && *orthogonal_to_origin != on_origin_cone) return false;
  return on_origin_cone == inversion_singular && on_origin_cone == image_orthogonal_to_infinity;
}

EquivalenceChecks equivalence_checks(const Point& p, Sigma sigma) {
  const CycleContext ctx = CycleContext::matching(sigma);
  const Point origin{0, 0};
  EquivalenceChecks out;
  out.on_origin_cone = on_cycle(zero_radius_at(origin, sigma), p, sigma);
  if (sigma != Sigma::Parabolic)
    out.orthogonal_to_origin = is_orthogonal(embed(p, sigma).quadruple(), embed(origin, sigma).quadruple(), ctx);
  out.inversion_singular = singular_set(MoebiusMap::real(0, 1, 1, 0, sigma)).contains(p.u, p.v);
  out.image_orthogonal_to_infinity =
      is_orthogonal(invert_unit(zero_radius_at(p, sigma)), z_infinity(sigma).quadruple(), ctx);
  return out;
}

bool on_surface(const SurfacePoint& sp, Sigma sigma) {
  return sp.x * sp.x - value(sigma) * sp.y * sp.y + sp.w * sp.w == 1;
}

SurfacePoint lift(const Point& p, Sigma sigma) {
  Rational n = p.u * p.u - value(sigma) * p.v * p.v;
  Rational den = 1 + n;
  if (den == 0) throw AtPole("(" + to_string(p.u) + ", " + to_string(p.v) + ") lifts to the pole");
  return {2 * p.u / den, 2 * p.v / den, (n - 1) / den};
}

Point project(const SurfacePoint& sp, Sigma sigma) {
  if (!on_surface(sp, sigma)) throw GeometryError("point is not on the model surface");
  if (sp.w == 1) throw AtPole("cannot project from the pole");
  Rational scale = 1 - sp.w;
  return {sp.x / scale, sp.y / scale};
}

}  // namespace eph
