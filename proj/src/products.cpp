#include "eph/products.hpp"

#include "eph/errors.hpp"

namespace eph {

Rational inner(const Cycle& c, const Cycle& d, const CycleContext& ctx) {
  return 2 * c.l() * d.l() - 2 * value(ctx.sigma_cycle()) * ctx.s() * ctx.s() * c.n() * d.n() -
         (c.m() * d.k() + c.k() * d.m());
}

bool is_orthogonal(const Cycle& c, const Cycle& d, const CycleContext& ctx) { return inner(c, d, ctx) == 0; }

Rational incidence_defect(const Cycle& c, const Point& p, Sigma sigma) {
  if (sigma == Sigma::Parabolic)
    throw Unsupported("incidence through zero-radius orthogonality is not available in the parabolic plane");
  return inner(c, zero_radius_at(p, sigma), CycleContext::matching(sigma));
}

}  // namespace eph
