#include "eph/cycle.hpp"

#include "eph/errors.hpp"

#include <array>
#include <stdexcept>

namespace eph {

CycleContext::CycleContext(Sigma sigma_cycle, Rational s) : sigma_cycle_(sigma_cycle), s_(std::move(s)) {
  if (s_ == 0) throw std::invalid_argument("cycle context parameter s must be nonzero");
}

Cycle::Cycle(Rational k, Rational l, Rational n, Rational m)
    : k_(std::move(k)), l_(std::move(l)), n_(std::move(n)), m_(std::move(m)) {
  if (k_ == 0 && l_ == 0 && n_ == 0 && m_ == 0)
    throw std::invalid_argument("(0, 0, 0, 0) is not a point of the cycle space");
}

Cycle Cycle::scaled(const Rational& lambda) const {
  return {lambda * k_, lambda * l_, lambda * n_, lambda * m_};
}

bool projectively_equal(const Cycle& c, const Cycle& d) {
  // Rank-one test on the 2 x 4 matrix of the two quadruples.
  const std::array<const Rational*, 4> x{&c.k(), &c.l(), &c.n(), &c.m()};
  const std::array<const Rational*, 4> y{&d.k(), &d.l(), &d.n(), &d.m()};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (*x[i] * *y[j] != *x[j] * *y[i]) return false;
  return true;
}

std::string to_string(const Cycle& c) {
  return "(" + to_string(c.k()) + ", " + to_string(c.l()) + ", " + to_string(c.n()) + ", " + to_string(c.m()) + ")";
}

Rational eval(const Cycle& c, const Point& p, Sigma sigma) {
  return c.k() * (p.u * p.u - value(sigma) * p.v * p.v) - 2 * c.l() * p.u - 2 * c.n() * p.v + c.m();
}

bool on_cycle(const Cycle& c, const Point& p, Sigma sigma) { return eval(c, p, sigma) == 0; }

Matrix2 fscc_matrix(const Cycle& c, const CycleContext& ctx) {
  const Sigma s = ctx.sigma_cycle();
  Rational sn = ctx.s() * c.n();
  return {HyperNum(c.l(), sn, s), HyperNum::real(-c.m(), s), HyperNum::real(c.k(), s), HyperNum(-c.l(), sn, s)};
}

Cycle cycle_from_fscc(const Matrix2& x, const CycleContext& ctx) {
  bool shaped = x.b.is_real() && x.c.is_real() && x.a.im() == x.d.im() && x.a.re() == -x.d.re();
  if (!shaped) throw GeometryError("matrix does not represent a cycle");
  return {x.c.re(), x.a.re(), x.a.im() / ctx.s(), -x.b.re()};
}

Cycle similarity(const MoebiusMap& g, const Cycle& c, const CycleContext& ctx) {
  const Sigma cs = ctx.sigma_cycle();
  const Matrix2 f = fscc_matrix(c, ctx);

  if (g.is_real()) {
    Matrix2 gm = with_sigma(g.matrix(), cs);
    Matrix2 x = gm * f * adjugate(gm);
    return cycle_from_fscc(Rational(1 / g.det().re()) * x, ctx);
  }

  if (g.sigma() != cs)
    throw ContextError("hypercomplex map acts on cycles only when its algebra matches the cycle space");
  const Matrix2& gm = g.matrix();
  bool twist_left = (cs == Sigma::Hyperbolic) == (ctx.s() > 0);
  Matrix2 x = twist_left ? conj(gm) * f * adjugate(gm) : gm * f * adjugate(conj(gm));
  HyperNum dt = g.det();
  if (dt.is_real()) x = Rational(1 / dt.re()) * x;
  return cycle_from_fscc(x, ctx);
}

Rational det_inv(const Cycle& c, const CycleContext& ctx) {
  return value(ctx.sigma_cycle()) * ctx.s() * ctx.s() * c.n() * c.n() - c.l() * c.l() + c.m() * c.k();
}

HyperNum trace_inv(const Cycle& c, const CycleContext& ctx) {
  return {0, 2 * ctx.s() * c.n(), ctx.sigma_cycle()};
}

Rational radius_sq(const Cycle& c, const CycleContext& ctx) {
  if (c.is_line()) throw IsALine("radius of a straight line " + to_string(c));
  return -det_inv(c, ctx) / (c.k() * c.k());
}

Point centre(const Cycle& c, const CycleContext& ctx) {
  if (c.is_line()) throw IsALine("centre of a straight line " + to_string(c));
  Rational u = c.l() / c.k();
  if (ctx.sigma_cycle() == Sigma::Parabolic) return {u, 0};
  return {u, -value(ctx.sigma_cycle()) * c.n() / c.k()};
}

Cycle zero_radius_at(const Point& p, Sigma sigma) {
  Rational n = sigma == Sigma::Hyperbolic ? Rational(-p.v) : p.v;
  Rational m = p.u * p.u - value(sigma) * p.v * p.v;
  return {1, p.u, n, m};
}

bool is_zero_radius(const Cycle& c, const CycleContext& ctx) { return det_inv(c, ctx) == 0; }

Cycle normalize_k(const Cycle& c) {
  if (c.is_line()) throw IsALine("cannot normalise k of a straight line " + to_string(c));
  return c.scaled(1 / c.k());
}

Cycle canonicalize(const Cycle& c) {
  const std::array<const Rational*, 4> q{&c.k(), &c.l(), &c.n(), &c.m()};
  mpz_class den = 1;
  for (const Rational* r : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r->get_den_mpz_t());
  std::array<mpz_class, 4> ints;
  mpz_class g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ints[i] = q[i]->get_num() * (den / q[i]->get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  for (const mpz_class& z : ints) {
    if (z != 0) {
      if (z < 0) g = -g;
      break;
    }
  }
  return {Rational(ints[0] / g), Rational(ints[1] / g), Rational(ints[2] / g), Rational(ints[3] / g)};
}

}  // namespace eph
